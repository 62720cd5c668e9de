#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace partrev::detail
{

struct numbered_line
{
  std::size_t number; /* 1-based */
  std::string text;   /* comment stripped, trimmed */
};

std::string_view trim( std::string_view s );

/*! \brief Reads all lines, dropping `#` comments and blank lines. */
std::vector<numbered_line> read_lines( std::istream& in );

/*! \brief Splits on commas and whitespace; empty tokens are dropped. */
std::vector<std::string> split_list( std::string_view s );

/*! \brief Splits `key: value`; returns nullopt when there is no colon. */
std::optional<std::pair<std::string, std::string>> split_key_value( std::string_view line );

struct pla_block
{
  uint32_t in_width{};
  uint32_t out_width{};
  /* one entry per input value; nullopt marks a `-` (unassigned) row */
  std::vector<std::optional<uint32_t>> rows;
  /* index of the first line after the block (past `.e` if present) */
  std::size_t next{};
};

/*! \brief Parses a PLA-style table from `lines[begin, end)`.
 *
 * Expects `.i n` and `.o m` headers, then 2^n rows `<in bits> <out bits>` in
 * ascending input order; `.p k` and a trailing `.e` are accepted.
 */
pla_block parse_pla( std::vector<numbered_line> const& lines, std::size_t begin, std::size_t end,
                     std::string const& source, bool allow_dashes, std::size_t last_line );

} // namespace partrev::detail
