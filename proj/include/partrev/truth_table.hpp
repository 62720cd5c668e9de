#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace partrev
{

/*! \brief Largest supported input or output width; every check enumerates all 2^n rows. */
inline constexpr uint32_t max_width = 20u;

/*! \brief Fixed-width bit vector of 0..20 bits; width 0 is the empty word.
 *
 * Bit strings are written most-significant bit first, so `bit_word::parse( "1001" )`
 * has value 9 and width 4.
 */
class bit_word
{
public:
  bit_word( uint32_t value, uint32_t width );

  static bit_word parse( std::string_view bits );

  uint32_t value() const noexcept { return value_; }
  uint32_t width() const noexcept { return width_; }

  /*! \brief Bit `i`, counting from the least-significant bit. */
  bool bit( uint32_t i ) const;

  std::string to_string() const;

  friend bool operator==( bit_word const&, bit_word const& ) = default;

private:
  uint32_t value_;
  uint32_t width_;
};

/*! \brief Formats `value` as `width` bits, MSB first. */
std::string to_bits( uint32_t value, uint32_t width );

/*! \brief Exhaustive n-input, m-output function stored densely by input value. */
class truth_table
{
public:
  truth_table( uint32_t in_width, uint32_t out_width, std::vector<uint32_t> rows );

  static truth_table identity( uint32_t width );
  static truth_table from_function( uint32_t in_width, uint32_t out_width,
                                    std::function<uint32_t( uint32_t )> const& fn );

  uint32_t in_width() const noexcept { return in_width_; }
  uint32_t out_width() const noexcept { return out_width_; }
  uint32_t num_rows() const noexcept { return static_cast<uint32_t>( rows_.size() ); }

  uint32_t operator[]( uint32_t input ) const { return rows_.at( input ); }
  bit_word operator()( bit_word const& input ) const;

  std::span<uint32_t const> rows() const noexcept { return rows_; }

  friend bool operator==( truth_table const&, truth_table const& ) = default;

private:
  uint32_t in_width_;
  uint32_t out_width_;
  std::vector<uint32_t> rows_;
};

/*! \brief Non-empty, strictly increasing set of n-bit input values. */
class input_domain
{
public:
  /*! Members may be given in any order; duplicates and out-of-range values are rejected. */
  input_domain( uint32_t width, std::vector<uint32_t> members );
  input_domain( uint32_t width, std::initializer_list<uint32_t> members )
      : input_domain( width, std::vector<uint32_t>( members ) ) {}

  static input_domain full( uint32_t width );
  /*! \brief Inclusive range `[first, last]`. */
  static input_domain range( uint32_t width, uint32_t first, uint32_t last );
  /*! \brief The ten BCD digits {0..9} over 4 bits. */
  static input_domain bcd();

  /*! \brief Parses `bcd` or a comma/space separated list of values and `a..b` ranges.
   *
   * Values are decimal unless prefixed with `0b` (binary) or `0x` (hex).
   */
  static input_domain parse( uint32_t width, std::string_view text );

  uint32_t width() const noexcept { return width_; }
  std::span<uint32_t const> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains( uint32_t value ) const;

  /*! \brief Compact form such as `{0..9}` or `{1, 4, 7..12}`. */
  std::string to_string() const;

  friend bool operator==( input_domain const&, input_domain const& ) = default;

private:
  uint32_t width_;
  std::vector<uint32_t> members_;
};

/*! \brief A function specified only on a domain; the rest are don't-cares. */
class partial_spec
{
public:
  /*! `outputs[k]` is the value assigned to `domain.members()[k]`. */
  partial_spec( uint32_t in_width, uint32_t out_width, input_domain domain, std::vector<uint32_t> outputs );

  static partial_spec from_function( uint32_t in_width, uint32_t out_width, input_domain domain,
                                     std::function<uint32_t( uint32_t )> const& fn );
  /*! \brief Restriction of a total table to `domain`. */
  static partial_spec restricted_to( truth_table const& table, input_domain domain );

  uint32_t in_width() const noexcept { return in_width_; }
  uint32_t out_width() const noexcept { return out_width_; }
  input_domain const& domain() const noexcept { return domain_; }
  std::span<uint32_t const> outputs() const noexcept { return outputs_; }

  std::optional<uint32_t> assigned( uint32_t input ) const;

  friend bool operator==( partial_spec const&, partial_spec const& ) = default;

private:
  uint32_t in_width_;
  uint32_t out_width_;
  input_domain domain_;
  std::vector<uint32_t> outputs_;
};

/*! \brief Two inputs `first < second` that map to the same `output`. */
struct collision
{
  uint32_t first;
  uint32_t second;
  uint32_t output;

  friend bool operator==( collision const&, collision const& ) = default;
  friend auto operator<=>( collision const&, collision const& ) = default;
};

/*! \brief Result of an injectivity check: empty collision list means injective. */
struct injectivity_verdict
{
  /*! \brief Every colliding pair, sorted by `(first, second)`. */
  std::vector<collision> collisions;

  bool injective() const noexcept { return collisions.empty(); }
};

/*! \brief Raised when an operation requires injectivity and it does not hold. */
class collision_error : public error
{
public:
  collision_error( std::string const& message, std::vector<collision> collisions );

  std::vector<collision> const& collisions() const noexcept { return collisions_; }

private:
  std::vector<collision> collisions_;
};

enum class completion_strategy
{
  /*! Unassigned inputs, ascending, take the smallest unused outputs, ascending. */
  lexicographic
};

bool is_bijective( truth_table const& table );

injectivity_verdict is_injective_on( truth_table const& table, input_domain const& domain );

/*! \brief Colliding pairs of an arbitrary input-to-output assignment (sorted, all pairs). */
std::vector<collision> find_collisions( std::span<uint32_t const> inputs, std::span<uint32_t const> outputs );

truth_table invert( truth_table const& table );

truth_table complete_to_permutation( partial_spec const& spec,
                                     completion_strategy strategy = completion_strategy::lexicographic );

bool table_equal_on( truth_table const& a, truth_table const& b, input_domain const& domain );

/*! \brief True iff `table` reproduces every assignment of `spec`. */
bool agrees_with( truth_table const& table, partial_spec const& spec );

std::string to_string( collision const& c, uint32_t in_width, uint32_t out_width );

} // namespace partrev
