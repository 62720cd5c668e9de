#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netlist.hpp"

namespace partrev
{

struct cost_report
{
  uint64_t gates{};
  uint64_t garbage{};
  /*! \brief Constant (ancilla) inputs; reported but not compared. */
  uint64_t constants{};
  /*! \brief Unit delay: one unit per gate on the longest path. */
  uint64_t delay{};

  friend bool operator==( cost_report const&, cost_report const& ) = default;
};

/*! \brief Costs of a valid netlist; throws `invalid_netlist_error` otherwise. */
cost_report measure( netlist const& n );

/*! \brief Improvement of `proposed` over `baseline` as a percentage.
 *
 * baseline / proposed x 100 when proposed > 0, and baseline x 100 when
 * proposed = 0 (so 9 garbage outputs reduced to none reads as 900%).
 */
class improvement_ratio
{
public:
  improvement_ratio( uint64_t baseline, uint64_t proposed ) : baseline_( baseline ), proposed_( proposed ) {}

  uint64_t baseline() const noexcept { return baseline_; }
  uint64_t proposed() const noexcept { return proposed_; }
  bool zero_denominator() const noexcept { return proposed_ == 0u; }

  double percent() const noexcept;
  /*! \brief True when the percentage is a whole number. */
  bool exact() const noexcept;
  /*! \brief `400%`, or two decimals such as `133.33%` when not whole. */
  std::string to_string() const;

  /*! \brief Equal as rational numbers. */
  friend bool operator==( improvement_ratio const& a, improvement_ratio const& b ) noexcept;

private:
  uint64_t baseline_;
  uint64_t proposed_;
};

struct comparison
{
  cost_report baseline;
  cost_report proposed;
  improvement_ratio gates;
  improvement_ratio garbage;
  improvement_ratio delay;
};

comparison compare( cost_report const& baseline, cost_report const& proposed );

struct named_report
{
  std::string name;
  cost_report cost;
};

enum class report_format
{
  text,
  csv
};

/*! \brief Writes one row per report, in the order given. */
void write_reports( std::ostream& out, std::vector<named_report> const& reports, report_format format );

/*! \brief Writes both reports followed by an `improvement` row and a note on the ratio rule. */
void write_comparison( std::ostream& out, named_report const& baseline, named_report const& proposed,
                       report_format format );

} // namespace partrev
