#include <partrev/metrics.hpp>

#include <ostream>

#include <fmt/format.h>

namespace partrev
{

cost_report measure( netlist const& n )
{
  if ( auto v = validate( n ); !v.ok() )
  {
    throw invalid_netlist_error( n.name(), std::move( v.violations ) );
  }
  return { n.instances().size(), n.garbage_outputs().size(), n.constants().size(), depth( n ) };
}

double improvement_ratio::percent() const noexcept
{
  if ( proposed_ == 0u )
  {
    return static_cast<double>( baseline_ ) * 100.0;
  }
  return static_cast<double>( baseline_ ) * 100.0 / static_cast<double>( proposed_ );
}

bool improvement_ratio::exact() const noexcept
{
  return proposed_ == 0u || ( baseline_ * 100u ) % proposed_ == 0u;
}

std::string improvement_ratio::to_string() const
{
  if ( exact() )
  {
    return fmt::format( "{}%", proposed_ == 0u ? baseline_ * 100u : baseline_ * 100u / proposed_ );
  }
  return fmt::format( "{:.2f}%", percent() );
}

bool operator==( improvement_ratio const& a, improvement_ratio const& b ) noexcept
{
  auto const den_a = a.proposed_ == 0u ? 1u : a.proposed_;
  auto const den_b = b.proposed_ == 0u ? 1u : b.proposed_;
  return a.baseline_ * den_b == b.baseline_ * den_a;
}

comparison compare( cost_report const& baseline, cost_report const& proposed )
{
  return { baseline, proposed, improvement_ratio( baseline.gates, proposed.gates ),
           improvement_ratio( baseline.garbage, proposed.garbage ), improvement_ratio( baseline.delay, proposed.delay ) };
}

namespace
{

constexpr auto text_row = "{:<24}{:>8}{:>10}{:>12}{:>8}\n";

void header( std::ostream& out, report_format format )
{
  if ( format == report_format::csv )
  {
    out << "name,gates,garbage,constants,delay\n";
  }
  else
  {
    out << fmt::format( text_row, "circuit", "gates", "garbage", "constants", "delay" );
  }
}

void row( std::ostream& out, named_report const& r, report_format format )
{
  auto const& c = r.cost;
  if ( format == report_format::csv )
  {
    out << fmt::format( "{},{},{},{},{}\n", r.name, c.gates, c.garbage, c.constants, c.delay );
  }
  else
  {
    out << fmt::format( text_row, r.name, c.gates, c.garbage, c.constants, c.delay );
  }
}

} // namespace

void write_reports( std::ostream& out, std::vector<named_report> const& reports, report_format format )
{
  header( out, format );
  for ( auto const& r : reports )
  {
    row( out, r, format );
  }
}

void write_comparison( std::ostream& out, named_report const& baseline, named_report const& proposed,
                       report_format format )
{
  auto const cmp = compare( baseline.cost, proposed.cost );
  header( out, format );
  row( out, baseline, format );
  row( out, proposed, format );
  if ( format == report_format::csv )
  {
    out << fmt::format( "improvement,{},{},,{}\n", cmp.gates.to_string(), cmp.garbage.to_string(),
                        cmp.delay.to_string() );
  }
  else
  {
    out << fmt::format( text_row, "improvement", cmp.gates.to_string(), cmp.garbage.to_string(), "-",
                        cmp.delay.to_string() );
    out << "ratio = baseline / proposed x 100; when proposed is 0, ratio = baseline x 100\n";
    for ( auto const& [label, r] : { std::pair{ "gates", &cmp.gates }, std::pair{ "garbage", &cmp.garbage },
                                     std::pair{ "delay", &cmp.delay } } )
    {
      if ( r->zero_denominator() )
      {
        out << "note: " << label << " ratio uses the zero-denominator rule\n";
      }
    }
  }
}

} // namespace partrev
