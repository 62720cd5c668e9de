#include <partrev/pla.hpp>

#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "text_util.hpp"

namespace partrev
{

namespace
{

detail::pla_block read_block( std::istream& in, std::string const& source, bool allow_dashes )
{
  auto const lines = detail::read_lines( in );
  auto const last_line = lines.empty() ? std::size_t{ 1 } : lines.back().number;
  auto block = detail::parse_pla( lines, 0u, lines.size(), source, allow_dashes, last_line );
  if ( block.next != lines.size() )
  {
    auto const& extra = lines[block.next];
    throw parse_error( source, extra.number, fmt::format( "unexpected content '{}' after table", extra.text ) );
  }
  return block;
}

std::ifstream open_input( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw error( fmt::format( "cannot open '{}'", path ) );
  }
  return in;
}

} // namespace

truth_table read_pla( std::istream& in, std::string const& source )
{
  auto const block = read_block( in, source, false );
  std::vector<uint32_t> rows;
  rows.reserve( block.rows.size() );
  for ( auto const& r : block.rows )
  {
    rows.push_back( *r );
  }
  return truth_table( block.in_width, block.out_width, std::move( rows ) );
}

truth_table read_pla_file( std::string const& path )
{
  auto in = open_input( path );
  return read_pla( in, path );
}

partial_spec read_partial_pla( std::istream& in, std::string const& source )
{
  auto const block = read_block( in, source, true );
  std::vector<uint32_t> members, outputs;
  for ( uint32_t x = 0u; x < block.rows.size(); ++x )
  {
    if ( block.rows[x] )
    {
      members.push_back( x );
      outputs.push_back( *block.rows[x] );
    }
  }
  if ( members.empty() )
  {
    throw parse_error( source, 1u, "partial specification assigns no rows" );
  }
  return partial_spec( block.in_width, block.out_width, input_domain( block.in_width, std::move( members ) ),
                       std::move( outputs ) );
}

partial_spec read_partial_pla_file( std::string const& path )
{
  auto in = open_input( path );
  return read_partial_pla( in, path );
}

void write_pla( std::ostream& out, truth_table const& table )
{
  out << ".i " << table.in_width() << '\n' << ".o " << table.out_width() << '\n';
  for ( uint32_t x = 0u; x < table.num_rows(); ++x )
  {
    out << to_bits( x, table.in_width() ) << ' ' << to_bits( table[x], table.out_width() ) << '\n';
  }
  out << ".e\n";
}

void write_partial_pla( std::ostream& out, partial_spec const& spec )
{
  out << ".i " << spec.in_width() << '\n' << ".o " << spec.out_width() << '\n';
  for ( uint32_t x = 0u; x < ( 1u << spec.in_width() ); ++x )
  {
    auto const y = spec.assigned( x );
    out << to_bits( x, spec.in_width() ) << ' '
        << ( y ? to_bits( *y, spec.out_width() ) : std::string( spec.out_width(), '-' ) ) << '\n';
  }
  out << ".e\n";
}

} // namespace partrev
