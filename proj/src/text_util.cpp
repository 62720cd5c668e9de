#include "text_util.hpp"

#include <charconv>

#include <fmt/format.h>

#include <partrev/errors.hpp>
#include <partrev/truth_table.hpp>

namespace partrev::detail
{

std::string_view trim( std::string_view s )
{
  auto const b = s.find_first_not_of( " \t\r\n" );
  if ( b == std::string_view::npos )
  {
    return {};
  }
  return s.substr( b, s.find_last_not_of( " \t\r\n" ) - b + 1u );
}

std::vector<numbered_line> read_lines( std::istream& in )
{
  std::vector<numbered_line> lines;
  std::string raw;
  std::size_t number = 0u;
  while ( std::getline( in, raw ) )
  {
    ++number;
    std::string_view view = raw;
    if ( auto const hash = view.find( '#' ); hash != std::string_view::npos )
    {
      view = view.substr( 0u, hash );
    }
    view = trim( view );
    if ( !view.empty() )
    {
      lines.push_back( { number, std::string( view ) } );
    }
  }
  return lines;
}

std::vector<std::string> split_list( std::string_view s )
{
  std::vector<std::string> tokens;
  std::size_t pos = 0u;
  while ( pos < s.size() )
  {
    auto const start = s.find_first_not_of( ", \t", pos );
    if ( start == std::string_view::npos )
    {
      break;
    }
    auto end = s.find_first_of( ", \t", start );
    if ( end == std::string_view::npos )
    {
      end = s.size();
    }
    tokens.emplace_back( s.substr( start, end - start ) );
    pos = end;
  }
  return tokens;
}

std::optional<std::pair<std::string, std::string>> split_key_value( std::string_view line )
{
  auto const colon = line.find( ':' );
  if ( colon == std::string_view::npos )
  {
    return std::nullopt;
  }
  return std::pair{ std::string( trim( line.substr( 0u, colon ) ) ), std::string( trim( line.substr( colon + 1u ) ) ) };
}

namespace
{

uint32_t parse_header_value( numbered_line const& line, std::string const& source )
{
  auto const value = trim( std::string_view( line.text ).substr( 2u ) );
  uint32_t v{};
  auto const [ptr, ec] = std::from_chars( value.data(), value.data() + value.size(), v );
  if ( value.empty() || ec != std::errc{} || ptr != value.data() + value.size() )
  {
    throw parse_error( source, line.number, fmt::format( "invalid header '{}'", line.text ) );
  }
  return v;
}

} // namespace

pla_block parse_pla( std::vector<numbered_line> const& lines, std::size_t begin, std::size_t end,
                     std::string const& source, bool allow_dashes, std::size_t last_line )
{
  pla_block block;
  std::optional<uint32_t> in_width, out_width, declared_rows;
  std::size_t i = begin;

  for ( ; i < end && lines[i].text.front() == '.'; ++i )
  {
    auto const& line = lines[i];
    auto const& t = line.text;
    if ( t == ".e" || t == ".end" )
    {
      break;
    }
    if ( t.size() < 3u || ( t[2] != ' ' && t[2] != '\t' ) )
    {
      throw parse_error( source, line.number, fmt::format( "unknown directive '{}'", t ) );
    }
    switch ( t[1] )
    {
    case 'i':
      in_width = parse_header_value( line, source );
      break;
    case 'o':
      out_width = parse_header_value( line, source );
      break;
    case 'p':
      declared_rows = parse_header_value( line, source );
      break;
    default:
      throw parse_error( source, line.number, fmt::format( "unknown directive '{}'", t ) );
    }
  }

  auto const here = [&] { return i < end ? lines[i].number : last_line; };
  if ( !in_width || !out_width )
  {
    throw parse_error( source, here(), "table needs both '.i' and '.o' headers" );
  }
  if ( *in_width == 0u || *in_width > max_width || *out_width == 0u || *out_width > max_width )
  {
    throw parse_error( source, here(), fmt::format( "table widths must lie in 1..{}", max_width ) );
  }
  block.in_width = *in_width;
  block.out_width = *out_width;

  auto const expected = std::size_t{ 1 } << *in_width;
  for ( ; i < end; ++i )
  {
    auto const& line = lines[i];
    if ( line.text == ".e" || line.text == ".end" )
    {
      ++i;
      break;
    }
    if ( line.text.find( ':' ) != std::string::npos )
    {
      break; /* next `key: value` field of an enclosing document */
    }
    auto const fields = split_list( line.text );
    if ( fields.size() != 2u )
    {
      throw parse_error( source, line.number, "row must be '<input bits> <output bits>'" );
    }
    auto const& in_bits = fields[0];
    auto const& out_bits = fields[1];
    if ( in_bits.size() != *in_width || in_bits.find_first_not_of( "01" ) != std::string::npos )
    {
      throw parse_error( source, line.number, fmt::format( "input '{}' is not {} binary digits", in_bits, *in_width ) );
    }
    auto const input = bit_word::parse( in_bits ).value();
    if ( input != block.rows.size() )
    {
      throw parse_error( source, line.number,
                         fmt::format( "row {} out of order: expected input {}", in_bits,
                                      to_bits( static_cast<uint32_t>( block.rows.size() ), *in_width ) ) );
    }
    if ( out_bits.size() != *out_width )
    {
      throw parse_error( source, line.number, fmt::format( "output '{}' is not {} digits", out_bits, *out_width ) );
    }
    if ( out_bits.find_first_not_of( '-' ) == std::string::npos )
    {
      if ( !allow_dashes )
      {
        throw parse_error( source, line.number, "'-' outputs are only allowed in partial specifications" );
      }
      block.rows.push_back( std::nullopt );
      continue;
    }
    if ( out_bits.find_first_not_of( "01" ) != std::string::npos )
    {
      throw parse_error( source, line.number,
                         fmt::format( "output '{}' must be all binary digits or all '-'", out_bits ) );
    }
    block.rows.push_back( bit_word::parse( out_bits ).value() );
  }

  if ( block.rows.size() != expected )
  {
    throw parse_error( source, here(),
                       fmt::format( "table with {} inputs needs {} rows, found {}", *in_width, expected,
                                    block.rows.size() ) );
  }
  if ( declared_rows && *declared_rows != expected )
  {
    throw parse_error( source, here(), fmt::format( "'.p {}' disagrees with the {} rows present", *declared_rows, expected ) );
  }
  block.next = i;
  return block;
}

} // namespace partrev::detail
