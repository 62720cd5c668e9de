#include <partrev/truth_table.hpp>

#include <algorithm>
#include <charconv>
#include <utility>

#include <fmt/format.h>

namespace partrev
{

namespace
{

void check_width( uint32_t width, char const* what )
{
  if ( width == 0u || width > max_width )
  {
    throw width_error( fmt::format( "{} width {} outside 1..{}", what, width, max_width ) );
  }
}

/* zero is allowed: the empty word (e.g. a circuit without garbage) */
void check_out_width( uint32_t width )
{
  if ( width > max_width )
  {
    throw width_error( fmt::format( "output width {} exceeds {}", width, max_width ) );
  }
}

constexpr uint32_t row_count( uint32_t width ) { return 1u << width; }

uint32_t parse_number( std::string_view token, uint32_t width )
{
  int base = 10;
  if ( token.size() > 2u && token[0] == '0' && ( token[1] == 'b' || token[1] == 'B' ) )
  {
    base = 2;
    token.remove_prefix( 2u );
  }
  else if ( token.size() > 2u && token[0] == '0' && ( token[1] == 'x' || token[1] == 'X' ) )
  {
    base = 16;
    token.remove_prefix( 2u );
  }
  uint32_t value{};
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value, base );
  if ( ec != std::errc{} || ptr != token.data() + token.size() )
  {
    throw error( fmt::format( "invalid domain value '{}'", token ) );
  }
  if ( value >= row_count( width ) )
  {
    throw width_error( fmt::format( "domain value {} does not fit in {} bits", value, width ) );
  }
  return value;
}

} // namespace

std::string to_bits( uint32_t value, uint32_t width )
{
  std::string s( width, '0' );
  for ( uint32_t i = 0u; i < width; ++i )
  {
    if ( ( value >> i ) & 1u )
    {
      s[width - 1u - i] = '1';
    }
  }
  return s;
}

/* bit_word */

bit_word::bit_word( uint32_t value, uint32_t width ) : value_( value ), width_( width )
{
  check_out_width( width );
  if ( value >= row_count( width ) )
  {
    throw width_error( fmt::format( "value {} does not fit in {} bits", value, width ) );
  }
}

bit_word bit_word::parse( std::string_view bits )
{
  if ( bits.size() > max_width )
  {
    throw width_error( fmt::format( "bit string '{}' has more than {} bits", bits, max_width ) );
  }
  uint32_t value = 0u;
  for ( char c : bits )
  {
    if ( c != '0' && c != '1' )
    {
      throw error( fmt::format( "invalid bit string '{}'", bits ) );
    }
    value = ( value << 1u ) | static_cast<uint32_t>( c == '1' );
  }
  return bit_word( value, static_cast<uint32_t>( bits.size() ) );
}

bool bit_word::bit( uint32_t i ) const
{
  if ( i >= width_ )
  {
    throw width_error( fmt::format( "bit index {} outside word of width {}", i, width_ ) );
  }
  return ( value_ >> i ) & 1u;
}

std::string bit_word::to_string() const { return to_bits( value_, width_ ); }

/* truth_table */

truth_table::truth_table( uint32_t in_width, uint32_t out_width, std::vector<uint32_t> rows )
    : in_width_( in_width ), out_width_( out_width ), rows_( std::move( rows ) )
{
  check_width( in_width, "input" );
  check_out_width( out_width );
  if ( rows_.size() != row_count( in_width ) )
  {
    throw width_error( fmt::format( "table with {} inputs needs {} rows, got {}", in_width,
                                    row_count( in_width ), rows_.size() ) );
  }
  for ( std::size_t x = 0u; x < rows_.size(); ++x )
  {
    if ( rows_[x] >= row_count( out_width ) )
    {
      throw width_error( fmt::format( "row {} output {} does not fit in {} bits", x, rows_[x], out_width ) );
    }
  }
}

truth_table truth_table::identity( uint32_t width )
{
  return from_function( width, width, []( uint32_t x ) { return x; } );
}

truth_table truth_table::from_function( uint32_t in_width, uint32_t out_width,
                                        std::function<uint32_t( uint32_t )> const& fn )
{
  check_width( in_width, "input" );
  std::vector<uint32_t> rows( row_count( in_width ) );
  for ( uint32_t x = 0u; x < rows.size(); ++x )
  {
    rows[x] = fn( x );
  }
  return truth_table( in_width, out_width, std::move( rows ) );
}

bit_word truth_table::operator()( bit_word const& input ) const
{
  if ( input.width() != in_width_ )
  {
    throw width_error( fmt::format( "input word has {} bits, table expects {}", input.width(), in_width_ ) );
  }
  return bit_word( rows_[input.value()], out_width_ );
}

/* input_domain */

input_domain::input_domain( uint32_t width, std::vector<uint32_t> members )
    : width_( width ), members_( std::move( members ) )
{
  check_width( width, "domain" );
  if ( members_.empty() )
  {
    throw error( "input domain must not be empty" );
  }
  std::sort( members_.begin(), members_.end() );
  if ( auto it = std::adjacent_find( members_.begin(), members_.end() ); it != members_.end() )
  {
    throw error( fmt::format( "duplicate domain member {}", *it ) );
  }
  if ( members_.back() >= row_count( width ) )
  {
    throw width_error( fmt::format( "domain member {} does not fit in {} bits", members_.back(), width ) );
  }
}

input_domain input_domain::full( uint32_t width )
{
  check_width( width, "domain" );
  return range( width, 0u, row_count( width ) - 1u );
}

input_domain input_domain::range( uint32_t width, uint32_t first, uint32_t last )
{
  if ( first > last )
  {
    throw error( fmt::format( "empty domain range {}..{}", first, last ) );
  }
  std::vector<uint32_t> members( last - first + 1u );
  for ( uint32_t i = 0u; i < members.size(); ++i )
  {
    members[i] = first + i;
  }
  return input_domain( width, std::move( members ) );
}

input_domain input_domain::bcd() { return range( 4u, 0u, 9u ); }

input_domain input_domain::parse( uint32_t width, std::string_view text )
{
  auto const trim = []( std::string_view s ) {
    auto const b = s.find_first_not_of( " \t" );
    if ( b == std::string_view::npos )
    {
      return std::string_view{};
    }
    return s.substr( b, s.find_last_not_of( " \t" ) - b + 1u );
  };

  text = trim( text );
  if ( text == "bcd" )
  {
    if ( width != 4u )
    {
      throw width_error( fmt::format( "'bcd' domain needs 4 input bits, not {}", width ) );
    }
    return bcd();
  }
  if ( !text.empty() && text.front() == '{' && text.back() == '}' )
  {
    text = text.substr( 1u, text.size() - 2u );
  }

  std::vector<uint32_t> members;
  std::size_t pos = 0u;
  while ( pos <= text.size() )
  {
    auto const end = std::min( text.find_first_of( ", \t", pos ), text.size() );
    auto const token = text.substr( pos, end - pos );
    pos = end + 1u;
    if ( token.empty() )
    {
      continue;
    }
    if ( auto const dots = token.find( ".." ); dots != std::string_view::npos )
    {
      auto const first = parse_number( token.substr( 0u, dots ), width );
      auto const last = parse_number( token.substr( dots + 2u ), width );
      if ( first > last )
      {
        throw error( fmt::format( "empty domain range '{}'", token ) );
      }
      for ( uint32_t v = first; v <= last; ++v )
      {
        members.push_back( v );
      }
    }
    else
    {
      members.push_back( parse_number( token, width ) );
    }
  }
  return input_domain( width, std::move( members ) );
}

bool input_domain::contains( uint32_t value ) const
{
  return std::binary_search( members_.begin(), members_.end(), value );
}

std::string input_domain::to_string() const
{
  std::string out = "{";
  std::size_t i = 0u;
  while ( i < members_.size() )
  {
    std::size_t j = i;
    while ( j + 1u < members_.size() && members_[j + 1u] == members_[j] + 1u )
    {
      ++j;
    }
    if ( i != 0u )
    {
      out += ", ";
    }
    if ( j - i >= 2u )
    {
      out += fmt::format( "{}..{}", members_[i], members_[j] );
      i = j + 1u;
    }
    else
    {
      out += std::to_string( members_[i] );
      ++i;
    }
  }
  return out + "}";
}

/* partial_spec */

partial_spec::partial_spec( uint32_t in_width, uint32_t out_width, input_domain domain, std::vector<uint32_t> outputs )
    : in_width_( in_width ), out_width_( out_width ), domain_( std::move( domain ) ), outputs_( std::move( outputs ) )
{
  check_width( in_width, "input" );
  check_width( out_width, "output" );
  if ( domain_.width() != in_width )
  {
    throw width_error( fmt::format( "domain width {} differs from input width {}", domain_.width(), in_width ) );
  }
  if ( outputs_.size() != domain_.size() )
  {
    throw error( fmt::format( "{} outputs assigned to a domain of {} members", outputs_.size(), domain_.size() ) );
  }
  for ( auto v : outputs_ )
  {
    if ( v >= row_count( out_width ) )
    {
      throw width_error( fmt::format( "assigned output {} does not fit in {} bits", v, out_width ) );
    }
  }
}

partial_spec partial_spec::from_function( uint32_t in_width, uint32_t out_width, input_domain domain,
                                          std::function<uint32_t( uint32_t )> const& fn )
{
  std::vector<uint32_t> outputs;
  outputs.reserve( domain.size() );
  for ( auto x : domain.members() )
  {
    outputs.push_back( fn( x ) );
  }
  return partial_spec( in_width, out_width, std::move( domain ), std::move( outputs ) );
}

partial_spec partial_spec::restricted_to( truth_table const& table, input_domain domain )
{
  if ( domain.width() != table.in_width() )
  {
    throw width_error( fmt::format( "domain width {} differs from table input width {}", domain.width(),
                                    table.in_width() ) );
  }
  return from_function( table.in_width(), table.out_width(), std::move( domain ),
                        [&table]( uint32_t x ) { return table[x]; } );
}

std::optional<uint32_t> partial_spec::assigned( uint32_t input ) const
{
  auto const members = domain_.members();
  auto const it = std::lower_bound( members.begin(), members.end(), input );
  if ( it == members.end() || *it != input )
  {
    return std::nullopt;
  }
  return outputs_[static_cast<std::size_t>( it - members.begin() )];
}

/* operations */

collision_error::collision_error( std::string const& message, std::vector<collision> collisions )
    : error( message ), collisions_( std::move( collisions ) )
{
}

std::vector<collision> find_collisions( std::span<uint32_t const> inputs, std::span<uint32_t const> outputs )
{
  if ( inputs.size() != outputs.size() )
  {
    throw error( "input and output lists differ in length" );
  }

  std::vector<std::pair<uint32_t, uint32_t>> by_output( inputs.size() );
  for ( std::size_t k = 0u; k < inputs.size(); ++k )
  {
    by_output[k] = { outputs[k], inputs[k] };
  }
  std::sort( by_output.begin(), by_output.end() );

  std::vector<collision> result;
  for ( std::size_t i = 0u; i < by_output.size(); )
  {
    std::size_t j = i + 1u;
    while ( j < by_output.size() && by_output[j].first == by_output[i].first )
    {
      ++j;
    }
    for ( std::size_t a = i; a < j; ++a )
    {
      for ( std::size_t b = a + 1u; b < j; ++b )
      {
        result.push_back( { by_output[a].second, by_output[b].second, by_output[i].first } );
      }
    }
    i = j;
  }
  std::sort( result.begin(), result.end() );
  return result;
}

bool is_bijective( truth_table const& table )
{
  if ( table.in_width() != table.out_width() )
  {
    throw width_error( fmt::format( "bijectivity needs equal widths, table is {} -> {}", table.in_width(),
                                    table.out_width() ) );
  }
  std::vector<bool> seen( table.num_rows(), false );
  for ( auto y : table.rows() )
  {
    if ( seen[y] )
    {
      return false;
    }
    seen[y] = true;
  }
  return true;
}

injectivity_verdict is_injective_on( truth_table const& table, input_domain const& domain )
{
  if ( domain.width() != table.in_width() )
  {
    throw width_error( fmt::format( "domain width {} differs from table input width {}", domain.width(),
                                    table.in_width() ) );
  }
  std::vector<uint32_t> outputs;
  outputs.reserve( domain.size() );
  for ( auto x : domain.members() )
  {
    outputs.push_back( table[x] );
  }
  return { find_collisions( domain.members(), outputs ) };
}

truth_table invert( truth_table const& table )
{
  if ( !is_bijective( table ) )
  {
    auto witnesses = is_injective_on( table, input_domain::full( table.in_width() ) ).collisions;
    throw collision_error( "cannot invert a non-bijective table", std::move( witnesses ) );
  }
  std::vector<uint32_t> rows( table.num_rows() );
  for ( uint32_t x = 0u; x < table.num_rows(); ++x )
  {
    rows[table[x]] = x;
  }
  return truth_table( table.out_width(), table.in_width(), std::move( rows ) );
}

truth_table complete_to_permutation( partial_spec const& spec, completion_strategy strategy )
{
  if ( spec.in_width() != spec.out_width() )
  {
    throw width_error( fmt::format( "permutation completion needs equal widths, spec is {} -> {}",
                                    spec.in_width(), spec.out_width() ) );
  }
  if ( auto witnesses = find_collisions( spec.domain().members(), spec.outputs() ); !witnesses.empty() )
  {
    throw collision_error( "partial specification is not injective on its domain", std::move( witnesses ) );
  }

  auto const n = row_count( spec.in_width() );
  std::vector<uint32_t> rows( n );
  std::vector<bool> assigned( n, false );
  std::vector<bool> used( n, false );
  auto const members = spec.domain().members();
  for ( std::size_t k = 0u; k < members.size(); ++k )
  {
    rows[members[k]] = spec.outputs()[k];
    assigned[members[k]] = true;
    used[spec.outputs()[k]] = true;
  }

  switch ( strategy )
  {
  case completion_strategy::lexicographic:
  {
    uint32_t next_free = 0u;
    for ( uint32_t x = 0u; x < n; ++x )
    {
      if ( assigned[x] )
      {
        continue;
      }
      while ( used[next_free] )
      {
        ++next_free;
      }
      rows[x] = next_free;
      used[next_free] = true;
    }
    break;
  }
  }
  return truth_table( spec.in_width(), spec.out_width(), std::move( rows ) );
}

bool table_equal_on( truth_table const& a, truth_table const& b, input_domain const& domain )
{
  if ( a.in_width() != b.in_width() || a.out_width() != b.out_width() )
  {
    throw width_error( fmt::format( "cannot compare {} -> {} table with {} -> {} table", a.in_width(),
                                    a.out_width(), b.in_width(), b.out_width() ) );
  }
  if ( domain.width() != a.in_width() )
  {
    throw width_error( fmt::format( "domain width {} differs from table input width {}", domain.width(),
                                    a.in_width() ) );
  }
  return std::all_of( domain.members().begin(), domain.members().end(),
                      [&]( uint32_t x ) { return a[x] == b[x]; } );
}

bool agrees_with( truth_table const& table, partial_spec const& spec )
{
  if ( table.in_width() != spec.in_width() || table.out_width() != spec.out_width() )
  {
    throw width_error( "table and specification widths differ" );
  }
  auto const members = spec.domain().members();
  for ( std::size_t k = 0u; k < members.size(); ++k )
  {
    if ( table[members[k]] != spec.outputs()[k] )
    {
      return false;
    }
  }
  return true;
}

std::string to_string( collision const& c, uint32_t in_width, uint32_t out_width )
{
  return fmt::format( "{}, {} -> {}", to_bits( c.first, in_width ), to_bits( c.second, in_width ),
                      to_bits( c.output, out_width ) );
}

} // namespace partrev
