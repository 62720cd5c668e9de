#include <partrev/gate_library.hpp>

#include <array>
#include <cctype>
#include <fstream>
#include <mutex>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <partrev/pla.hpp>

#include "text_util.hpp"

namespace partrev
{

namespace
{

/* Bit helpers over a table index whose MSB is the first pin. */
constexpr uint32_t pin( uint32_t word, uint32_t width, uint32_t index ) { return ( word >> ( width - 1u - index ) ) & 1u; }

constexpr uint32_t not_gate( uint32_t x ) { return x ^ 1u; }

constexpr uint32_t cnot_gate( uint32_t x )
{
  auto const a = pin( x, 2u, 0u ), b = pin( x, 2u, 1u );
  return ( a << 1u ) | ( a ^ b );
}

constexpr uint32_t toffoli_gate( uint32_t x )
{
  auto const a = pin( x, 3u, 0u ), b = pin( x, 3u, 1u ), c = pin( x, 3u, 2u );
  return ( a << 2u ) | ( b << 1u ) | ( ( a & b ) ^ c );
}

constexpr uint32_t fredkin_gate( uint32_t x )
{
  auto const a = pin( x, 3u, 0u ), b = pin( x, 3u, 1u ), c = pin( x, 3u, 2u );
  auto const q = a ? c : b;
  auto const r = a ? b : c;
  return ( a << 2u ) | ( q << 1u ) | r;
}

/* P = A, Q = A'C' ^ B', R = Q ^ D, S = Q.D ^ (A.B ^ C) */
constexpr uint32_t tsg_gate( uint32_t x )
{
  auto const a = pin( x, 4u, 0u ), b = pin( x, 4u, 1u ), c = pin( x, 4u, 2u ), d = pin( x, 4u, 3u );
  auto const q = ( ( a ^ 1u ) & ( c ^ 1u ) ) ^ ( b ^ 1u );
  auto const r = q ^ d;
  auto const s = ( q & d ) ^ ( ( a & b ) ^ c );
  return ( a << 3u ) | ( q << 2u ) | ( r << 1u ) | s;
}

/* P,Q,R columns of the published PRG table, rows 0000..1111 */
constexpr std::array<uint32_t, 16> prg_pqr = { 0b001, 0b010, 0b010, 0b011, 0b011, 0b100, 0b100, 0b101,
                                               0b101, 0b110, 0b101, 0b001, 0b111, 0b000, 0b100, 0b010 };

/* S is not printed; S = NOT D on every row */
constexpr uint32_t prg_gate( uint32_t x ) { return ( prg_pqr[x] << 1u ) | ( ( x & 1u ) ^ 1u ); }

template<std::size_t N>
constexpr bool is_permutation_of_range( uint32_t ( *fn )( uint32_t ) )
{
  std::array<bool, N> seen{};
  for ( uint32_t x = 0u; x < N; ++x )
  {
    auto const y = fn( x );
    if ( y >= N || seen[y] )
    {
      return false;
    }
    seen[y] = true;
  }
  return true;
}

/* With C = 0, R and S must be the sum and carry of A + B + D. */
constexpr bool tsg_embeds_full_adder()
{
  for ( uint32_t a = 0u; a < 2u; ++a )
  {
    for ( uint32_t b = 0u; b < 2u; ++b )
    {
      for ( uint32_t d = 0u; d < 2u; ++d )
      {
        auto const y = tsg_gate( ( a << 3u ) | ( b << 2u ) | d );
        auto const total = a + b + d;
        if ( ( ( y >> 1u ) & 1u ) != ( total & 1u ) || ( y & 1u ) != ( total >> 1u ) )
        {
          return false;
        }
      }
    }
  }
  return true;
}

constexpr bool prg_is_excess3_on_bcd()
{
  for ( uint32_t x = 0u; x < 10u; ++x )
  {
    if ( prg_gate( x ) != x + 3u )
    {
      return false;
    }
  }
  return true;
}

static_assert( is_permutation_of_range<4>( cnot_gate ) );
static_assert( is_permutation_of_range<8>( toffoli_gate ) );
static_assert( is_permutation_of_range<8>( fredkin_gate ) );
static_assert( is_permutation_of_range<16>( tsg_gate ), "TSG definition is not a bijection" );
static_assert( tsg_embeds_full_adder(), "TSG with C = 0 does not embed a full adder" );
static_assert( prg_is_excess3_on_bcd() );

bool is_identifier( std::string_view s )
{
  if ( s.empty() || !( std::isalpha( static_cast<unsigned char>( s[0] ) ) || s[0] == '_' ) )
  {
    return false;
  }
  for ( char c : s )
  {
    if ( !std::isalnum( static_cast<unsigned char>( c ) ) && c != '_' && c != '-' )
    {
      return false;
    }
  }
  return true;
}

void check_gate( gate_def const& g )
{
  if ( !is_identifier( g.name ) )
  {
    throw error( fmt::format( "invalid gate name '{}'", g.name ) );
  }
  if ( g.input_labels.size() != g.table.in_width() || g.output_labels.size() != g.table.out_width() )
  {
    throw width_error( fmt::format( "gate {} has {}/{} pin labels for a {} -> {} table", g.name,
                                    g.input_labels.size(), g.output_labels.size(), g.table.in_width(),
                                    g.table.out_width() ) );
  }
  if ( g.declared_domain && g.declared_domain->width() != g.table.in_width() )
  {
    throw width_error( fmt::format( "gate {} declares a {}-bit domain for {} inputs", g.name,
                                    g.declared_domain->width(), g.table.in_width() ) );
  }
}

void check_declared_domain( gate_def const& g )
{
  if ( !g.declared_domain )
  {
    return;
  }
  if ( auto verdict = is_injective_on( g.table, *g.declared_domain ); !verdict.injective() )
  {
    throw collision_error( fmt::format( "gate {} is not injective on its declared domain {}", g.name,
                                        g.declared_domain->to_string() ),
                           std::move( verdict.collisions ) );
  }
}

gate_def make_builtin( std::string name, uint32_t width, uint32_t ( *fn )( uint32_t ) )
{
  return gate_def{ std::move( name ),
                   default_input_labels( width ),
                   default_output_labels( width ),
                   truth_table::from_function( width, width, fn ),
                   std::nullopt,
                   gate_provenance::builtin,
                   {} };
}

std::map<std::string, gate_ptr, std::less<>> const& builtin_table()
{
  static auto const table = [] {
    std::map<std::string, gate_ptr, std::less<>> m;
    auto const put = [&m]( gate_def g ) {
      check_gate( g );
      check_declared_domain( g );
      auto const name = g.name;
      m.emplace( name, std::make_shared<gate_def const>( std::move( g ) ) );
    };
    put( make_builtin( "NOT", 1u, not_gate ) );
    put( make_builtin( "CNOT", 2u, cnot_gate ) );
    put( make_builtin( "TOFFOLI", 3u, toffoli_gate ) );
    put( make_builtin( "FREDKIN", 3u, fredkin_gate ) );

    auto tsg = make_builtin( "TSG", 4u, tsg_gate );
    tsg.notes = { "TSG: P = A, Q = A'C' ^ B', R = Q ^ D, S = Q.D ^ (A.B ^ C)",
                  "with C = 0: R = A ^ B ^ D (sum), S = A.B ^ (A ^ B).D (carry)" };
    put( std::move( tsg ) );

    auto prg = make_builtin( "PRG", 4u, prg_gate );
    prg.declared_domain = input_domain::bcd();
    prg.notes = { "Partial reversible gate: BCD to excess-3 on inputs 0000..1001.",
                  "P, Q, R are the published columns; S is reconstructed as S = NOT D on all 16 rows.",
                  "Inputs 1010, 1110 and 1111 share outputs with inputs 1000, 0110 and 0001." };
    put( std::move( prg ) );
    return m;
  }();
  return table;
}

std::vector<std::string> letter_labels( uint32_t width, char first, char prefix )
{
  std::vector<std::string> labels;
  labels.reserve( width );
  for ( uint32_t i = 0u; i < width; ++i )
  {
    if ( width <= 10u )
    {
      labels.emplace_back( 1u, static_cast<char>( first + i ) );
    }
    else
    {
      labels.push_back( fmt::format( "{}{}", prefix, width - 1u - i ) );
    }
  }
  return labels;
}

} // namespace

std::vector<std::string> default_input_labels( uint32_t width ) { return letter_labels( width, 'A', 'x' ); }
std::vector<std::string> default_output_labels( uint32_t width ) { return letter_labels( width, 'P', 'y' ); }

std::vector<std::string> const& builtin_gate_names()
{
  static std::vector<std::string> const names = { "NOT", "CNOT", "TOFFOLI", "FREDKIN", "TSG", "PRG" };
  return names;
}

gate_ptr builtin( std::string_view name )
{
  auto const& table = builtin_table();
  if ( auto it = table.find( name ); it != table.end() )
  {
    return it->second;
  }
  throw unknown_gate_error( fmt::format( "unknown gate '{}'", name ) );
}

std::string_view to_string( reversibility r )
{
  switch ( r )
  {
  case reversibility::fully_reversible:
    return "fully reversible";
  case reversibility::partially_reversible:
    return "partially reversible";
  case reversibility::irreversible:
    return "irreversible";
  }
  return "unknown";
}

gate_verdict verify_gate( gate_def const& gate )
{
  auto const& t = gate.table;
  if ( t.in_width() == t.out_width() && is_bijective( t ) )
  {
    return { reversibility::fully_reversible, std::nullopt, {} };
  }
  if ( gate.declared_domain )
  {
    auto verdict = is_injective_on( t, *gate.declared_domain );
    if ( verdict.injective() )
    {
      return { reversibility::partially_reversible, gate.declared_domain, {} };
    }
    return { reversibility::irreversible, std::nullopt, std::move( verdict.collisions ) };
  }
  return { reversibility::irreversible, std::nullopt, is_injective_on( t, input_domain::full( t.in_width() ) ).collisions };
}

gate_def synthesize_prg( partial_spec const& spec, std::string name )
{
  auto table = complete_to_permutation( spec, completion_strategy::lexicographic );
  gate_def g{ std::move( name ),
              default_input_labels( spec.in_width() ),
              default_output_labels( spec.out_width() ),
              std::move( table ),
              spec.domain(),
              gate_provenance::builtin,
              { "Synthesized by lexicographic permutation completion." } };
  check_gate( g );
  return g;
}

/* gate-spec files */

gate_def read_gate_spec( std::istream& in, std::string const& source, bool check_domain )
{
  auto const lines = detail::read_lines( in );
  auto const last_line = lines.empty() ? std::size_t{ 1 } : lines.back().number;

  std::optional<std::string> name;
  std::optional<std::pair<std::size_t, std::vector<std::string>>> inputs, outputs;
  std::optional<std::pair<std::size_t, std::string>> domain_text;
  std::optional<detail::pla_block> table;

  auto const once = [&]( bool present, detail::numbered_line const& line, std::string const& key ) {
    if ( present )
    {
      throw parse_error( source, line.number, fmt::format( "duplicate field '{}'", key ) );
    }
  };

  for ( std::size_t i = 0u; i < lines.size(); )
  {
    auto const& line = lines[i];
    auto const kv = detail::split_key_value( line.text );
    if ( !kv )
    {
      throw parse_error( source, line.number, fmt::format( "expected 'key: value', got '{}'", line.text ) );
    }
    auto const& [key, value] = *kv;
    if ( key == "name" )
    {
      once( name.has_value(), line, key );
      if ( !is_identifier( value ) )
      {
        throw parse_error( source, line.number, fmt::format( "invalid gate name '{}'", value ) );
      }
      name = value;
    }
    else if ( key == "inputs" )
    {
      once( inputs.has_value(), line, key );
      inputs = { line.number, detail::split_list( value ) };
    }
    else if ( key == "outputs" )
    {
      once( outputs.has_value(), line, key );
      outputs = { line.number, detail::split_list( value ) };
    }
    else if ( key == "domain" )
    {
      once( domain_text.has_value(), line, key );
      domain_text = { line.number, value };
    }
    else if ( key == "table" )
    {
      once( table.has_value(), line, key );
      if ( !value.empty() )
      {
        throw parse_error( source, line.number, "the table block starts on the line after 'table:'" );
      }
      table = detail::parse_pla( lines, i + 1u, lines.size(), source, false, last_line );
      i = table->next;
      continue;
    }
    else
    {
      throw parse_error( source, line.number, fmt::format( "unknown field '{}'", key ) );
    }
    ++i;
  }

  if ( !name )
  {
    throw parse_error( source, last_line, "missing field 'name'" );
  }
  if ( !inputs || !outputs )
  {
    throw parse_error( source, last_line, "missing field 'inputs' or 'outputs'" );
  }
  if ( !table )
  {
    throw parse_error( source, last_line, "missing field 'table'" );
  }
  if ( inputs->second.size() != table->in_width )
  {
    throw parse_error( source, inputs->first,
                       fmt::format( "{} input labels for a table with .i {}", inputs->second.size(), table->in_width ) );
  }
  if ( outputs->second.size() != table->out_width )
  {
    throw parse_error( source, outputs->first,
                       fmt::format( "{} output labels for a table with .o {}", outputs->second.size(), table->out_width ) );
  }

  std::vector<uint32_t> rows;
  rows.reserve( table->rows.size() );
  for ( auto const& r : table->rows )
  {
    rows.push_back( *r );
  }

  gate_def g{ *name, inputs->second, outputs->second, truth_table( table->in_width, table->out_width, std::move( rows ) ),
              std::nullopt, gate_provenance::user_file, {} };
  if ( domain_text )
  {
    try
    {
      g.declared_domain = input_domain::parse( table->in_width, domain_text->second );
    }
    catch ( error const& e )
    {
      throw parse_error( source, domain_text->first, e.what() );
    }
  }
  check_gate( g );
  if ( check_domain )
  {
    check_declared_domain( g );
  }
  return g;
}

gate_def load_gate_spec( std::string const& path, bool check_domain )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw error( fmt::format( "cannot open '{}'", path ) );
  }
  return read_gate_spec( in, path, check_domain );
}

void write_gate_spec( std::ostream& out, gate_def const& gate )
{
  for ( auto const& note : gate.notes )
  {
    out << "# " << note << '\n';
  }
  out << "name: " << gate.name << '\n';
  out << "inputs: " << fmt::format( "{}", fmt::join( gate.input_labels, ", " ) ) << '\n';
  out << "outputs: " << fmt::format( "{}", fmt::join( gate.output_labels, ", " ) ) << '\n';
  if ( gate.declared_domain )
  {
    auto const& d = *gate.declared_domain;
    out << "domain: " << ( d == input_domain::bcd() ? std::string( "bcd" ) : d.to_string() ) << '\n';
  }
  out << "table:\n";
  write_pla( out, gate.table );
}

/* gate_registry */

gate_registry::gate_registry()
{
  for ( auto const& name : builtin_gate_names() )
  {
    gates_.emplace( name, builtin( name ) );
  }
}

gate_ptr gate_registry::add( gate_def gate )
{
  check_gate( gate );
  check_declared_domain( gate );
  auto ptr = std::make_shared<gate_def const>( std::move( gate ) );
  std::unique_lock lock( mutex_ );
  auto const [it, inserted] = gates_.emplace( ptr->name, ptr );
  if ( !inserted )
  {
    throw duplicate_gate_error( fmt::format( "gate '{}' is already registered", ptr->name ) );
  }
  return it->second;
}

gate_ptr gate_registry::load( std::string const& path ) { return add( load_gate_spec( path ) ); }

gate_ptr gate_registry::lookup( std::string_view name ) const
{
  std::shared_lock lock( mutex_ );
  if ( auto it = gates_.find( name ); it != gates_.end() )
  {
    return it->second;
  }
  throw unknown_gate_error( fmt::format( "unknown gate '{}'", name ) );
}

bool gate_registry::contains( std::string_view name ) const
{
  std::shared_lock lock( mutex_ );
  return gates_.find( name ) != gates_.end();
}

std::vector<std::string> gate_registry::names() const
{
  std::shared_lock lock( mutex_ );
  std::vector<std::string> result;
  for ( auto const& [name, _] : gates_ )
  {
    result.push_back( name );
  }
  return result;
}

} // namespace partrev
