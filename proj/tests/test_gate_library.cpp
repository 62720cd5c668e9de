#include <catch_amalgamated.hpp>

#include <atomic>
#include <filesystem>
#include <random>
#include <sstream>
#include <thread>

#include <partrev/gate_library.hpp>
#include <partrev/pla.hpp>

#include "test_support.hpp"

using namespace partrev;

namespace
{

std::string const data_dir = PARTREV_TEST_DATA;

uint32_t bit_of( uint32_t word, uint32_t width, uint32_t pin ) { return ( word >> ( width - 1u - pin ) ) & 1u; }

/* sum and carry of a + b + c, with no gate logic involved */
std::pair<uint32_t, uint32_t> add_bits( uint32_t a, uint32_t b, uint32_t c )
{
  auto const total = a + b + c;
  return { total % 2u, total / 2u };
}

gate_def reload( gate_def const& g )
{
  std::stringstream s;
  write_gate_spec( s, g );
  return read_gate_spec( s, "round-trip" );
}

} // namespace

TEST_CASE( "the PRG matches its published rows and adds three on BCD digits", "[gate_library]" )
{
  auto const prg = builtin( "PRG" );
  CHECK( prg->table == test::published_prg_table() );
  CHECK( prg->table[0b0101u] == 0b1000u );
  CHECK( prg->table[0b1001u] == 0b1100u );
  for ( uint32_t x = 0u; x <= 9u; ++x )
  {
    CHECK( prg->table[x] == x + 3u );
  }
  REQUIRE( prg->declared_domain.has_value() );
  CHECK( *prg->declared_domain == input_domain::bcd() );
  CHECK( prg->input_labels == std::vector<std::string>{ "A", "B", "C", "D" } );
  CHECK( prg->output_labels == std::vector<std::string>{ "P", "Q", "R", "S" } );
}

TEST_CASE( "the reversible built-ins are bijective", "[gate_library]" )
{
  for ( auto const& name : builtin_gate_names() )
  {
    auto const g = builtin( name );
    INFO( name );
    CHECK( g->provenance == gate_provenance::builtin );
    if ( !g->declared_domain )
    {
      CHECK( is_bijective( g->table ) );
      CHECK( test::brute_force_bijective( g->table ) );
    }
  }
  CHECK( builtin( "NOT" )->table[0u] == 1u );
  CHECK( builtin( "CNOT" )->table[0b10u] == 0b11u );
  CHECK( builtin( "CNOT" )->table[0b01u] == 0b01u );
  CHECK( builtin( "TOFFOLI" )->table[0b110u] == 0b111u );
  CHECK( builtin( "TOFFOLI" )->table[0b101u] == 0b101u );
  CHECK( builtin( "FREDKIN" )->table[0b101u] == 0b110u );
  CHECK( builtin( "FREDKIN" )->table[0b011u] == 0b011u );
  CHECK( builtin( "TSG" ) == builtin( "TSG" ) );
  CHECK_THROWS_AS( builtin( "PERES" ), unknown_gate_error );
}

TEST_CASE( "TSG is a 4x4 bijection whose C = 0 slice is a full adder", "[gate_library]" )
{
  auto const tsg = builtin( "TSG" );
  REQUIRE( tsg->num_inputs() == 4u );
  CHECK( test::brute_force_bijective( tsg->table ) );
  for ( uint32_t a = 0u; a < 2u; ++a )
  {
    for ( uint32_t b = 0u; b < 2u; ++b )
    {
      for ( uint32_t d = 0u; d < 2u; ++d )
      {
        auto const out = tsg->table[a << 3u | b << 2u | d];
        auto const [sum, carry] = add_bits( a, b, d );
        CHECK( bit_of( out, 4u, 0u ) == a );
        CHECK( bit_of( out, 4u, 2u ) == sum );
        CHECK( bit_of( out, 4u, 3u ) == carry );
      }
    }
  }
}

TEST_CASE( "verify_gate separates full, partial and irreversible gates", "[gate_library]" )
{
  auto const prg = verify_gate( *builtin( "PRG" ) );
  CHECK( prg.kind == reversibility::partially_reversible );
  REQUIRE( prg.domain.has_value() );
  CHECK( prg.domain->to_string() == "{0..9}" );
  CHECK( prg.collisions.empty() );

  auto const toffoli = verify_gate( *builtin( "TOFFOLI" ) );
  CHECK( toffoli.kind == reversibility::fully_reversible );
  CHECK_FALSE( toffoli.domain.has_value() );

  auto widened = *builtin( "PRG" );
  widened.declared_domain = input_domain::full( 4u );
  auto const bad = verify_gate( widened );
  CHECK( bad.kind == reversibility::irreversible );
  CHECK( bad.collisions == test::brute_force_collisions( widened.table, test::all_inputs( 4u ) ) );
  CHECK( bad.collisions.size() == 3u );

  auto undeclared = *builtin( "PRG" );
  undeclared.declared_domain.reset();
  CHECK( verify_gate( undeclared ).kind == reversibility::irreversible );

  CHECK( to_string( reversibility::partially_reversible ) == "partially reversible" );
}

TEST_CASE( "gate-spec files round trip and are checked on load", "[gate_library]" )
{
  for ( auto const& name : builtin_gate_names() )
  {
    auto const& g = *builtin( name );
    auto const back = reload( g );
    INFO( name );
    CHECK( back.name == g.name );
    CHECK( back.input_labels == g.input_labels );
    CHECK( back.output_labels == g.output_labels );
    CHECK( back.table == g.table );
    CHECK( back.declared_domain == g.declared_domain );
    CHECK( back.provenance == gate_provenance::user_file );
  }

  auto const swap = load_gate_spec( data_dir + "/swap.gate" );
  CHECK( swap.name == "SWAP" );
  CHECK( swap.table[0b01u] == 0b10u );

  try
  {
    load_gate_spec( data_dir + "/prg_full_domain.gate" );
    FAIL( "expected a collision error" );
  }
  catch ( collision_error const& e )
  {
    CHECK( e.collisions().size() == 3u );
  }
  CHECK( load_gate_spec( data_dir + "/prg_full_domain.gate", false ).declared_domain->size() == 16u );

  CHECK_THROWS_AS( load_gate_spec( data_dir + "/bad_rows.gate" ), parse_error );
  CHECK_THROWS_AS( load_gate_spec( data_dir + "/no_such.gate" ), error );
}

TEST_CASE( "gate-spec syntax errors carry line numbers", "[gate_library]" )
{
  auto line_of = []( std::string const& text ) -> std::size_t {
    std::istringstream in( text );
    try
    {
      read_gate_spec( in, "g" );
    }
    catch ( parse_error const& e )
    {
      return e.line();
    }
    return 0u;
  };
  auto const table = "table:\n.i 1\n.o 1\n0 1\n1 0\n";
  CHECK( line_of( std::string( "name: N\ninputs: A\noutputs: P\n" ) + table ) == 0u );
  CHECK( line_of( std::string( "name: N\nname: M\ninputs: A\noutputs: P\n" ) + table ) == 2u );
  CHECK( line_of( std::string( "name: N\ncolour: red\ninputs: A\noutputs: P\n" ) + table ) == 2u );
  CHECK( line_of( std::string( "name: N\ninputs: A, B\noutputs: P\n" ) + table ) == 2u );
  CHECK( line_of( std::string( "name: N\ninputs: A\noutputs: P\ndomain: 0..5\n" ) + table ) == 4u );
  CHECK( line_of( std::string( "name: bad name\ninputs: A\noutputs: P\n" ) + table ) == 1u );
}

TEST_CASE( "synthesis completes partial specifications", "[gate_library]" )
{
  auto const excess3 = synthesize_prg( read_partial_pla_file( data_dir + "/excess3.pla" ), "E3" );
  CHECK( is_bijective( excess3.table ) );
  CHECK( table_equal_on( excess3.table, builtin( "PRG" )->table, input_domain::bcd() ) );
  CHECK( verify_gate( excess3 ).kind == reversibility::fully_reversible );
  CHECK( excess3.declared_domain == input_domain::bcd() );

  auto const nines_spec = read_partial_pla_file( data_dir + "/nines_complement.pla" );
  auto const nines = synthesize_prg( nines_spec, "NINES" );
  CHECK( is_bijective( nines.table ) );
  CHECK( agrees_with( nines.table, nines_spec ) );
  for ( uint32_t x = 0u; x <= 9u; ++x )
  {
    CHECK( nines.table[x] == 9u - x );
  }

  CHECK_THROWS_AS( synthesize_prg( read_partial_pla_file( data_dir + "/constant.pla" ), "K" ), collision_error );
  CHECK_THROWS_AS( synthesize_prg( partial_spec( 2u, 3u, input_domain::full( 2u ), { 0u, 1u, 2u, 3u } ), "W" ),
                   width_error );

  auto const back = reload( nines );
  CHECK( back.table == nines.table );
  CHECK( back.declared_domain == nines.declared_domain );
}

TEST_CASE( "synthesized gates agree with random injective specifications", "[gate_library][property]" )
{
  std::mt19937 rng( 99u );
  for ( int trial = 0; trial < 200; ++trial )
  {
    auto const spec = test::random_injective_spec( 1u + static_cast<uint32_t>( trial % 6 ), rng );
    auto const g = synthesize_prg( spec, "G" );
    CHECK( test::brute_force_bijective( g.table ) );
    CHECK( agrees_with( g.table, spec ) );
    CHECK( verify_gate( g ).kind == reversibility::fully_reversible );
  }
}

TEST_CASE( "the registry rejects duplicates and unknown names", "[gate_library]" )
{
  gate_registry r;
  CHECK( r.contains( "PRG" ) );
  CHECK( r.names().size() == builtin_gate_names().size() );
  CHECK_THROWS_AS( r.lookup( "SWAP" ), unknown_gate_error );
  CHECK_THROWS_AS( r.add( *builtin( "TSG" ) ), duplicate_gate_error );

  auto const swap = r.load( data_dir + "/swap.gate" );
  CHECK( r.lookup( "SWAP" ) == swap );
  CHECK_THROWS_AS( r.load( data_dir + "/swap.gate" ), duplicate_gate_error );

  auto bad = *builtin( "CNOT" );
  bad.name = "CNOT2";
  bad.input_labels.pop_back();
  CHECK_THROWS_AS( r.add( bad ), width_error );
  CHECK_FALSE( r.contains( "CNOT2" ) );
}

TEST_CASE( "concurrent registration keeps exactly one definition per name", "[gate_library]" )
{
  gate_registry r;
  std::atomic<int> accepted{ 0 }, rejected{ 0 }, missing{ 0 };
  std::vector<std::thread> threads;
  for ( int t = 0; t < 8; ++t )
  {
    threads.emplace_back( [&, t] {
      for ( int k = 0; k < 20; ++k )
      {
        auto g = *builtin( "CNOT" );
        g.name = "G" + std::to_string( k );
        g.notes = { std::to_string( t ) };
        try
        {
          r.add( std::move( g ) );
          ++accepted;
        }
        catch ( duplicate_gate_error const& )
        {
          ++rejected;
        }
        if ( !r.contains( "G" + std::to_string( k ) ) )
        {
          ++missing;
        }
      }
    } );
  }
  for ( auto& th : threads )
  {
    th.join();
  }
  CHECK( accepted == 20 );
  CHECK( rejected == 140 );
  CHECK( missing == 0 );
}
