#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include <partrev/truth_table.hpp>

#include "test_support.hpp"

using namespace partrev;

namespace
{

truth_table toffoli_oracle()
{
  /* P = A, Q = B, R = AB xor C, A is the MSB */
  return truth_table::from_function( 3u, 3u, []( uint32_t x ) {
    uint32_t const a = x >> 2u & 1u, b = x >> 1u & 1u, c = x & 1u;
    return ( a << 2u ) | ( b << 1u ) | ( ( a & b ) ^ c );
  } );
}

} // namespace

TEST_CASE( "bit words are MSB first and width checked", "[truth_table]" )
{
  auto const w = bit_word::parse( "1001" );
  CHECK( w.value() == 9u );
  CHECK( w.width() == 4u );
  CHECK( w.bit( 0u ) );
  CHECK_FALSE( w.bit( 1u ) );
  CHECK( w.to_string() == "1001" );
  CHECK( bit_word::parse( "" ).width() == 0u );

  CHECK_THROWS_AS( bit_word( 16u, 4u ), width_error );
  CHECK_THROWS_AS( bit_word( 0u, 21u ), width_error );
  CHECK_THROWS_AS( bit_word::parse( "10x1" ), error );

  auto const id = truth_table::identity( 4u );
  CHECK( id( w ) == w );
  CHECK_THROWS_AS( id( bit_word::parse( "101" ) ), width_error );
}

TEST_CASE( "truth table invariants are enforced", "[truth_table]" )
{
  CHECK_THROWS_AS( truth_table( 2u, 2u, { 0u, 1u, 2u } ), width_error );
  CHECK_THROWS_AS( truth_table( 2u, 1u, { 0u, 1u, 2u, 0u } ), width_error );
  CHECK_THROWS_AS( truth_table( 21u, 1u, {} ), width_error );
  CHECK_THROWS_AS( truth_table( 0u, 1u, { 0u } ), width_error );
}

TEST_CASE( "input domains are sorted, unique and non-empty", "[truth_table]" )
{
  input_domain const d( 4u, { 9u, 0u, 3u } );
  CHECK( std::vector<uint32_t>( d.members().begin(), d.members().end() ) == std::vector<uint32_t>{ 0u, 3u, 9u } );
  CHECK( d.contains( 3u ) );
  CHECK_FALSE( d.contains( 4u ) );

  CHECK_THROWS_AS( input_domain( 4u, std::vector<uint32_t>{} ), error );
  CHECK_THROWS_AS( input_domain( 4u, { 1u, 1u } ), error );
  CHECK_THROWS_AS( input_domain( 4u, { 16u } ), width_error );

  CHECK( input_domain::bcd().to_string() == "{0..9}" );
  CHECK( input_domain( 4u, { 1u, 4u, 7u, 8u, 9u, 10u } ).to_string() == "{1, 4, 7..10}" );
  CHECK( input_domain( 4u, { 2u, 3u } ).to_string() == "{2, 3}" );

  CHECK( input_domain::parse( 4u, "bcd" ) == input_domain::bcd() );
  CHECK( input_domain::parse( 4u, "0..9" ) == input_domain::bcd() );
  CHECK( input_domain::parse( 4u, "{0b0111, 8, 0xa}" ) == input_domain( 4u, { 7u, 8u, 10u } ) );
  CHECK_THROWS_AS( input_domain::parse( 3u, "bcd" ), width_error );
  CHECK_THROWS_AS( input_domain::parse( 4u, "3..1" ), error );
  CHECK_THROWS_AS( input_domain::parse( 4u, "seven" ), error );
}

TEST_CASE( "is_bijective", "[truth_table]" )
{
  CHECK( is_bijective( truth_table::identity( 4u ) ) );
  CHECK_FALSE( is_bijective( test::published_prg_table() ) );

  auto const toffoli = toffoli_oracle();
  REQUIRE( test::brute_force_bijective( toffoli ) );
  CHECK( is_bijective( toffoli ) );

  CHECK_THROWS_AS( is_bijective( truth_table( 2u, 1u, { 0u, 1u, 1u, 0u } ) ), width_error );
}

TEST_CASE( "is_injective_on reports every colliding pair in order", "[truth_table]" )
{
  auto const prg = test::published_prg_table();

  CHECK( is_injective_on( prg, input_domain::bcd() ).injective() );

  auto const full = is_injective_on( prg, input_domain::full( 4u ) );
  REQUIRE_FALSE( full.injective() );
  /* frozen from the brute-force oracle over the transcribed table */
  std::vector<collision> const expected = { { 0b0001u, 0b1111u, 0b0100u },
                                            { 0b0110u, 0b1110u, 0b1001u },
                                            { 0b1000u, 0b1010u, 0b1011u } };
  CHECK( test::brute_force_collisions( prg, test::all_inputs( 4u ) ) == expected );
  CHECK( full.collisions == expected );

  /* at least one pair from the PQR = 101 triple */
  auto const in_triple = []( uint32_t x ) { return x == 0b0111u || x == 0b1000u || x == 0b1010u; };
  CHECK( std::any_of( full.collisions.begin(), full.collisions.end(),
                      [&]( auto const& c ) { return in_triple( c.first ) && in_triple( c.second ); } ) );

  auto const d = input_domain::range( 4u, 5u, 12u );
  CHECK( is_injective_on( truth_table::identity( 4u ), d ).injective() );
  CHECK_THROWS_AS( is_injective_on( prg, input_domain::full( 3u ) ), width_error );
}

TEST_CASE( "three inputs share the published P,Q,R = 101, so no S column makes the table bijective", "[truth_table]" )
{
  std::vector<uint32_t> sharing;
  for ( uint32_t x = 0u; x < 16u; ++x )
  {
    if ( test::published_pqr( x ) == 0b101u )
    {
      sharing.push_back( x );
    }
  }
  CHECK( sharing == std::vector<uint32_t>{ 0b0111u, 0b1000u, 0b1010u } );
  CHECK( sharing.size() > 2u ); /* only two values of S exist */

  /* every S assignment for those three rows collides somewhere */
  for ( uint32_t s = 0u; s < 8u; ++s )
  {
    std::set<uint32_t> outs;
    for ( uint32_t k = 0u; k < 3u; ++k )
    {
      outs.insert( ( 0b101u << 1u ) | ( s >> k & 1u ) );
    }
    CHECK( outs.size() < 3u );
  }
}

TEST_CASE( "invert", "[truth_table]" )
{
  CHECK( invert( truth_table::identity( 4u ) ) == truth_table::identity( 4u ) );

  auto const add3 = truth_table::from_function( 4u, 4u, []( uint32_t x ) { return ( x + 3u ) % 16u; } );
  auto const sub3 = truth_table::from_function( 4u, 4u, []( uint32_t x ) { return ( x + 13u ) % 16u; } );
  CHECK( invert( add3 ) == sub3 );

  try
  {
    (void)invert( test::published_prg_table() );
    FAIL( "expected collision_error" );
  }
  catch ( collision_error const& e )
  {
    CHECK( e.collisions().size() == 3u );
  }
}

TEST_CASE( "lexicographic completion of the excess-3 specification", "[truth_table]" )
{
  auto const spec = partial_spec::from_function( 4u, 4u, input_domain::bcd(), []( uint32_t x ) { return x + 3u; } );
  auto const t = complete_to_permutation( spec, completion_strategy::lexicographic );

  CHECK( is_bijective( t ) );
  CHECK( agrees_with( t, spec ) );
  /* unused outputs {0000, 0001, 0010, 1101, 1110, 1111} in order */
  CHECK( t[0b1010u] == 0b0000u );
  CHECK( t[0b1011u] == 0b0001u );
  CHECK( t[0b1100u] == 0b0010u );
  CHECK( t[0b1101u] == 0b1101u );
  CHECK( t[0b1110u] == 0b1110u );
  CHECK( t[0b1111u] == 0b1111u );

  CHECK( table_equal_on( test::published_prg_table(), t, input_domain::bcd() ) );
}

TEST_CASE( "completion edge cases", "[truth_table]" )
{
  std::mt19937 rng( 7u );
  auto const perm = test::random_permutation( 5u, rng );
  auto const total = partial_spec::restricted_to( perm, input_domain::full( 5u ) );
  CHECK( complete_to_permutation( total ) == perm );

  partial_spec const clash( 4u, 4u, input_domain( 4u, { 1u, 2u, 3u } ), { 5u, 6u, 5u } );
  try
  {
    (void)complete_to_permutation( clash );
    FAIL( "expected collision_error" );
  }
  catch ( collision_error const& e )
  {
    REQUIRE( e.collisions().size() == 1u );
    CHECK( e.collisions().front() == collision{ 1u, 3u, 5u } );
  }

  partial_spec const uneven( 3u, 4u, input_domain( 3u, { 0u } ), { 1u } );
  CHECK_THROWS_AS( complete_to_permutation( uneven ), width_error );
}

TEST_CASE( "table_equal_on", "[truth_table]" )
{
  auto const prg = test::published_prg_table();
  CHECK_FALSE( table_equal_on( prg, truth_table::identity( 4u ), input_domain::bcd() ) );
  CHECK( table_equal_on( prg, prg, input_domain::full( 4u ) ) );
  CHECK_THROWS_AS( table_equal_on( prg, truth_table::identity( 3u ), input_domain::full( 3u ) ), width_error );
}

TEST_CASE( "bijective iff injective on the full domain", "[truth_table][property]" )
{
  std::mt19937 rng( 11u );
  for ( int trial = 0; trial < 300; ++trial )
  {
    auto const width = 1u + rng() % 8u;
    /* mix permutations in so both verdicts occur */
    auto const t = ( trial % 2 == 0 ) ? test::random_permutation( width, rng ) : test::random_table( width, width, rng );
    CHECK( is_bijective( t ) == is_injective_on( t, input_domain::full( width ) ).injective() );
    CHECK( is_bijective( t ) == test::brute_force_bijective( t ) );
  }
}

TEST_CASE( "collision lists match the pairwise oracle", "[truth_table][property]" )
{
  std::mt19937 rng( 12u );
  for ( int trial = 0; trial < 200; ++trial )
  {
    auto const width = 1u + rng() % 6u;
    auto const t = test::random_table( width, 1u + rng() % width, rng );
    auto const d = test::random_domain( width, rng );
    std::vector<uint32_t> const members( d.members().begin(), d.members().end() );
    CHECK( is_injective_on( t, d ).collisions == test::brute_force_collisions( t, members ) );
  }
}

TEST_CASE( "injectivity is inherited by subsets", "[truth_table][property]" )
{
  std::mt19937 rng( 13u );
  int injective_cases = 0;
  for ( int trial = 0; trial < 500; ++trial )
  {
    auto const width = 2u + rng() % 6u;
    auto const t = test::random_table( width, width, rng );
    auto const d = test::random_domain( width, rng );
    if ( !is_injective_on( t, d ).injective() )
    {
      continue;
    }
    ++injective_cases;
    std::vector<uint32_t> subset;
    for ( auto x : d.members() )
    {
      if ( rng() % 2u == 0u )
      {
        subset.push_back( x );
      }
    }
    if ( subset.empty() )
    {
      subset.push_back( d.members().front() );
    }
    CHECK( is_injective_on( t, input_domain( width, subset ) ).injective() );
  }
  CHECK( injective_cases > 0 );
}

TEST_CASE( "invert is an involution on bijections", "[truth_table][property]" )
{
  std::mt19937 rng( 14u );
  for ( int trial = 0; trial < 100; ++trial )
  {
    auto const t = test::random_permutation( 1u + rng() % 8u, rng );
    auto const inv = invert( t );
    for ( uint32_t x = 0u; x < t.num_rows(); ++x )
    {
      REQUIRE( inv[t[x]] == x );
    }
    CHECK( invert( inv ) == t );
  }
}

TEST_CASE( "completion of random injective specs", "[truth_table][property]" )
{
  std::mt19937 rng( 15u );
  for ( int trial = 0; trial < 300; ++trial )
  {
    auto const spec = test::random_injective_spec( 1u + rng() % 8u, rng );
    auto const t = complete_to_permutation( spec );
    CHECK( is_bijective( t ) );
    CHECK( agrees_with( t, spec ) );
    CHECK( complete_to_permutation( spec ) == t );
  }
}
