#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include <partrev/metrics.hpp>

using namespace partrev;

TEST_CASE( "costs of the reference circuits", "[metrics]" )
{
  CHECK( measure( build_tsg_ripple_adder() ) == cost_report{ 4u, 9u, 9u, 4u } );
  CHECK( measure( build_prg_converter() ) == cost_report{ 1u, 0u, 0u, 1u } );

  auto const wires = netlist_builder( "wires" ).add_input( "a" ).add_output( "a" ).build();
  CHECK( measure( wires ) == cost_report{ 0u, 0u, 0u, 0u } );

  auto const broken = netlist_builder( "broken" )
                          .add_input( "a" )
                          .add_gate( builtin( "NOT" ), { "b" }, { "y" } )
                          .add_output( "y" )
                          .build();
  CHECK_THROWS_AS( measure( broken ), invalid_netlist_error );
}

TEST_CASE( "improvement ratios", "[metrics]" )
{
  auto const cmp = compare( { 4u, 9u, 9u, 4u }, { 1u, 0u, 0u, 1u } );
  CHECK( cmp.gates.percent() == 400.0 );
  CHECK( cmp.garbage.percent() == 900.0 );
  CHECK( cmp.delay.percent() == 400.0 );
  CHECK( cmp.garbage.zero_denominator() );
  CHECK_FALSE( cmp.gates.zero_denominator() );
  CHECK( cmp.gates.to_string() == "400%" );
  CHECK( cmp.garbage.to_string() == "900%" );

  auto const self = compare( { 4u, 9u, 9u, 4u }, { 4u, 9u, 9u, 4u } );
  CHECK( self.gates.to_string() == "100%" );
  CHECK( self.garbage.to_string() == "100%" );
  CHECK( self.delay.to_string() == "100%" );

  auto const halved = compare( { 2u, 0u, 0u, 2u }, { 1u, 0u, 0u, 1u } );
  CHECK( halved.gates.percent() == 200.0 );
  CHECK( halved.delay.percent() == 200.0 );
  CHECK( halved.garbage.to_string() == "0%" );

  CHECK( improvement_ratio( 4u, 3u ).to_string() == "133.33%" );
  CHECK_FALSE( improvement_ratio( 4u, 3u ).exact() );
  CHECK( improvement_ratio( 2u, 3u ).to_string() == "66.67%" );
  CHECK( improvement_ratio( 0u, 0u ).to_string() == "0%" );
  CHECK( improvement_ratio( 8u, 2u ) == improvement_ratio( 4u, 1u ) );
  CHECK_FALSE( improvement_ratio( 8u, 3u ) == improvement_ratio( 4u, 1u ) );
}

TEST_CASE( "scaling both costs leaves the ratio unchanged", "[metrics][property]" )
{
  std::mt19937 rng( 5u );
  std::uniform_int_distribution<uint64_t> value( 1u, 1000u ), factor( 1u, 50u );
  for ( int trial = 0; trial < 500; ++trial )
  {
    auto const b = value( rng ), p = value( rng ), k = factor( rng );
    improvement_ratio const base( b, p ), scaled( b * k, p * k );
    CHECK( base == scaled );
    CHECK( base.to_string() == scaled.to_string() );
    CHECK( base.percent() == Catch::Approx( static_cast<double>( b ) * 100.0 / static_cast<double>( p ) ) );
  }
}

TEST_CASE( "comparison reports in csv and text", "[metrics]" )
{
  named_report const adder{ "tsg-adder", { 4u, 9u, 9u, 4u } };
  named_report const prg{ "prg-converter", { 1u, 0u, 0u, 1u } };

  std::ostringstream csv;
  write_comparison( csv, adder, prg, report_format::csv );
  CHECK( csv.str() == "name,gates,garbage,constants,delay\n"
                      "tsg-adder,4,9,9,4\n"
                      "prg-converter,1,0,0,1\n"
                      "improvement,400%,900%,,400%\n" );

  std::ostringstream text;
  write_comparison( text, adder, prg, report_format::text );
  auto const s = text.str();
  CHECK( s.find( "ratio = baseline / proposed x 100; when proposed is 0, ratio = baseline x 100" ) != std::string::npos );
  CHECK( s.find( "note: garbage ratio uses the zero-denominator rule" ) != std::string::npos );
  CHECK( s.find( "note: gates" ) == std::string::npos );

  std::ostringstream rows;
  write_reports( rows, { adder, prg }, report_format::csv );
  CHECK( rows.str() == "name,gates,garbage,constants,delay\ntsg-adder,4,9,9,4\nprg-converter,1,0,0,1\n" );
}
