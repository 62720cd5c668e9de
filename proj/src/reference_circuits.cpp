#include <partrev/netlist.hpp>

#include <fmt/format.h>

namespace partrev
{

netlist build_prg_converter()
{
  return netlist_builder( "prg-converter" )
      .add_input( "b3" )
      .add_input( "b2" )
      .add_input( "b1" )
      .add_input( "b0" )
      .add_gate( builtin( "PRG" ), { "b3", "b2", "b1", "b0" }, { "e3", "e2", "e1", "e0" } )
      .add_output( "e3" )
      .add_output( "e2" )
      .add_output( "e1" )
      .add_output( "e0" )
      .build();
}

netlist build_tsg_ripple_adder( uint32_t addend )
{
  if ( addend > 0b1111u )
  {
    throw width_error( fmt::format( "addend {} does not fit in 4 bits", addend ) );
  }

  auto const tsg = builtin( "TSG" );
  netlist_builder b( "tsg-adder" );
  for ( int i = 3; i >= 0; --i )
  {
    b.add_input( fmt::format( "b{}", i ) );
  }
  b.add_constant( "c0", false );
  for ( uint32_t i = 0u; i < 4u; ++i )
  {
    auto const k = fmt::format( "k{}", i );
    auto const z = fmt::format( "z{}", i );
    b.add_constant( k, ( addend >> i ) & 1u );
    b.add_constant( z, false );
    /* pins A, B, C, D -> P, Q, R, S */
    b.add_gate( tsg, { fmt::format( "b{}", i ), k, z, fmt::format( "c{}", i ) },
                { fmt::format( "p{}", i ), fmt::format( "q{}", i ), fmt::format( "e{}", i ), fmt::format( "c{}", i + 1u ) } );
  }
  for ( int i = 3; i >= 0; --i )
  {
    b.add_output( fmt::format( "e{}", i ) );
  }
  return b.build();
}

} // namespace partrev
