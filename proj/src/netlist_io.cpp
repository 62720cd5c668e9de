#include <partrev/netlist.hpp>

#include <cctype>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "text_util.hpp"

namespace partrev
{

namespace
{

bool is_wire_id( std::string_view s )
{
  if ( s.empty() )
  {
    return false;
  }
  for ( char c : s )
  {
    if ( !std::isalnum( static_cast<unsigned char>( c ) ) && c != '_' && c != '.' && c != '[' && c != ']' )
    {
      return false;
    }
  }
  return true;
}

std::vector<std::string> wire_list( std::string_view text, std::string const& source, std::size_t line )
{
  auto ids = detail::split_list( text );
  for ( auto const& id : ids )
  {
    if ( !is_wire_id( id ) )
    {
      throw parse_error( source, line, fmt::format( "invalid wire id '{}'", id ) );
    }
  }
  return ids;
}

std::vector<std::string> ids_of( netlist const& n, std::vector<wire_index> const& wires )
{
  std::vector<std::string> ids;
  ids.reserve( wires.size() );
  for ( auto w : wires )
  {
    ids.push_back( n.wire_id( w ) );
  }
  return ids;
}

} // namespace

netlist read_netlist( std::istream& in, gate_registry const& registry, std::string const& source )
{
  auto const lines = detail::read_lines( in );
  auto const last_line = lines.empty() ? std::size_t{ 1 } : lines.back().number;

  std::optional<std::string> name;
  std::optional<std::vector<std::string>> inputs, outputs, garbage;
  std::vector<std::pair<std::string, bool>> constants;
  struct parsed_gate
  {
    gate_ptr gate;
    std::vector<std::string> inputs, outputs;
    std::size_t line;
  };
  std::vector<parsed_gate> gates;

  for ( auto const& line : lines )
  {
    auto const kv = detail::split_key_value( line.text );
    if ( !kv )
    {
      throw parse_error( source, line.number, fmt::format( "expected 'key: value', got '{}'", line.text ) );
    }
    auto const& [key, value] = *kv;
    auto const once = [&]( bool present ) {
      if ( present )
      {
        throw parse_error( source, line.number, fmt::format( "duplicate field '{}'", key ) );
      }
    };

    if ( key == "name" )
    {
      once( name.has_value() );
      if ( value.empty() || value.find_first_of( " \t," ) != std::string::npos )
      {
        throw parse_error( source, line.number, fmt::format( "invalid netlist name '{}'", value ) );
      }
      name = value;
    }
    else if ( key == "inputs" )
    {
      once( inputs.has_value() );
      inputs = wire_list( value, source, line.number );
    }
    else if ( key == "outputs" )
    {
      once( outputs.has_value() );
      outputs = wire_list( value, source, line.number );
    }
    else if ( key == "garbage" )
    {
      once( garbage.has_value() );
      garbage = wire_list( value, source, line.number );
    }
    else if ( key == "constants" )
    {
      for ( auto const& token : detail::split_list( value ) )
      {
        auto const eq = token.find( '=' );
        if ( eq == std::string::npos || eq + 2u != token.size() || ( token.back() != '0' && token.back() != '1' ) ||
             !is_wire_id( token.substr( 0u, eq ) ) )
        {
          throw parse_error( source, line.number, fmt::format( "constant must be 'wire=0' or 'wire=1', got '{}'", token ) );
        }
        constants.emplace_back( token.substr( 0u, eq ), token.back() == '1' );
      }
    }
    else if ( key == "gate" )
    {
      auto const arrow = value.find( "->" );
      if ( arrow == std::string::npos )
      {
        throw parse_error( source, line.number, "gate line must read '<GATE> <inputs> -> <outputs>'" );
      }
      auto lhs = detail::split_list( std::string_view( value ).substr( 0u, arrow ) );
      if ( lhs.empty() )
      {
        throw parse_error( source, line.number, "gate line is missing the gate name" );
      }
      gate_ptr gate;
      try
      {
        gate = registry.lookup( lhs.front() );
      }
      catch ( unknown_gate_error const& e )
      {
        throw parse_error( source, line.number, e.what() );
      }
      auto const rhs = std::string_view( value ).substr( arrow + 2u );
      std::vector<std::string> ins( lhs.begin() + 1, lhs.end() );
      for ( auto const& id : ins )
      {
        if ( !is_wire_id( id ) )
        {
          throw parse_error( source, line.number, fmt::format( "invalid wire id '{}'", id ) );
        }
      }
      gates.push_back( { std::move( gate ), std::move( ins ), wire_list( rhs, source, line.number ), line.number } );
    }
    else
    {
      throw parse_error( source, line.number, fmt::format( "unknown field '{}'", key ) );
    }
  }

  if ( !name )
  {
    throw parse_error( source, last_line, "missing field 'name'" );
  }
  if ( !inputs || !outputs )
  {
    throw parse_error( source, last_line, "missing field 'inputs' or 'outputs'" );
  }

  netlist_builder b( *name );
  for ( auto& id : *inputs )
  {
    b.add_input( id );
  }
  for ( auto& [id, v] : constants )
  {
    b.add_constant( id, v );
  }
  for ( auto& g : gates )
  {
    b.add_gate( g.gate, g.inputs, g.outputs, g.line );
  }
  for ( auto& id : *outputs )
  {
    b.add_output( id );
  }
  if ( garbage )
  {
    b.set_garbage( std::move( *garbage ) );
  }

  auto n = b.build();
  if ( auto v = validate( n ); !v.ok() )
  {
    throw invalid_netlist_error( n.name(), std::move( v.violations ) );
  }
  return n;
}

netlist load_netlist( std::string const& path, gate_registry const& registry )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw error( fmt::format( "cannot open '{}'", path ) );
  }
  return read_netlist( in, registry, path );
}

void write_netlist( std::ostream& out, netlist const& n )
{
  out << "name: " << n.name() << '\n';
  out << "inputs: " << fmt::format( "{}", fmt::join( ids_of( n, n.primary_inputs() ), ", " ) ) << '\n';
  out << "outputs: " << fmt::format( "{}", fmt::join( ids_of( n, n.primary_outputs() ), ", " ) ) << '\n';
  if ( !n.constants().empty() )
  {
    std::vector<std::string> items;
    for ( auto const& c : n.constants() )
    {
      items.push_back( fmt::format( "{}={}", n.wire_id( c.wire ), c.value ? 1 : 0 ) );
    }
    out << "constants: " << fmt::format( "{}", fmt::join( items, ", " ) ) << '\n';
  }
  for ( auto const& inst : n.instances() )
  {
    out << "gate: " << inst.gate->name << ' ' << fmt::format( "{}", fmt::join( ids_of( n, inst.inputs ), ", " ) )
        << " -> " << fmt::format( "{}", fmt::join( ids_of( n, inst.outputs ), ", " ) ) << '\n';
  }
  if ( auto const garbage = n.garbage_outputs(); !garbage.empty() )
  {
    out << "garbage: " << fmt::format( "{}", fmt::join( ids_of( n, garbage ), ", " ) ) << '\n';
  }
}

bool same_structure( netlist const& a, netlist const& b )
{
  auto const instance_view = []( netlist const& n ) {
    std::vector<std::tuple<std::string, std::vector<std::string>, std::vector<std::string>>> v;
    for ( auto const& inst : n.instances() )
    {
      v.emplace_back( inst.gate->name, ids_of( n, inst.inputs ), ids_of( n, inst.outputs ) );
    }
    return v;
  };
  auto const constant_view = []( netlist const& n ) {
    std::vector<std::pair<std::string, bool>> v;
    for ( auto const& c : n.constants() )
    {
      v.emplace_back( n.wire_id( c.wire ), c.value );
    }
    return v;
  };
  return a.name() == b.name() && ids_of( a, a.primary_inputs() ) == ids_of( b, b.primary_inputs() ) &&
         ids_of( a, a.primary_outputs() ) == ids_of( b, b.primary_outputs() ) &&
         constant_view( a ) == constant_view( b ) && instance_view( a ) == instance_view( b ) &&
         ids_of( a, a.garbage_outputs() ) == ids_of( b, b.garbage_outputs() );
}

} // namespace partrev
