#include <partrev/netlist.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace partrev
{

std::string_view to_string( wire_kind kind )
{
  switch ( kind )
  {
  case wire_kind::primary_input:
    return "primary_input";
  case wire_kind::constant:
    return "constant";
  case wire_kind::internal:
    return "internal";
  case wire_kind::primary_output:
    return "primary_output";
  case wire_kind::garbage_output:
    return "garbage_output";
  case wire_kind::undriven:
    return "undriven";
  }
  return "unknown";
}

/* netlist */

std::optional<wire_index> netlist::find_wire( std::string_view id ) const
{
  if ( auto it = index_.find( id ); it != index_.end() )
  {
    return it->second;
  }
  return std::nullopt;
}

std::vector<wire_index> netlist::garbage_outputs() const
{
  std::vector<bool> gate_driven( wire_ids_.size(), false ), consumed( wire_ids_.size(), false );
  for ( auto const& inst : instances_ )
  {
    for ( auto w : inst.outputs )
    {
      gate_driven[w] = true;
    }
    for ( auto w : inst.inputs )
    {
      consumed[w] = true;
    }
  }
  for ( auto w : primary_outputs_ )
  {
    consumed[w] = true;
  }
  std::vector<wire_index> result;
  for ( wire_index w = 0u; w < wire_ids_.size(); ++w )
  {
    if ( gate_driven[w] && !consumed[w] )
    {
      result.push_back( w );
    }
  }
  return result;
}

wire_kind netlist::kind( wire_index w ) const
{
  if ( w >= wire_ids_.size() )
  {
    throw error( fmt::format( "wire index {} out of range", w ) );
  }
  if ( std::find( primary_inputs_.begin(), primary_inputs_.end(), w ) != primary_inputs_.end() )
  {
    return wire_kind::primary_input;
  }
  if ( std::any_of( constants_.begin(), constants_.end(), [w]( auto const& c ) { return c.wire == w; } ) )
  {
    return wire_kind::constant;
  }
  bool driven = false, consumed = false;
  for ( auto const& inst : instances_ )
  {
    driven = driven || std::find( inst.outputs.begin(), inst.outputs.end(), w ) != inst.outputs.end();
    consumed = consumed || std::find( inst.inputs.begin(), inst.inputs.end(), w ) != inst.inputs.end();
  }
  if ( !driven )
  {
    return wire_kind::undriven;
  }
  if ( std::find( primary_outputs_.begin(), primary_outputs_.end(), w ) != primary_outputs_.end() )
  {
    return wire_kind::primary_output;
  }
  return consumed ? wire_kind::internal : wire_kind::garbage_output;
}

netlist netlist::with_instance_order( std::vector<std::size_t> const& order ) const
{
  auto sorted = order;
  std::sort( sorted.begin(), sorted.end() );
  std::vector<std::size_t> expected( instances_.size() );
  std::iota( expected.begin(), expected.end(), std::size_t{ 0 } );
  if ( sorted != expected )
  {
    throw error( "instance order is not a permutation" );
  }
  netlist copy = *this;
  for ( std::size_t k = 0u; k < order.size(); ++k )
  {
    copy.instances_[k] = instances_[order[k]];
  }
  return copy;
}

/* netlist_builder */

netlist_builder::netlist_builder( std::string name ) : name_( std::move( name ) ) {}

netlist_builder& netlist_builder::add_input( std::string id )
{
  inputs_.push_back( std::move( id ) );
  return *this;
}

netlist_builder& netlist_builder::add_constant( std::string id, bool value )
{
  constants_.emplace_back( std::move( id ), value );
  return *this;
}

netlist_builder& netlist_builder::add_gate( gate_ptr gate, std::vector<std::string> inputs,
                                            std::vector<std::string> outputs, std::size_t line )
{
  if ( !gate )
  {
    throw error( "null gate" );
  }
  gates_.push_back( { std::move( gate ), std::move( inputs ), std::move( outputs ), line } );
  return *this;
}

netlist_builder& netlist_builder::add_output( std::string id )
{
  outputs_.push_back( std::move( id ) );
  return *this;
}

netlist_builder& netlist_builder::declare_garbage( std::string id )
{
  if ( !garbage_ )
  {
    garbage_.emplace();
  }
  garbage_->push_back( std::move( id ) );
  return *this;
}

netlist_builder& netlist_builder::set_garbage( std::vector<std::string> ids )
{
  garbage_ = std::move( ids );
  return *this;
}

netlist netlist_builder::build() const
{
  netlist n;
  n.name_ = name_;

  auto const intern = [&n]( std::string const& id ) {
    if ( auto it = n.index_.find( id ); it != n.index_.end() )
    {
      return it->second;
    }
    auto const w = static_cast<wire_index>( n.wire_ids_.size() );
    n.wire_ids_.push_back( id );
    n.index_.emplace( id, w );
    return w;
  };

  /* canonical numbering: drivers first, in declaration order */
  for ( auto const& id : inputs_ )
  {
    intern( id );
  }
  for ( auto const& [id, _] : constants_ )
  {
    intern( id );
  }
  for ( auto const& g : gates_ )
  {
    for ( auto const& id : g.outputs )
    {
      intern( id );
    }
  }

  for ( auto const& id : inputs_ )
  {
    n.primary_inputs_.push_back( intern( id ) );
  }
  for ( auto const& [id, value] : constants_ )
  {
    n.constants_.push_back( { intern( id ), value } );
  }
  for ( auto const& g : gates_ )
  {
    gate_instance inst{ g.gate, {}, {}, g.line };
    for ( auto const& id : g.inputs )
    {
      inst.inputs.push_back( intern( id ) );
    }
    for ( auto const& id : g.outputs )
    {
      inst.outputs.push_back( intern( id ) );
    }
    n.instances_.push_back( std::move( inst ) );
  }
  for ( auto const& id : outputs_ )
  {
    n.primary_outputs_.push_back( intern( id ) );
  }
  if ( garbage_ )
  {
    std::vector<wire_index> declared;
    for ( auto const& id : *garbage_ )
    {
      declared.push_back( intern( id ) );
    }
    n.declared_garbage_ = std::move( declared );
  }
  return n;
}

/* validation */

bool validation_result::has( std::string_view kind ) const
{
  return std::any_of( violations.begin(), violations.end(), [kind]( auto const& v ) { return v.kind == kind; } );
}

namespace
{

std::string format_violations( std::vector<violation> const& violations )
{
  std::string out;
  for ( auto const& v : violations )
  {
    out += fmt::format( "\n  {}: {}", v.kind, v.message );
  }
  return out;
}

std::string describe( gate_instance const& inst, std::size_t k )
{
  if ( inst.line != 0u )
  {
    return fmt::format( "instance #{} ({}, line {})", k, inst.gate->name, inst.line );
  }
  return fmt::format( "instance #{} ({})", k, inst.gate->name );
}

/* Kahn's algorithm over instances; nullopt when the wiring has a cycle. */
std::optional<std::vector<std::size_t>> topological_order( netlist const& n )
{
  auto const& instances = n.instances();
  std::vector<std::optional<std::size_t>> driver( n.wire_ids().size() );
  for ( std::size_t k = 0u; k < instances.size(); ++k )
  {
    for ( auto w : instances[k].outputs )
    {
      if ( !driver[w] )
      {
        driver[w] = k;
      }
    }
  }

  std::vector<std::vector<std::size_t>> successors( instances.size() );
  std::vector<std::size_t> pending( instances.size(), 0u );
  for ( std::size_t k = 0u; k < instances.size(); ++k )
  {
    for ( auto w : instances[k].inputs )
    {
      if ( driver[w] )
      {
        successors[*driver[w]].push_back( k );
        ++pending[k];
      }
    }
  }

  /* smallest ready index first, so the order is deterministic */
  std::set<std::size_t> ready;
  for ( std::size_t k = 0u; k < instances.size(); ++k )
  {
    if ( pending[k] == 0u )
    {
      ready.insert( k );
    }
  }
  std::vector<std::size_t> order;
  while ( !ready.empty() )
  {
    auto const k = *ready.begin();
    ready.erase( ready.begin() );
    order.push_back( k );
    for ( auto s : successors[k] )
    {
      if ( --pending[s] == 0u )
      {
        ready.insert( s );
      }
    }
  }
  if ( order.size() != instances.size() )
  {
    return std::nullopt;
  }
  return order;
}

} // namespace

invalid_netlist_error::invalid_netlist_error( std::string const& name, std::vector<violation> violations )
    : error( fmt::format( "netlist '{}' is invalid:{}", name, format_violations( violations ) ) ),
      violations_( std::move( violations ) )
{
}

validation_result validate( netlist const& n )
{
  validation_result result;
  auto const report = [&result]( std::string kind, std::string message ) {
    result.violations.push_back( { std::move( kind ), std::move( message ) } );
  };

  auto const& instances = n.instances();
  auto const num_wires = n.wire_ids().size();

  for ( std::size_t k = 0u; k < instances.size(); ++k )
  {
    auto const& inst = instances[k];
    if ( inst.inputs.size() != inst.gate->num_inputs() || inst.outputs.size() != inst.gate->num_outputs() )
    {
      report( "pin-count", fmt::format( "{} binds {} inputs and {} outputs, gate has {} and {}", describe( inst, k ),
                                        inst.inputs.size(), inst.outputs.size(), inst.gate->num_inputs(),
                                        inst.gate->num_outputs() ) );
    }
  }

  std::vector<uint32_t> drivers( num_wires, 0u ), consumers( num_wires, 0u );
  for ( auto w : n.primary_inputs() )
  {
    ++drivers[w];
  }
  for ( auto const& c : n.constants() )
  {
    ++drivers[c.wire];
  }
  for ( auto const& inst : instances )
  {
    for ( auto w : inst.outputs )
    {
      ++drivers[w];
    }
    for ( auto w : inst.inputs )
    {
      ++consumers[w];
    }
  }
  for ( auto w : n.primary_outputs() )
  {
    ++consumers[w];
  }

  for ( wire_index w = 0u; w < num_wires; ++w )
  {
    if ( drivers[w] == 0u )
    {
      report( "undriven", fmt::format( "wire '{}' has no driver", n.wire_id( w ) ) );
    }
    else if ( drivers[w] > 1u )
    {
      report( "multiple-drivers", fmt::format( "wire '{}' has {} drivers", n.wire_id( w ), drivers[w] ) );
    }
    if ( consumers[w] > 1u )
    {
      report( "fanout", fmt::format( "wire '{}' feeds {} consumers", n.wire_id( w ), consumers[w] ) );
    }
  }

  if ( auto const& declared = n.declared_garbage() )
  {
    auto const derived = n.garbage_outputs();
    std::set<wire_index> const declared_set( declared->begin(), declared->end() );
    std::set<wire_index> const derived_set( derived.begin(), derived.end() );
    if ( declared_set.size() != declared->size() )
    {
      report( "garbage", "garbage list names a wire twice" );
    }
    for ( auto w : declared_set )
    {
      if ( !derived_set.count( w ) )
      {
        report( "garbage", fmt::format( "wire '{}' is declared garbage but is not an unconsumed gate output",
                                        n.wire_id( w ) ) );
      }
    }
    for ( auto w : derived_set )
    {
      if ( !declared_set.count( w ) )
      {
        report( "garbage", fmt::format( "gate output '{}' is unconsumed but not declared garbage", n.wire_id( w ) ) );
      }
    }
  }

  if ( !topological_order( n ) )
  {
    /* instances left over after peeling every acyclic prefix lie on or behind a cycle */
    std::vector<std::string> names;
    std::vector<bool> placed( instances.size(), false );
    std::vector<bool> available( num_wires, true );
    for ( auto const& inst : instances )
    {
      for ( auto w : inst.outputs )
      {
        available[w] = false;
      }
    }
    bool progress = true;
    while ( progress )
    {
      progress = false;
      for ( std::size_t k = 0u; k < instances.size(); ++k )
      {
        if ( placed[k] ||
             !std::all_of( instances[k].inputs.begin(), instances[k].inputs.end(), [&]( auto w ) { return available[w]; } ) )
        {
          continue;
        }
        placed[k] = progress = true;
        for ( auto w : instances[k].outputs )
        {
          available[w] = true;
        }
      }
    }
    for ( std::size_t k = 0u; k < instances.size(); ++k )
    {
      if ( !placed[k] )
      {
        names.push_back( describe( instances[k], k ) );
      }
    }
    report( "cycle", fmt::format( "combinational loop through {}", fmt::join( names, ", " ) ) );
  }

  return result;
}

/* evaluation */

namespace
{

class evaluator
{
public:
  explicit evaluator( netlist const& n ) : n_( n )
  {
    if ( auto v = validate( n ); !v.ok() )
    {
      throw invalid_netlist_error( n.name(), std::move( v.violations ) );
    }
    order_ = *topological_order( n );
    garbage_ = n.garbage_outputs();
    values_.assign( n.wire_ids().size(), 0u );
    for ( auto const& c : n.constants() )
    {
      values_[c.wire] = c.value ? 1u : 0u;
    }
  }

  std::size_t num_garbage() const noexcept { return garbage_.size(); }

  std::pair<uint32_t, uint32_t> run( uint32_t input )
  {
    auto const& pis = n_.primary_inputs();
    for ( std::size_t k = 0u; k < pis.size(); ++k )
    {
      values_[pis[k]] = ( input >> ( pis.size() - 1u - k ) ) & 1u;
    }
    for ( auto k : order_ )
    {
      auto const& inst = n_.instances()[k];
      uint32_t word = 0u;
      for ( auto w : inst.inputs )
      {
        word = ( word << 1u ) | values_[w];
      }
      auto const out = inst.gate->table[word];
      auto const m = inst.outputs.size();
      for ( std::size_t p = 0u; p < m; ++p )
      {
        values_[inst.outputs[p]] = ( out >> ( m - 1u - p ) ) & 1u;
      }
    }
    return { gather( n_.primary_outputs() ), gather( garbage_ ) };
  }

private:
  uint32_t gather( std::vector<wire_index> const& wires ) const
  {
    uint32_t word = 0u;
    for ( auto w : wires )
    {
      word = ( word << 1u ) | values_[w];
    }
    return word;
  }

  netlist const& n_;
  std::vector<std::size_t> order_;
  std::vector<wire_index> garbage_;
  std::vector<uint8_t> values_;
};

void check_boundary_widths( netlist const& n, std::size_t garbage )
{
  if ( n.primary_inputs().size() > max_width || n.primary_outputs().size() > max_width || garbage > max_width )
  {
    throw width_error( fmt::format( "netlist '{}' has more than {} inputs, outputs or garbage outputs", n.name(),
                                    max_width ) );
  }
}

} // namespace

simulation_result simulate( netlist const& n, bit_word const& input )
{
  evaluator eval( n );
  check_boundary_widths( n, eval.num_garbage() );
  if ( input.width() != n.primary_inputs().size() )
  {
    throw width_error( fmt::format( "netlist '{}' has {} primary inputs, input word has {} bits", n.name(),
                                    n.primary_inputs().size(), input.width() ) );
  }
  auto const [primary, garbage] = eval.run( input.value() );
  return { bit_word( primary, static_cast<uint32_t>( n.primary_outputs().size() ) ),
           bit_word( garbage, static_cast<uint32_t>( eval.num_garbage() ) ) };
}

truth_table to_truth_table( netlist const& n )
{
  evaluator eval( n );
  auto const num_inputs = static_cast<uint32_t>( n.primary_inputs().size() );
  if ( num_inputs == 0u || num_inputs > max_width || n.primary_outputs().size() > max_width )
  {
    throw width_error( fmt::format( "netlist '{}' needs 1..{} primary inputs and at most {} outputs for a table",
                                    n.name(), max_width, max_width ) );
  }
  std::vector<uint32_t> rows( std::size_t{ 1 } << num_inputs );
  for ( uint32_t x = 0u; x < rows.size(); ++x )
  {
    rows[x] = eval.run( x ).first;
  }
  return truth_table( num_inputs, static_cast<uint32_t>( n.primary_outputs().size() ), std::move( rows ) );
}

uint32_t depth( netlist const& n )
{
  if ( auto v = validate( n ); !v.ok() )
  {
    throw invalid_netlist_error( n.name(), std::move( v.violations ) );
  }
  std::vector<uint32_t> level( n.wire_ids().size(), 0u );
  uint32_t deepest = 0u;
  auto const order = topological_order( n );
  for ( auto k : *order )
  {
    auto const& inst = n.instances()[k];
    uint32_t in_level = 0u;
    for ( auto w : inst.inputs )
    {
      in_level = std::max( in_level, level[w] );
    }
    for ( auto w : inst.outputs )
    {
      level[w] = in_level + 1u;
    }
    deepest = std::max( deepest, in_level + 1u );
  }
  return deepest;
}

} // namespace partrev
