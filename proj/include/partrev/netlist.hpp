#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gate_library.hpp"
#include "truth_table.hpp"

namespace partrev
{

using wire_index = uint32_t;

enum class wire_kind
{
  primary_input,
  constant,
  internal,
  primary_output,
  garbage_output,
  /*! no driver; only present in invalid netlists */
  undriven
};

std::string_view to_string( wire_kind kind );

struct constant_wire
{
  wire_index wire;
  bool value;
};

struct gate_instance
{
  gate_ptr gate;
  std::vector<wire_index> inputs;
  std::vector<wire_index> outputs;
  /*! \brief Source line for file-loaded netlists, 0 otherwise. */
  std::size_t line{ 0u };
};

/*! \brief Fanout-free combinational network of gate instances.
 *
 * Wires are numbered canonically: primary inputs in declaration order, then
 * constants in declaration order, then gate outputs in instance and pin order,
 * then any wire referenced but never driven.  Garbage outputs are reported in
 * this order.  Instances may be stored in any order; evaluation follows a
 * topological order computed from the wiring.
 *
 * A netlist is a plain value; whether it is well formed is decided by
 * `validate`.  Operations that need a well-formed netlist throw
 * `invalid_netlist_error` otherwise.
 */
class netlist
{
public:
  std::string const& name() const noexcept { return name_; }
  std::vector<std::string> const& wire_ids() const noexcept { return wire_ids_; }
  std::string const& wire_id( wire_index w ) const { return wire_ids_.at( w ); }
  std::optional<wire_index> find_wire( std::string_view id ) const;

  std::vector<wire_index> const& primary_inputs() const noexcept { return primary_inputs_; }
  std::vector<wire_index> const& primary_outputs() const noexcept { return primary_outputs_; }
  std::vector<constant_wire> const& constants() const noexcept { return constants_; }
  std::vector<gate_instance> const& instances() const noexcept { return instances_; }
  /*! \brief Garbage wires named explicitly by the author (file-loaded netlists); checked by `validate`. */
  std::optional<std::vector<wire_index>> const& declared_garbage() const noexcept { return declared_garbage_; }

  /*! \brief Gate-output wires that are neither consumed nor primary outputs, in wire order. */
  std::vector<wire_index> garbage_outputs() const;
  wire_kind kind( wire_index w ) const;

  /*! \brief Same netlist with the instance list permuted; `order[k]` is the old index of new instance k. */
  netlist with_instance_order( std::vector<std::size_t> const& order ) const;

private:
  friend class netlist_builder;

  std::string name_;
  std::vector<std::string> wire_ids_;
  std::map<std::string, wire_index, std::less<>> index_;
  std::vector<wire_index> primary_inputs_;
  std::vector<wire_index> primary_outputs_;
  std::vector<constant_wire> constants_;
  std::vector<gate_instance> instances_;
  std::optional<std::vector<wire_index>> declared_garbage_;
};

/*! \brief Collects declarations by wire id and produces a canonically numbered netlist.
 *
 * No structural checks happen here, so ill-formed circuits can be built and
 * then diagnosed by `validate`.
 */
class netlist_builder
{
public:
  explicit netlist_builder( std::string name );

  netlist_builder& add_input( std::string id );
  netlist_builder& add_constant( std::string id, bool value );
  netlist_builder& add_gate( gate_ptr gate, std::vector<std::string> inputs, std::vector<std::string> outputs,
                             std::size_t line = 0u );
  netlist_builder& add_output( std::string id );
  netlist_builder& declare_garbage( std::string id );
  /*! \brief Replaces the declared garbage list; an empty list declares that there is no garbage. */
  netlist_builder& set_garbage( std::vector<std::string> ids );

  netlist build() const;

private:
  struct pending_gate
  {
    gate_ptr gate;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::size_t line;
  };

  std::string name_;
  std::vector<std::string> inputs_;
  std::vector<std::pair<std::string, bool>> constants_;
  std::vector<pending_gate> gates_;
  std::vector<std::string> outputs_;
  std::optional<std::vector<std::string>> garbage_;
};

struct violation
{
  /*! \brief One of: pin-count, undriven, multiple-drivers, fanout, cycle, garbage. */
  std::string kind;
  std::string message;

  friend bool operator==( violation const&, violation const& ) = default;
};

struct validation_result
{
  std::vector<violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has( std::string_view kind ) const;
};

class invalid_netlist_error : public error
{
public:
  invalid_netlist_error( std::string const& name, std::vector<violation> violations );

  std::vector<violation> const& violations() const noexcept { return violations_; }

private:
  std::vector<violation> violations_;
};

validation_result validate( netlist const& n );

struct simulation_result
{
  bit_word primary;
  /*! \brief Garbage outputs in wire order (MSB = lowest wire index); empty word when there are none. */
  bit_word garbage;
};

/*! \brief Evaluates the circuit on one input word (MSB = first primary input). */
simulation_result simulate( netlist const& n, bit_word const& input );

/*! \brief Exhaustive primary-output table; at most `max_width` primary inputs. */
truth_table to_truth_table( netlist const& n );

/*! \brief Longest chain of gate instances from the circuit inputs to any output; 0 without gates. */
uint32_t depth( netlist const& n );

/*! \brief Single PRG instance converting BCD to excess-3 with no garbage. */
netlist build_prg_converter();

/*! \brief Ripple cascade of four TSG full adders adding the constant `addend` to a 4-bit input.
 *
 * Stage i (bit 0 first) binds A = input bit i, B = addend bit i, C = 0 and
 * D = carry in; R is sum bit i, S is the carry to the next stage, and P, Q are
 * left unconsumed.  The first carry in is a constant 0 and the last carry out
 * is unconsumed.
 */
netlist build_tsg_ripple_adder( uint32_t addend = 0b0011u );

/*! \brief Netlist document.
 *
 *   name: tsg-adder
 *   inputs: x3, x2, x1, x0
 *   outputs: s3, s2, s1, s0
 *   constants: k0=1, k1=1, k2=0, k3=0
 *   gate: TSG x0, k0, z0, c0 -> p0, q0, s0, c1
 *   garbage: p0, q0
 *
 * `gate:` lines are kept in order; `constants:` may repeat.  Gate names are
 * resolved through `registry`.  The loaded netlist is validated and rejected
 * with `invalid_netlist_error` when ill formed.
 */
netlist read_netlist( std::istream& in, gate_registry const& registry, std::string const& source = "<input>" );
netlist load_netlist( std::string const& path, gate_registry const& registry );
void write_netlist( std::ostream& out, netlist const& n );

/*! \brief Structural equality by wire ids: name, boundary lists, constants, instances, garbage. */
bool same_structure( netlist const& a, netlist const& b );

} // namespace partrev
