#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "truth_table.hpp"

namespace partrev
{

enum class gate_provenance
{
  builtin,
  user_file
};

/*! \brief A named gate: its truth table plus, for partial reversible gates,
 *  the input domain on which reversibility is claimed.
 *
 * Pin labels are listed most-significant first; `input_labels[0]` is the
 * MSB of the table index.
 */
struct gate_def
{
  std::string name;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  truth_table table;
  std::optional<input_domain> declared_domain;
  gate_provenance provenance{ gate_provenance::builtin };
  /*! \brief Free-text remarks, emitted as comments in gate-spec files. */
  std::vector<std::string> notes;

  uint32_t num_inputs() const noexcept { return table.in_width(); }
  uint32_t num_outputs() const noexcept { return table.out_width(); }
};

using gate_ptr = std::shared_ptr<gate_def const>;

/*! \brief Names accepted by `builtin`. */
std::vector<std::string> const& builtin_gate_names();

/*! \brief Built-in gate definition: NOT, CNOT, TOFFOLI, FREDKIN, TSG or PRG.
 *
 * The returned pointer is shared; all calls with the same name return the same object.
 */
gate_ptr builtin( std::string_view name );

enum class reversibility
{
  fully_reversible,
  partially_reversible,
  irreversible
};

std::string_view to_string( reversibility r );

struct gate_verdict
{
  reversibility kind;
  /*! \brief The domain on which the gate is reversible (partial verdicts only). */
  std::optional<input_domain> domain;
  /*! \brief Witnesses of irreversibility on the checked domain. */
  std::vector<collision> collisions;
};

/*! \brief Classifies a gate.
 *
 * Fully reversible iff its table is a bijection.  Otherwise partially
 * reversible iff it declares a domain and is injective there.  Otherwise
 * irreversible, with the collisions found on the declared domain (or on all
 * inputs when none is declared).
 */
gate_verdict verify_gate( gate_def const& gate );

/*! \brief Completes an injective partial specification to a permutation gate.
 *
 * The result keeps `spec.domain()` as its declared domain.
 */
gate_def synthesize_prg( partial_spec const& spec, std::string name );

/*! \brief Default pin labels: A, B, ... for inputs and P, Q, ... for outputs (x/y indexed above 10 bits). */
std::vector<std::string> default_input_labels( uint32_t width );
std::vector<std::string> default_output_labels( uint32_t width );

/*! \brief Gate-spec document.
 *
 *   name: PRG
 *   inputs: A, B, C, D
 *   outputs: P, Q, R, S
 *   domain: bcd
 *   table:
 *   .i 4
 *   .o 4
 *   0000 0011
 *   ...
 *   .e
 *
 * `domain` is optional and takes `bcd` or a list of values and `a..b` ranges.
 * When `check_domain` is set, a declared domain that admits a collision is
 * rejected with `collision_error`.
 */
gate_def read_gate_spec( std::istream& in, std::string const& source = "<input>", bool check_domain = true );
gate_def load_gate_spec( std::string const& path, bool check_domain = true );
void write_gate_spec( std::ostream& out, gate_def const& gate );

/*! \brief Thread-safe name-to-gate registry, seeded with the built-in gates. */
class gate_registry
{
public:
  gate_registry();

  /*! \brief Registers a gate; a second registration of the same name throws `duplicate_gate_error`. */
  gate_ptr add( gate_def gate );

  /*! \brief Loads a gate-spec file and registers it. */
  gate_ptr load( std::string const& path );

  gate_ptr lookup( std::string_view name ) const;
  bool contains( std::string_view name ) const;
  std::vector<std::string> names() const;

private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, gate_ptr, std::less<>> gates_;
};

} // namespace partrev
