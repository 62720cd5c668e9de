#pragma once

#include <iosfwd>
#include <string>

#include "truth_table.hpp"

namespace partrev
{

/* PLA-like table text:
 *
 *   # comment
 *   .i 4
 *   .o 4
 *   0000 0011
 *   0001 0100
 *   ...
 *
 * One row per input value in ascending order, bits MSB first.  A partial
 * specification marks out-of-domain rows with an all-`-` output.
 */

truth_table read_pla( std::istream& in, std::string const& source = "<input>" );
truth_table read_pla_file( std::string const& path );

partial_spec read_partial_pla( std::istream& in, std::string const& source = "<input>" );
partial_spec read_partial_pla_file( std::string const& path );

void write_pla( std::ostream& out, truth_table const& table );
void write_partial_pla( std::ostream& out, partial_spec const& spec );

} // namespace partrev
