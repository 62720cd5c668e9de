#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partrev
{

/*! \brief Exit statuses of the command-line tool. */
namespace exit_code
{
inline constexpr int success = 0;
/*! irreversible gate, invalid circuit, failed check */
inline constexpr int failure = 1;
/*! bad arguments, unreadable or malformed input */
inline constexpr int usage = 2;
} // namespace exit_code

/*! \brief Runs one command; `args` excludes the program name.
 *
 *   gate verify|show <gate or file>
 *   synth prg <spec.pla> --out <gate file>
 *   circuit simulate|table|metrics <netlist or file>
 *   compare <baseline> <proposed>
 *   demo table2
 */
int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace partrev
