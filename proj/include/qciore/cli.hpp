#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qciore
{

/// Runs the command-line tool; args excludes the program name.
///
/// Exit codes: 0 success (designated value, valid, accepted, exhausted,
/// check passed), 1 the negative answer (not designated, refuted, rejected,
/// countermodel found, check failed), 2 usage, parse or file errors,
/// 3 search limit reached.
int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace qciore
