#ifndef RAMLAB_CLI_HPP
#define RAMLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ramlab {

// Dispatch a CLI invocation (argv without the program name).  Reports are
// written to `out` as JSON; human-oriented diagnostics go to `err`.
// Exit status: 0 ok, 1 domain/parse errors, 2 precision/resource errors,
// 3 internal inconsistencies.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shorthand divisor grammar: "m1[p1]+m2[p2]" with places "inf", "t", "t+1",
// an integer a (the point t = a), or a bracketed coefficient list; "0" is the
// empty divisor.
class EffectiveDivisor;
class FqField;

} // namespace ramlab

#endif
