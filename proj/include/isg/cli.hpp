#ifndef ISG_CLI_HPP
#define ISG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace isg {

// Batch front end.  `args` excludes the program name.  Structures are read
// from a file argument or from `in` when the argument is "-".  Exit codes:
// 0 all checks pass, 1 a mathematical check failed (witness printed),
// 2 malformed input or usage.
int run_cli(std::vector<std::string> const& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace isg

#endif  // ISG_CLI_HPP
