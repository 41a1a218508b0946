#ifndef HOPFIND_CLI_HPP
#define HOPFIND_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfind {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;   // axiom or predicate failure
inline constexpr int kExitInput = 2;  // usage, I/O or parse failure

// Runs the command line tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfind

#endif
