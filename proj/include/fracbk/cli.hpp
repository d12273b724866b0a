#ifndef FRACBK_CLI_HPP
#define FRACBK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fracbk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Points from "0.3", "0.1,0.5,0.9" or "a:b:n" (n evenly spaced values, ends included).
std::vector<double> parse_points(const std::string& spec);

/// Entry point of the `fracbk` executable. CSV goes to `out` unless --out is given.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracbk

#endif  // FRACBK_CLI_HPP
