#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgadg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoSolution = 1;
inline constexpr int kExitUsage = 2;

// Command-line driver. `args` excludes the program name.
//   solve <instance> [--all] [--eps X] [--max-solutions K] [--symmetric] [--parallel] [--out FILE]
//   generate --n N --seed S [--extra-edges F] --out FILE [--truth FILE]
//   verify <instance> <realization> [--eps X]
//   bench [--count N] [--seed S]
// CGADG_EPS, when set, replaces the default eps.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgadg
