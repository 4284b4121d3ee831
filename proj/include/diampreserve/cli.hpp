#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diampreserve::cli {

// Exit codes shared by every command.
inline constexpr int kExitPreserving = 0;     // preserving / success / all replay steps passed
inline constexpr int kExitNotPreserving = 1;  // refuted / decomposition failed / a replay step failed
inline constexpr int kExitDegenerate = 2;     // singular map, n = 1, or replay below n = 3
inline constexpr int kExitError = 3;          // I/O, parse or dimension error

/// Runs one command. `args` excludes the program name. Input paths of "-" read `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace diampreserve::cli
