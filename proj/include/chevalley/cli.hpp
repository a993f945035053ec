#pragma once

#include <ostream>

namespace chevalley::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitRelationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. Subcommands:
///   verify --n INT --level {group,adjoint,all} [--params "a1,a2,..."] [--json PATH] [--max-rank INT]
///   eval-word --n INT --word "i j -k" [--params ...]
///   normalizer-check --matrix PATH
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace chevalley::cli
