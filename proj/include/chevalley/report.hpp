#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevalley/matrix.hpp"

namespace chevalley {

enum class Execution { Serial, Parallel };

/// Outcome of checking one relation instance. The evaluated sides are kept
/// only when the check fails.
struct RelationResult {
  std::string tag;
  int i = 0;
  int j = 0;
  bool pass = false;
  std::optional<Matrix> left;
  std::optional<Matrix> right;

  bool operator==(const RelationResult&) const = default;
};

struct Report {
  int n = 0;
  std::vector<RelationResult> relations;

  bool all_pass() const {
    for (const auto& r : relations)
      if (!r.pass)
        return false;
    return true;
  }

  bool operator==(const Report&) const = default;
};

} // namespace chevalley
