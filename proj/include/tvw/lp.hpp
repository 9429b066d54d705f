#pragma once

#include "tvw/rational.hpp"

#include <optional>
#include <vector>

namespace tvw {

struct LpStats {
    long long pivots = 0;
};

// Feasibility of { x >= 0, A x = b } over the rationals, decided by phase-1
// simplex with Bland's rule (entering: lowest-index negative reduced cost;
// leaving: lowest-index among ratio-test ties), which cannot cycle. Returns a
// basic feasible point when one exists.
std::optional<std::vector<Rat>> lp_feasible_point(const std::vector<std::vector<Rat>>& A,
                                                  const std::vector<Rat>& b,
                                                  LpStats* stats = nullptr);

} // namespace tvw
