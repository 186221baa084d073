#pragma once

#include <vector>

#include "spreadlab/rational.hpp"

namespace spreadlab {

struct SimplexResult {
    bool feasible = false;
    std::vector<Rational> x; // a feasible point when feasible
};

/// Decide feasibility of { A x = b, x >= 0 } by a phase-one simplex over
/// exact rationals with Bland's rule (entering: lowest eligible column;
/// leaving: lowest basis label among ratio ties), so termination is
/// guaranteed.
SimplexResult phase_one_feasible(std::vector<std::vector<Rational>> A,
                                 std::vector<Rational> b);

} // namespace spreadlab
