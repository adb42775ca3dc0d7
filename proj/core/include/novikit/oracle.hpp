#pragma once

// Slow reference solver, deliberately independent of the slice machinery:
// decides invertibility over the bounded-below (or -above) completion of
// Z[t^{+-1}] by solving A * X = id level by level with exact rational
// arithmetic and an integrality check at every level. Verdicts from the fast
// path are diffed against this one by the test suites and the --oracle flag.

#include "novikit/laurent.hpp"

namespace novikit::oracle {

enum class Verdict { invertible_to_horizon, not_invertible, degenerate };

// univariate Laurent matrix; direction +1 solves in the completion with
// supports bounded below, -1 bounded above
Verdict matrix_invertible(const std::vector<std::vector<laurent::Laurent>>& a, int direction,
                          int horizon_levels);

Verdict poly_invertible(const laurent::Laurent& p, int direction, int horizon_levels);

}  // namespace novikit::oracle
