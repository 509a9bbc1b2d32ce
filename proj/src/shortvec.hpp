// Exact short-vector enumeration for positive definite rational quadratic
// forms: branch-and-bound on the LDL^t decomposition with exact rational
// pivots and integer coordinate ranges (no floating point decides anything,
// doubles only seed the exact range search).
#pragma once

#include <functional>
#include <vector>

#include "linalg.hpp"
#include "types.hpp"

namespace a4ssl {

// Visits every v != 0 with v^T A v <= bound, one vector per +-pair (the
// highest-index nonzero coordinate is positive). A must be symmetric positive
// definite; throws InvalidArgument otherwise.
void enumerate_short_vectors(
    const Mat<Rat>& gram, const Rat& bound,
    const std::function<void(const std::vector<long long>&, const Rat&)>& visit);

}  // namespace a4ssl
