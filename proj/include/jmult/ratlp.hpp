#ifndef JMULT_RATLP_HPP
#define JMULT_RATLP_HPP

#include <vector>

#include "jmult/bigint.hpp"
#include "jmult/monomial.hpp"

namespace jmult {

/// Exact feasibility of v ∈ conv(points) + R₊ⁿ, i.e. ∃ λ ≥ 0, Σλ = 1,
/// Σ λ_g·points[g] ≤ v componentwise. Decided by maximizing Σλ subject to
/// Σ λ_g·points[g] ≤ v over exact rationals (feasible iff the maximum
/// reaches 1); simplex with Bland's rule, so it terminates.
bool inNewtonPolyhedron(const std::vector<Exponent>& v,
                        const std::vector<std::vector<Exponent>>& points);

}  // namespace jmult

#endif
