#ifndef POLYFP_ROOTFIND_HPP
#define POLYFP_ROOTFIND_HPP

#include <cstdint>
#include <vector>

#include "polyfp/polynomial.hpp"

namespace polyfp {

struct RootFindConfig {
    double tol = 1e-12;      // relative residual target
    int max_iter = 200;
    std::uint64_t seed = 1;  // perturbs the initial circle phase
};

/// sum_k |a_k| |z|^k — the natural magnitude against which a residual
/// |p(z)| is judged.
double residual_scale(const Polynomial& p, Cplx z);

/// All degree(p) roots (with multiplicity), found by Ehrlich-Aberth
/// simultaneous iteration from a seed-rotated circle of Cauchy-bound radius,
/// then Newton-polished. Every returned root r satisfies
/// |p(r)| <= tol * residual_scale(p, r). Sorted by (re, im) for determinism.
///
/// Throws DegreeZero when degree(p) < 1 and NoConvergence when the residual
/// target cannot be met within max_iter sweeps.
std::vector<Cplx> find_roots(const Polynomial& p, const RootFindConfig& cfg = {});

/// Roots of p(z) - z: the fixed points of p, same contract as find_roots.
/// Throws DegreeTooSmall when degree(p) < 2.
std::vector<Cplx> fixed_points(const Polynomial& p, const RootFindConfig& cfg = {});

/// At most 5 Newton steps from z0, keeping the best |p(z)| seen; returns z0
/// unchanged if nothing improves (including the degenerate p'(z0) = 0 case).
Cplx polish_root(const Polynomial& p, Cplx z0);

} // namespace polyfp

#endif
