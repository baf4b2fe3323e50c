#ifndef POLYFP_TESTS_HELPERS_HPP
#define POLYFP_TESTS_HELPERS_HPP

#include <cmath>
#include <vector>

#include "polyfp/hermite.hpp"
#include "polyfp/polynomial.hpp"
#include "polyfp/rng.hpp"

namespace polyfp::testing {

inline bool close(Cplx a, Cplx b, double tol) { return std::abs(a - b) <= tol; }

inline double rel_err(Cplx got, Cplx want) {
    double denom = std::max(std::abs(got), std::abs(want));
    if (denom == 0.0) return 0.0;
    return std::abs(got - want) / denom;
}

// n points in the unit disk with pairwise separation >= min_sep.
inline std::vector<Cplx> separated_disk_points(SplitMix64& rng, int n,
                                               double min_sep, double radius = 1.0) {
    std::vector<Cplx> pts;
    while (static_cast<int>(pts.size()) < n) {
        Cplx cand = rng.disk(radius);
        bool ok = true;
        for (const Cplx& p : pts)
            if (std::abs(cand - p) < min_sep) { ok = false; break; }
        if (ok) pts.push_back(cand);
        // dense corpora always fit; no retry cap needed at these sizes
    }
    return pts;
}

// Random prescription: points in the unit disk, |alpha| < 1.
inline NodeSystem random_node_system(SplitMix64& rng, int n, double min_sep = 1e-3) {
    std::vector<Cplx> pts = separated_disk_points(rng, n, min_sep);
    std::vector<Node> nodes;
    nodes.reserve(pts.size());
    for (const Cplx& z : pts) nodes.push_back(Node{z, rng.disk()});
    return NodeSystem(std::move(nodes));
}

// n separated reals in [-1, 1].
inline std::vector<double> separated_reals(SplitMix64& rng, int n, double min_gap) {
    std::vector<double> xs;
    while (static_cast<int>(xs.size()) < n) {
        double cand = rng.uniform(-1.0, 1.0);
        bool ok = true;
        for (double x : xs)
            if (std::abs(cand - x) < min_gap) { ok = false; break; }
        if (ok) xs.push_back(cand);
    }
    return xs;
}

// Collinear prescription with |alpha| < 1; 30% of draws use a vertical line.
// direction_out receives the line direction (1 + m*i, or i when vertical).
inline NodeSystem random_collinear_system(SplitMix64& rng, int n, Cplx* direction_out) {
    std::vector<double> ts = separated_reals(rng, n, 0.05);
    Cplx direction, base;
    if (rng.uniform() < 0.3) {
        direction = Cplx{0.0, 1.0};
        base = Cplx{rng.uniform(-0.5, 0.5), 0.0};
    } else {
        double m = rng.uniform(-2.0, 2.0);
        direction = Cplx{1.0, m};
        base = Cplx{0.0, rng.uniform(-0.5, 0.5)};
    }
    std::vector<Node> nodes;
    nodes.reserve(ts.size());
    for (double t : ts) nodes.push_back(Node{base + t * direction, rng.disk()});
    if (direction_out) *direction_out = direction;
    return NodeSystem(std::move(nodes));
}

} // namespace polyfp::testing

#endif
