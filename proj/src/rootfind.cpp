#include "polyfp/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyfp/rng.hpp"

namespace polyfp {

namespace {

bool lex_less(const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// One Ehrlich-Aberth pass over all non-converged approximations, in place
// (Gauss-Seidel style: each update sees the ones before it).
//
// Returns the largest correction magnitude applied this sweep.
double aberth_sweep(const Polynomial& p, std::vector<Cplx>& w,
                    std::vector<char>& done, double tol, SplitMix64& rng) {
    double max_corr = 0.0;
    const int d = static_cast<int>(w.size());
    for (int i = 0; i < d; ++i) {
        if (done[i]) continue;
        auto [pv, dv] = p.eval_with_derivative(w[i]);
        if (std::abs(pv) <= tol * residual_scale(p, w[i])) {
            done[i] = 1;
            continue;
        }
        if (pv == Cplx{}) { // exact hit below the scale floor
            done[i] = 1;
            continue;
        }
        if (dv == Cplx{}) {
            // stationary point: nudge off it deterministically
            double mag = 1e-6 * (1.0 + std::abs(w[i]));
            double t = 6.283185307179586 * rng.uniform();
            w[i] += Cplx{mag * std::cos(t), mag * std::sin(t)};
            max_corr = std::max(max_corr, mag);
            continue;
        }
        Cplx newton = pv / dv;
        Cplx repulsion{};
        bool collision = false;
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            Cplx diff = w[i] - w[j];
            if (diff == Cplx{}) { collision = true; break; }
            repulsion += 1.0 / diff;
        }
        if (collision) {
            double mag = 1e-6 * (1.0 + std::abs(w[i]));
            double t = 6.283185307179586 * rng.uniform();
            w[i] += Cplx{mag * std::cos(t), mag * std::sin(t)};
            max_corr = std::max(max_corr, mag);
            continue;
        }
        Cplx denom = Cplx{1.0, 0.0} - newton * repulsion;
        Cplx corr = (std::abs(denom) < 1e-300) ? newton : newton / denom;
        Cplx next = w[i] - corr;
        if (!is_finite(next)) {
            double mag = 0.5 * (1.0 + std::abs(w[i]));
            double t = 6.283185307179586 * rng.uniform();
            w[i] += Cplx{mag * std::cos(t), mag * std::sin(t)};
            max_corr = std::max(max_corr, mag);
            continue;
        }
        w[i] = next;
        max_corr = std::max(max_corr, std::abs(corr));
    }
    return max_corr;
}

} // namespace

double residual_scale(const Polynomial& p, Cplx z) {
    const double az = std::abs(z);
    double scale = 0.0;
    double zpow = 1.0;
    for (const Cplx& c : p.coeffs()) {
        scale += std::abs(c) * zpow;
        zpow *= az;
    }
    return scale;
}

Cplx polish_root(const Polynomial& p, Cplx z0) {
    Cplx best = z0;
    double best_val = std::abs(p(z0));
    Cplx z = z0;
    for (int step = 0; step < 5 && best_val > 0.0; ++step) {
        auto [pv, dv] = p.eval_with_derivative(z);
        if (pv == Cplx{} || dv == Cplx{}) break;
        z -= pv / dv;
        if (!is_finite(z)) break;
        double val = std::abs(p(z));
        if (val < best_val) {
            best = z;
            best_val = val;
        }
    }
    return best;
}

std::vector<Cplx> find_roots(const Polynomial& p, const RootFindConfig& cfg) {
    if (p.degree() < 1)
        throw DegreeZero("find_roots: polynomial has no roots to find (degree < 1)");

    // Exact zero roots come off first; they cost the residual criterion
    // nothing and Aberth handles clusters at the origin poorly.
    std::vector<Cplx> coeffs = p.coeffs();
    std::size_t zero_roots = 0;
    while (zero_roots + 1 < coeffs.size() && coeffs[zero_roots] == Cplx{})
        ++zero_roots;
    std::vector<Cplx> roots(zero_roots, Cplx{});

    std::vector<Cplx> reduced(coeffs.begin() + static_cast<long>(zero_roots), coeffs.end());
    const int d = static_cast<int>(reduced.size()) - 1;
    if (d >= 1) {
        Polynomial q{std::vector<Cplx>(reduced)};
        if (d == 1) {
            roots.push_back(polish_root(q, -q.coeff(0) / q.coeff(1)));
        } else {
            SplitMix64 rng(cfg.seed);
            const double radius = cauchy_root_bound(q);
            const double phase = 6.283185307179586 * rng.uniform();
            std::vector<Cplx> w(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) {
                double t = phase + 6.283185307179586 * i / d;
                w[static_cast<std::size_t>(i)] = Cplx{radius * std::cos(t), radius * std::sin(t)};
            }

            std::vector<char> done(static_cast<std::size_t>(d), 0);
            int stagnant = 0;
            for (int it = 0; it < cfg.max_iter; ++it) {
                double max_corr = aberth_sweep(q, w, done, cfg.tol, rng);
                if (std::all_of(done.begin(), done.end(), [](char f) { return f != 0; }))
                    break;
                double wmag = 1.0;
                for (const Cplx& wi : w) wmag = std::max(wmag, std::abs(wi));
                if (max_corr <= 1e-16 * wmag) {
                    if (++stagnant >= 3) break; // cluster limit cycle; residual check decides
                } else {
                    stagnant = 0;
                }
            }

            for (Cplx& wi : w) wi = polish_root(q, wi);
            for (const Cplx& wi : w) {
                if (std::abs(q(wi)) > cfg.tol * residual_scale(q, wi))
                    throw NoConvergence(
                        "find_roots: residual target not met after " +
                        std::to_string(cfg.max_iter) + " sweeps (degree " +
                        std::to_string(p.degree()) + ")");
            }
            roots.insert(roots.end(), w.begin(), w.end());
        }
    }

    std::sort(roots.begin(), roots.end(), lex_less);
    return roots;
}

std::vector<Cplx> fixed_points(const Polynomial& p, const RootFindConfig& cfg) {
    if (p.degree() < 2)
        throw DegreeTooSmall("fixed_points: degree must be >= 2, got " +
                             std::to_string(p.degree()));
    std::vector<Cplx> shifted = p.coeffs();
    shifted[1] -= Cplx{1.0, 0.0};
    return find_roots(Polynomial{std::move(shifted)}, cfg);
}

} // namespace polyfp
