#ifndef POLYFP_DYNAMICS_HPP
#define POLYFP_DYNAMICS_HPP

#include <array>
#include <string>
#include <vector>

#include "polyfp/analysis.hpp"
#include "polyfp/polynomial.hpp"
#include "polyfp/rootfind.hpp"

namespace polyfp {

enum class OrbitStatus { converged, escaped, exhausted };

const char* to_string(OrbitStatus s);

/// Iterate storage cap; orbits that run longer keep only the final 16 points
/// (rate estimation needs only a suffix).
constexpr int kOrbitStorageCap = 10000;

struct Orbit {
    std::vector<Cplx> points; // x_0 ... x_steps while steps <= cap
    OrbitStatus status = OrbitStatus::exhausted;
    Cplx limit{};             // meaningful when converged
    int steps = 0;
};

/// Beyond 2 * (1 + Cauchy bound of p(z) - z), |p(z)| outgrows |z| and escape
/// is permanent.
double default_escape_radius(const Polynomial& p);

/// Fixed-point iteration x <- p(x) until successive iterates are within
/// conv_tol (converged), the orbit leaves the escape radius (escaped), or
/// max_steps is exhausted. escape_radius <= 0 selects the default.
Orbit iterate(const Polynomial& p, Cplx x0, int max_steps = 10000,
              double conv_tol = 1e-10, double escape_radius = 0.0);

struct RateEstimate {
    double rate = 0.0;      // geometric-mean |x_{k+1}-theta| / |x_k-theta|
    bool quadratic = false; // |p'(theta)| <= 1e-8: rate is not geometric
};

/// Empirical contraction ratio toward the fixed point theta, measured over
/// the last min(5, available) clean pre-convergence steps. Requires theta to
/// be a fixed point (residual <= 1e-9 * max(1, |theta|)) and the orbit from
/// x0 to actually reach it within the step budget.
RateEstimate convergence_rate(const Polynomial& p, Cplx theta, Cplx x0, int steps);

/// The degree(p) - 1 roots of p' (with multiplicity).
std::vector<Cplx> critical_points(const Polynomial& p, const RootFindConfig& cfg = {});

struct CoverageReport {
    std::vector<FixedPointRecord> fixed_points;
    std::vector<int> attractive_indices;      // indices into fixed_points
    std::vector<Cplx> criticals;
    std::vector<int> critical_fate;           // fixed_points index, or -1
    std::vector<std::vector<int>> covered_by; // per attractive point: critical indices
    bool all_covered = false;
    int attractive_count = 0;
    bool count_bound_ok = false;              // attractive_count <= degree - 1
};

/// Iterates every critical point and reports which attractive fixed points
/// capture one. An uncovered attractive point is possible when a critical
/// orbit is captured by an attracting cycle instead; that is reported, not
/// asserted away.
CoverageReport critical_orbit_coverage(const Polynomial& p,
                                       const RootFindConfig& cfg = {},
                                       int max_steps = 10000,
                                       double conv_tol = 1e-10);

struct Window {
    Cplx center{};
    double half_width = 2.0;
};

struct BasinImage {
    static constexpr int kEscape = -1;
    static constexpr int kOther = -2;

    int width = 0, height = 0;
    Window window;
    double half_height = 0.0;            // half_width * height / width
    std::vector<int> labels;             // row-major; >= 0 indexes attractive
    std::vector<int> iterations;
    std::vector<FixedPointRecord> attractive;
    int max_steps = 0;
    double conv_tol = 0.0;

    Cplx pixel_center(int px, int py) const;
};

/// Escape-time style raster over the window: each pixel is iterated and
/// labelled with the attractive fixed point its orbit reaches (matched within
/// 10 * conv_tol), the escape marker, or the "other" marker for unmatched or
/// exhausted orbits. Rows render in parallel; the label grid is bit-identical
/// for any worker count.
BasinImage render_basins(const Polynomial& p, Window window, int width, int height,
                         int max_steps = 256, const RootFindConfig& cfg = {},
                         double conv_tol = 1e-10, int workers = 0);

/// Fixed 12-colour palette for labels; escape renders black, "other" white.
const std::array<std::array<unsigned char, 3>, 12>& basin_palette();

/// Binary PPM (P6).
void write_ppm(const BasinImage& img, const std::string& path);

} // namespace polyfp

#endif
