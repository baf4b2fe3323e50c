#include "polyfp/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <thread>

namespace polyfp {

const char* to_string(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::converged: return "converged";
        case OrbitStatus::escaped: return "escaped";
        case OrbitStatus::exhausted: return "exhausted";
    }
    return "?";
}

double default_escape_radius(const Polynomial& p) {
    std::vector<Cplx> shifted = p.coeffs();
    if (shifted.size() >= 2) shifted[1] -= Cplx{1.0, 0.0};
    Polynomial q{std::move(shifted)};
    if (q.degree() < 1) return 1e6;
    return 2.0 * (1.0 + cauchy_root_bound(q));
}

Orbit iterate(const Polynomial& p, Cplx x0, int max_steps, double conv_tol,
              double escape_radius) {
    require_finite(x0, "iterate seed");
    if (max_steps < 1) max_steps = 1;
    if (escape_radius <= 0.0) escape_radius = default_escape_radius(p);

    Orbit orbit;
    orbit.status = OrbitStatus::exhausted;

    const bool capped = max_steps > kOrbitStorageCap;
    std::deque<Cplx> tail;
    auto record = [&](Cplx x) {
        if (!capped) {
            orbit.points.push_back(x);
        } else {
            tail.push_back(x);
            if (tail.size() > 16) tail.pop_front();
        }
    };

    Cplx x = x0;
    record(x);
    if (std::abs(x) > escape_radius) {
        orbit.status = OrbitStatus::escaped;
        return orbit;
    }
    for (int k = 1; k <= max_steps; ++k) {
        Cplx next = p(x);
        orbit.steps = k;
        if (!is_finite(next)) {
            record(next);
            orbit.status = OrbitStatus::escaped;
            break;
        }
        record(next);
        if (std::abs(next - x) <= conv_tol) {
            orbit.status = OrbitStatus::converged;
            orbit.limit = next;
            break;
        }
        if (std::abs(next) > escape_radius) {
            orbit.status = OrbitStatus::escaped;
            break;
        }
        x = next;
    }
    if (capped) orbit.points.assign(tail.begin(), tail.end());
    return orbit;
}

RateEstimate convergence_rate(const Polynomial& p, Cplx theta, Cplx x0, int steps) {
    require_finite(theta, "convergence_rate fixed point");
    const double theta_scale = std::max(1.0, std::abs(theta));
    if (std::abs(p(theta) - theta) > 1e-9 * theta_scale)
        throw NotAFixedPoint("convergence_rate: theta is not a fixed point of p");

    const double conv_tol = 1e-12 * theta_scale;
    Orbit orbit = iterate(p, x0, steps, conv_tol, 0.0);
    if (orbit.status != OrbitStatus::converged ||
        std::abs(orbit.limit - theta) > std::max(1e-6 * theta_scale, 1e3 * conv_tol))
        throw DidNotConverge("convergence_rate: orbit did not reach theta");

    const Polynomial dp = p.derivative();
    if (std::abs(dp(theta)) <= 1e-8) return {0.0, true};

    // Walk back from the end to the last sample still clearly above rounding
    // noise, then take a geometric mean over the preceding window.
    const double floor = 1e3 * std::numeric_limits<double>::epsilon() * theta_scale;
    std::vector<double> dist(orbit.points.size());
    for (std::size_t k = 0; k < orbit.points.size(); ++k)
        dist[k] = std::abs(orbit.points[k] - theta);
    int last = -1;
    for (int k = static_cast<int>(dist.size()) - 1; k >= 1; --k) {
        if (dist[static_cast<std::size_t>(k)] >= floor &&
            dist[static_cast<std::size_t>(k - 1)] >= floor &&
            dist[static_cast<std::size_t>(k - 1)] > 0.0) {
            last = k;
            break;
        }
    }
    if (last < 1)
        throw DidNotConverge("convergence_rate: no usable pre-convergence steps");
    int window = std::min(5, last);
    const double d_hi = dist[static_cast<std::size_t>(last)];
    const double d_lo = dist[static_cast<std::size_t>(last - window)];
    if (d_lo <= 0.0)
        throw DidNotConverge("convergence_rate: degenerate orbit distances");
    return {std::pow(d_hi / d_lo, 1.0 / window), false};
}

std::vector<Cplx> critical_points(const Polynomial& p, const RootFindConfig& cfg) {
    return find_roots(p.derivative(), cfg);
}

CoverageReport critical_orbit_coverage(const Polynomial& p, const RootFindConfig& cfg,
                                       int max_steps, double conv_tol) {
    CoverageReport report;
    report.fixed_points = classify(p, cfg);
    report.criticals = critical_points(p, cfg);

    for (std::size_t i = 0; i < report.fixed_points.size(); ++i)
        if (report.fixed_points[i].cls == Stability::attractive)
            report.attractive_indices.push_back(static_cast<int>(i));
    report.attractive_count = static_cast<int>(report.attractive_indices.size());
    report.count_bound_ok = report.attractive_count <= p.degree() - 1;
    report.covered_by.resize(report.attractive_indices.size());

    // orbits run concurrently, each into its own slot; the merge below is
    // order-independent
    const double match_tol = 10.0 * conv_tol;
    const double escape = default_escape_radius(p);
    report.critical_fate.assign(report.criticals.size(), -1);
    auto trace = [&](std::size_t c) {
        Orbit orbit = iterate(p, report.criticals[c], max_steps, conv_tol, escape);
        if (orbit.status != OrbitStatus::converged) return;
        int nearest = -1;
        double nearest_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < report.fixed_points.size(); ++i) {
            double d = std::abs(orbit.limit - report.fixed_points[i].theta);
            if (d < nearest_dist) {
                nearest_dist = d;
                nearest = static_cast<int>(i);
            }
        }
        if (nearest >= 0 && nearest_dist <= match_tol)
            report.critical_fate[c] = nearest;
    };
    if (report.criticals.size() <= 1) {
        for (std::size_t c = 0; c < report.criticals.size(); ++c) trace(c);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(report.criticals.size());
        for (std::size_t c = 0; c < report.criticals.size(); ++c)
            pool.emplace_back(trace, c);
        for (std::thread& t : pool) t.join();
    }
    for (std::size_t c = 0; c < report.criticals.size(); ++c) {
        int fate = report.critical_fate[c];
        if (fate < 0) continue;
        for (std::size_t a = 0; a < report.attractive_indices.size(); ++a)
            if (report.attractive_indices[a] == fate)
                report.covered_by[a].push_back(static_cast<int>(c));
    }

    report.all_covered = true;
    for (const auto& cover : report.covered_by)
        if (cover.empty()) report.all_covered = false;
    return report;
}

Cplx BasinImage::pixel_center(int px, int py) const {
    const double re = window.center.real() +
                      ((px + 0.5) / width - 0.5) * 2.0 * window.half_width;
    const double im = window.center.imag() +
                      (0.5 - (py + 0.5) / height) * 2.0 * half_height;
    return {re, im};
}

BasinImage render_basins(const Polynomial& p, Window window, int width, int height,
                         int max_steps, const RootFindConfig& cfg, double conv_tol,
                         int workers) {
    if (width < 1 || height < 1)
        throw Error("render_basins: image dimensions must be >= 1");

    BasinImage img;
    img.width = width;
    img.height = height;
    img.window = window;
    img.half_height = window.half_width * height / width;
    img.max_steps = max_steps;
    img.conv_tol = conv_tol;
    img.labels.assign(static_cast<std::size_t>(width) * height, BasinImage::kOther);
    img.iterations.assign(static_cast<std::size_t>(width) * height, 0);

    for (const FixedPointRecord& rec : classify(p, cfg))
        if (rec.cls == Stability::attractive) img.attractive.push_back(rec);

    const double escape = default_escape_radius(p);
    const double match_tol = 10.0 * conv_tol;
    auto render_row = [&](int py) {
        for (int px = 0; px < width; ++px) {
            Orbit orbit = iterate(p, img.pixel_center(px, py), max_steps, conv_tol, escape);
            int label = BasinImage::kOther;
            if (orbit.status == OrbitStatus::escaped) {
                label = BasinImage::kEscape;
            } else if (orbit.status == OrbitStatus::converged) {
                int nearest = -1;
                double nearest_dist = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < img.attractive.size(); ++i) {
                    double d = std::abs(orbit.limit - img.attractive[i].theta);
                    if (d < nearest_dist) {
                        nearest_dist = d;
                        nearest = static_cast<int>(i);
                    }
                }
                if (nearest >= 0 && nearest_dist <= match_tol) label = nearest;
            }
            const std::size_t at = static_cast<std::size_t>(py) * width + px;
            img.labels[at] = label;
            img.iterations[at] = orbit.steps;
        }
    };

    unsigned n_workers = workers > 0 ? static_cast<unsigned>(workers)
                                     : std::max(1u, std::thread::hardware_concurrency());
    n_workers = std::min<unsigned>(n_workers, static_cast<unsigned>(height));
    if (n_workers <= 1) {
        for (int py = 0; py < height; ++py) render_row(py);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned t = 0; t < n_workers; ++t) {
            pool.emplace_back([&, t] {
                for (int py = static_cast<int>(t); py < height;
                     py += static_cast<int>(n_workers))
                    render_row(py);
            });
        }
        for (std::thread& th : pool) th.join();
    }
    return img;
}

const std::array<std::array<unsigned char, 3>, 12>& basin_palette() {
    static const std::array<std::array<unsigned char, 3>, 12> palette{{
        {230, 25, 75},   {60, 180, 75},   {255, 225, 25},  {0, 130, 200},
        {245, 130, 48},  {145, 30, 180},  {70, 240, 240},  {240, 50, 230},
        {210, 245, 60},  {250, 190, 212}, {0, 128, 128},   {170, 110, 40},
    }};
    return palette;
}

void write_ppm(const BasinImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_ppm: cannot open " + path);
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    const auto& palette = basin_palette();
    for (int label : img.labels) {
        unsigned char rgb[3];
        if (label == BasinImage::kEscape) {
            rgb[0] = rgb[1] = rgb[2] = 0;
        } else if (label == BasinImage::kOther) {
            rgb[0] = rgb[1] = rgb[2] = 255;
        } else {
            const auto& c = palette[static_cast<std::size_t>(label) % palette.size()];
            rgb[0] = c[0];
            rgb[1] = c[1];
            rgb[2] = c[2];
        }
        out.write(reinterpret_cast<const char*>(rgb), 3);
    }
    if (!out) throw Error("write_ppm: write failed for " + path);
}

} // namespace polyfp
