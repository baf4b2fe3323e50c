// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Run with --cli <path-to-polyfp-binary> to include the end-to-end
// reproducibility check; it is skipped (and failed) otherwise.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "polyfp/dynamics.hpp"
#include "polyfp/json_io.hpp"

using namespace polyfp;
using polyfp::testing::rel_err;

namespace {

struct Harness {
    int failures = 0;
    int index = 0;

    void run(const std::string& name, const std::function<void()>& body) {
        ++index;
        try {
            body();
            std::printf("[PASS] %d. %s\n", index, name.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] %d. %s\n       %s\n", index, name.c_str(), e.what());
        }
        std::fflush(stdout);
    }
};

void require(bool cond, const std::string& detail) {
    if (!cond) throw std::runtime_error(detail);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---- criterion 1: closed forms vs the quotient recursion ------------------

void divided_difference_oracle() {
    SplitMix64 rng(1001);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 7);
        NodeSystem sys = testing::random_node_system(rng, n, 1e-3);
        DividedDifferenceTable table = build_table(sys);
        for (int k = 2; k <= n; ++k) {
            Cplx recursion = table.entries[2 * static_cast<std::size_t>(k) - 1][0];
            double err = rel_err(closed_form_even(sys, k), recursion);
            require(err <= 1e-9, "doubled-pair closed form drifted: rel err " +
                                     std::to_string(err) + " at n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
        }
        for (int k = 2; k <= n - 1; ++k) {
            Cplx recursion = table.entries[2 * static_cast<std::size_t>(k) - 1][1];
            double err = rel_err(closed_form_bridge(sys, k), recursion);
            require(err <= 1e-9, "bridge closed form drifted: rel err " +
                                     std::to_string(err) + " at n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
        }
    }
}

// ---- criterion 2: collinear prescriptions are tight ------------------------

void collinear_tightness() {
    SplitMix64 rng(2002);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 7);
        Cplx direction;
        NodeSystem sys = testing::random_collinear_system(rng, n, &direction);
        SynthesisResult res = synthesize(sys);

        require(res.achieved_degree == 2 * n - 1,
                "degree " + std::to_string(res.achieved_degree) + " != " +
                    std::to_string(2 * n - 1) + " for n=" + std::to_string(n));
        require(std::abs(res.leading_coefficient) > 0.0, "vanishing leading coefficient");

        Cplx rotated = res.leading_coefficient * std::pow(direction, 2 * (n - 1));
        require(rotated.real() < 0.0,
                "rotated leading sum has nonnegative real part " +
                    std::to_string(rotated.real()));

        double scale = std::max(1.0, max_coeff_magnitude(res.h));
        require(res.max_value_residual <= 1e-9 * scale,
                "value residual " + std::to_string(res.max_value_residual));
        require(res.max_derivative_residual <= 1e-8 * scale,
                "derivative residual " + std::to_string(res.max_derivative_residual));
    }
}

// ---- criterion 3: the hand-derived golden case -----------------------------

void golden_case() {
    NodeSystem sys{{Node{Cplx{0, 0}, Cplx{0, 0}}, Node{Cplx{1, 0}, Cplx{0, 0}}}};
    DividedDifferenceTable table = build_table(sys);
    auto diag = table.newton_coefficients();
    require(diag.size() == 4 && diag[0] == Cplx{0, 0} && diag[1] == Cplx{0, 0} &&
                diag[2] == Cplx{1, 0} && diag[3] == Cplx{-2, 0},
            "table diagonal is not [0, 0, 1, -2]");

    SynthesisResult res = synthesize(sys);
    require(res.h.coeff(2) == Cplx{3, 0} && res.h.coeff(3) == Cplx{-2, 0} &&
                res.h.coeff(0) == Cplx{0, 0} && res.h.coeff(1) == Cplx{0, 0},
            "synthesis is not 3z^2 - 2z^3");

    auto records = classify(res.h);
    require(records.size() == 3, "expected 3 fixed points");
    require(std::abs(records[0].theta) <= 1e-12 &&
                std::abs(records[1].theta - Cplx{0.5, 0}) <= 1e-12 &&
                std::abs(records[2].theta - Cplx{1, 0}) <= 1e-12,
            "fixed points are not {0, 1/2, 1}");
    require(std::abs(records[0].multiplier) <= 1e-12 &&
                std::abs(records[1].multiplier - Cplx{1.5, 0}) <= 1e-12 &&
                std::abs(records[2].multiplier) <= 1e-12,
            "multipliers are not {0, 3/2, 0}");

    BoundReport bound = check_half_bound(res.h);
    require(bound.max_collinear_attractive == 2 && bound.bound == 2 && bound.satisfied,
            "bound report is not the tight 2 <= 2");
    double margin = conjecture_margin(res.h);
    require(std::abs(margin - 1.5) <= 1e-12,
            "margin " + std::to_string(margin) + " != 1.5");
}

// ---- criterion 4: the exemplar family ---------------------------------------

void exemplar_family_checks() {
    for (int n = 2; n <= 10; ++n) {
        Polynomial p = exemplar_family(n);
        auto records = classify(p);
        require(static_cast<int>(records.size()) == n + 1,
                "expected " + std::to_string(n + 1) + " fixed points");

        int attractive = 0;
        for (const auto& rec : records)
            if (rec.cls == Stability::attractive) ++attractive;
        require(attractive == n, "attractive count " + std::to_string(attractive) +
                                     " != n = " + std::to_string(n));
        require(attractive == p.degree() - 1, "attractive count must equal degree - 1");

        for (int k = 0; k < n; ++k) {
            double t = 2.0 * 3.14159265358979323846 * k / n;
            Cplx omega{std::cos(t), std::sin(t)};
            bool matched = false;
            for (const auto& rec : records) {
                if (std::abs(rec.theta - omega) <= 1e-10) {
                    require(std::abs(rec.multiplier) <= 1e-10,
                            "root-of-unity multiplier above 1e-10");
                    matched = true;
                    break;
                }
            }
            require(matched, "missing root of unity at angle index " + std::to_string(k));
        }

        const double expected = (n + 1.0) / n;
        bool zero_found = false;
        for (const auto& rec : records) {
            if (std::abs(rec.theta) <= 1e-10) {
                zero_found = true;
                require(std::abs(rec.multiplier - Cplx{expected, 0}) <= 1e-9,
                        "multiplier at 0 is not (n+1)/n");
            }
        }
        require(zero_found, "missing fixed point at 0");

        double margin = conjecture_margin(p);
        require(std::abs(margin - expected) <= 1e-9,
                "margin " + std::to_string(margin) + " != (n+1)/n");

        require(check_half_bound(p).satisfied,
                "collinear bound failed on the exemplar at n = " + std::to_string(n));
    }
}

// ---- criterion 5: bound fuzzing ---------------------------------------------

void bound_fuzzing() {
    const long per_degree = 10000;
    long skipped = 0, checked = 0;
    for (SampleStrategy strategy :
         {SampleStrategy::coefficient, SampleStrategy::fixed_point}) {
        for (int degree = 2; degree <= 8; ++degree) {
            std::uint64_t corpus_seed =
                5000 + static_cast<std::uint64_t>(degree) * 10 +
                (strategy == SampleStrategy::coefficient ? 0 : 1);
            for (long idx = 0; idx < per_degree; ++idx) {
                SplitMix64 rng(split_seed(corpus_seed, static_cast<std::uint64_t>(idx)));
                Polynomial p = sample_polynomial(strategy, degree, rng);
                try {
                    BoundReport report = check_half_bound(p);
                    ++checked;
                    if (!report.satisfied) {
                        std::printf("BOUND VIOLATION INSTANCE:\n%s\n%s\n",
                                    to_json(p).c_str(), to_json(report).c_str());
                        require(false, "collinear bound violated (instance dumped above)");
                    }
                } catch (const NoConvergence&) {
                    ++skipped;
                }
            }
        }
    }
    require(skipped * 100 <= (checked + skipped),
            "root-finder skip rate above 1%: " + std::to_string(skipped));
}

// ---- criterion 6: conjecture identities and search --------------------------

void conjecture_identities() {
    SplitMix64 rng(6001);
    long done = 0;
    while (done < 10000) {
        Polynomial p = sample_polynomial(SampleStrategy::coefficient, 2, rng);
        try {
            QuadraticIdentity q = quadratic_identity_check(p);
            require(q.ok, "quadratic multiplier sum " + to_json(q));
            ++done;
        } catch (const MultipleFixedPoint&) {
        }
    }

    SplitMix64 rng_cubic(6002);
    for (long trial = 0; trial < 10000; ++trial) {
        Cplx c = rng_cubic.annulus(0.1, 2.0);
        auto pts = testing::separated_disk_points(rng_cubic, 3, 1e-3);
        CubicDecomposition dec = cubic_decomposition(c, pts[0], pts[1], pts[2]);
        require(dec.margin >= 1.0 - 1e-9,
                "cubic margin " + std::to_string(dec.margin) + " below 1");
    }

    for (int degree = 4; degree <= 6; ++degree) {
        SearchConfig cfg;
        cfg.degree = degree;
        cfg.samples = 10000;
        cfg.seed = 600 + static_cast<std::uint64_t>(degree);
        cfg.strategy = SampleStrategy::coefficient;
        SearchReport report = conjecture_search(cfg);
        if (report.violations != 0)
            std::printf("CONJECTURE VIOLATION INSTANCE:\n%s\n", to_json(report).c_str());
        require(report.violations == 0,
                "degree " + std::to_string(degree) + " search found violations");
        require(report.skip_rate() <= 0.01,
                "degree " + std::to_string(degree) + " skip rate " +
                    std::to_string(report.skip_rate()));
    }
}

// ---- criterion 7: the rate law ----------------------------------------------

void rate_law() {
    SplitMix64 rng(7001);
    int done = 0;
    while (done < 100) {
        double target = rng.uniform(0.06, 0.94);
        double phase = rng.uniform(0.0, 6.283185307179586);
        Cplx alpha = std::polar(target, phase);
        Cplx theta = rng.disk();
        Cplx other = theta + std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.0, 6.28));
        Cplx c = (alpha - Cplx{1, 0}) / (theta - other);
        Polynomial p = from_fixed_point_form(c, {theta, other});

        Cplx x0 = theta + std::polar(1e-3, rng.uniform(0.0, 6.28));
        RateEstimate est = convergence_rate(p, theta, x0, 2000);
        require(!est.quadratic, "unexpected quadratic flag");
        require(std::abs(est.rate - target) <= 0.05 * target,
                "rate " + std::to_string(est.rate) + " vs multiplier " +
                    std::to_string(target));
        ++done;
    }

    // the sqrt(2) iteration
    Polynomial sqrt2_map{Cplx{0.5, 0}, Cplx{1, 0}, Cplx{-0.25, 0}};
    Orbit orbit = iterate(sqrt2_map, Cplx{1, 0}, 500, 1e-12, 0.0);
    require(orbit.status == OrbitStatus::converged &&
                std::abs(orbit.limit - Cplx{std::sqrt(2.0), 0}) <= 1e-9,
            "iteration from 1 missed sqrt(2)");
    const double expected = 1.0 - std::sqrt(2.0) / 2.0;
    RateEstimate est =
        convergence_rate(sqrt2_map, Cplx{std::sqrt(2.0), 0}, Cplx{1.2, 0}, 500);
    require(std::abs(est.rate - expected) <= 0.05 * expected,
            "sqrt(2) rate " + std::to_string(est.rate));
}

// ---- criterion 8: critical coverage -----------------------------------------

void critical_coverage() {
    SplitMix64 seeds(8001);
    int done = 0, cycle_candidates = 0;
    while (done < 1000) {
        int degree = 2 + static_cast<int>(seeds.next() % 5);
        Polynomial p = sample_polynomial(SampleStrategy::coefficient, degree, seeds);
        CoverageReport report;
        try {
            report = critical_orbit_coverage(p);
        } catch (const NoConvergence&) {
            continue;
        }
        if (report.attractive_count == 0) continue;
        ++done;

        require(report.count_bound_ok,
                "attractive count " + std::to_string(report.attractive_count) +
                    " exceeds degree - 1 on " + to_json(p));
        if (!report.all_covered) {
            ++cycle_candidates;
            if (cycle_candidates <= 3)
                std::printf("cycle-capture candidate: %s\n", to_json(p).c_str());
        }
    }
    std::printf("       (coverage: %d/1000 instances reported as cycle-capture candidates)\n",
                cycle_candidates);
}

// ---- criterion 9: determinism -----------------------------------------------

void determinism(const std::string& cli_path) {
    SearchConfig cfg;
    cfg.degree = 4;
    cfg.samples = 5000;
    cfg.seed = 4242;
    cfg.strategy = SampleStrategy::fixed_point;
    cfg.workers = 1;
    std::string serial = to_json(conjecture_search(cfg));
    cfg.workers = 8;
    std::string parallel = to_json(conjecture_search(cfg));
    require(serial == parallel, "in-process reports differ between 1 and 8 workers");

    Polynomial golden{Cplx{0, 0}, Cplx{0, 0}, Cplx{3, 0}, Cplx{-2, 0}};
    BasinImage a = render_basins(golden, Window{Cplx{0.5, 0}, 1.5}, 96, 64, 150, {}, 1e-10, 2);
    BasinImage b = render_basins(golden, Window{Cplx{0.5, 0}, 1.5}, 96, 64, 150, {}, 1e-10, 7);
    require(a.labels == b.labels && a.iterations == b.iterations,
            "render grids differ between worker counts");

    require(!cli_path.empty(), "no --cli path given; end-to-end check not run");
    const std::string out1 = "acceptance_workers1.json";
    const std::string out8 = "acceptance_workers8.json";
    std::string base = "\"" + cli_path +
                       "\" conjecture --degree 3 --samples 2000 --seed 7 --strategy "
                       "coefficient";
    int rc1 = std::system((base + " --workers 1 -o " + out1 + " 2>/dev/null").c_str());
    int rc8 = std::system((base + " --workers 8 -o " + out8 + " 2>/dev/null").c_str());
    require(rc1 == 0 && rc8 == 0, "CLI conjecture runs failed");
    std::string bytes1 = slurp(out1), bytes8 = slurp(out8);
    std::remove(out1.c_str());
    std::remove(out8.c_str());
    require(!bytes1.empty() && bytes1 == bytes8,
            "CLI reports are not byte-identical across worker counts");
}

} // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

    Harness h;
    h.run("divided-difference closed forms match the recursion (500 systems)",
          divided_difference_oracle);
    h.run("collinear synthesis reaches degree 2n-1 with negative rotated sum (500 systems)",
          collinear_tightness);
    h.run("golden case: {(0,0),(1,0)} -> 3z^2 - 2z^3, tight bound, margin 3/2",
          golden_case);
    h.run("exemplar family n=2..10: n superattractive points, margin (n+1)/n",
          exemplar_family_checks);
    h.run("collinear bound holds on 10^4 random polynomials per degree 2..8, both strategies",
          bound_fuzzing);
    h.run("quadratic/cubic identities on 10^4 cases each; search clean at degrees 4..6",
          conjecture_identities);
    h.run("contraction rate matches |p'| within 5% (100 instances + sqrt(2) case)",
          rate_law);
    h.run("critical orbits cover attractive points; count <= degree-1 (10^3 instances)",
          critical_coverage);
    h.run("identical reports and rasters for any worker count, in-process and via CLI",
          [&] { determinism(cli_path); });

    if (h.failures == 0) {
        std::printf("acceptance: all %d criteria passed\n", h.index);
        return 0;
    }
    std::printf("acceptance: %d of %d criteria FAILED\n", h.failures, h.index);
    return 1;
}
