// polyfp: construct polynomials with prescribed attractive fixed points,
// analyze fixed-point structure, and stress-test the collinear bound and the
// unattractive-multiplier conjecture.
//
// Exit codes: 0 success, 2 validation error, 3 convergence failure,
// 4 bound/conjecture violation detected (the report is still written).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyfp/dynamics.hpp"
#include "polyfp/json_io.hpp"

namespace {

using namespace polyfp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitViolation = 4;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inline JSON takes precedence; otherwise read the file (or stdin for "-").
std::string fetch_input(const std::string& inline_json, const std::string& path,
                        const char* what) {
    if (!inline_json.empty()) return inline_json;
    if (!path.empty()) return read_file(path);
    throw Error(std::string("no ") + what + " given: use --input FILE or the inline option");
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file: " + out_path);
    out << text << "\n";
}

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

struct RootFlags {
    double tol = 1e-12;
    int max_iter = 200;
    std::uint64_t seed = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol, "root-finder relative residual target")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-iter", max_iter, "root-finder sweep limit")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--root-seed", seed, "root-finder start-phase seed");
    }
    RootFindConfig config() const { return {tol, max_iter, seed}; }
};

SampleStrategy parse_strategy(const std::string& name) {
    if (name == "coefficient") return SampleStrategy::coefficient;
    if (name == "fixed-point" || name == "fixed_point") return SampleStrategy::fixed_point;
    throw Error("unknown strategy: " + name + " (use coefficient or fixed-point)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed points of complex polynomials: synthesis, analysis, dynamics"};
    app.require_subcommand(1);

    // exemplar
    auto* cmd_exemplar = app.add_subcommand(
        "exemplar", "emit the degree-(n+1) family (-z^(n+1) + (n+1)z)/n");
    int exemplar_n = 2;
    std::string exemplar_out;
    cmd_exemplar->add_option("--n", exemplar_n, "number of unit-circle fixed points")
        ->required()
        ->check(CLI::Range(2, 64));
    cmd_exemplar->add_option("-o,--output", exemplar_out, "output path (default stdout)");

    // analyze
    auto* cmd_analyze = app.add_subcommand(
        "analyze", "classify fixed points, check the collinear bound, report the margin");
    std::string analyze_in, analyze_coeffs, analyze_out;
    double analyze_eps_class = kDefaultClassEps, analyze_eps_line = kDefaultLineEps;
    RootFlags analyze_root;
    cmd_analyze->add_option("-i,--input", analyze_in, "polynomial JSON file (- for stdin)");
    cmd_analyze->add_option("--coeffs", analyze_coeffs, "inline polynomial JSON");
    cmd_analyze->add_option("--eps-class", analyze_eps_class, "neutral band half-width")
        ->check(CLI::PositiveNumber);
    cmd_analyze->add_option("--eps-line", analyze_eps_line, "collinearity tolerance")
        ->check(CLI::PositiveNumber);
    cmd_analyze->add_option("-o,--output", analyze_out, "output path (default stdout)");
    analyze_root.attach(cmd_analyze);

    // synthesize
    auto* cmd_synth = app.add_subcommand(
        "synthesize", "build the least-degree polynomial with prescribed fixed points");
    std::string synth_in, synth_nodes, synth_out;
    cmd_synth->add_option("-i,--input", synth_in, "node-system JSON file (- for stdin)");
    cmd_synth->add_option("--nodes", synth_nodes, "inline node-system JSON");
    cmd_synth->add_option("-o,--output", synth_out, "output path (default stdout)");

    // verify-bound
    auto* cmd_verify = app.add_subcommand(
        "verify-bound", "batch-check the collinear bound over a corpus or random stream");
    std::string verify_in, verify_out, verify_strategy = "coefficient";
    int verify_degree = 3;
    long verify_samples = 1000;
    std::uint64_t verify_seed = 0;
    bool verify_random = false;
    double verify_eps_class = kDefaultClassEps, verify_eps_line = kDefaultLineEps;
    RootFlags verify_root;
    cmd_verify->add_option("-i,--input", verify_in, "corpus JSON file (array of polynomials)");
    cmd_verify->add_flag("--random", verify_random, "sample random polynomials instead");
    cmd_verify->add_option("--degree", verify_degree, "degree for --random")
        ->check(CLI::Range(2, 64));
    cmd_verify->add_option("--samples", verify_samples, "sample count for --random")
        ->check(CLI::PositiveNumber);
    auto* verify_seed_opt =
        cmd_verify->add_option("--seed", verify_seed, "sampling seed for --random");
    cmd_verify->add_option("--strategy", verify_strategy, "coefficient | fixed-point");
    cmd_verify->add_option("--eps-class", verify_eps_class, "neutral band half-width");
    cmd_verify->add_option("--eps-line", verify_eps_line, "collinearity tolerance");
    cmd_verify->add_option("-o,--output", verify_out, "output path (default stdout)");
    verify_root.attach(cmd_verify);

    // conjecture
    auto* cmd_conj = app.add_subcommand(
        "conjecture", "seeded random search for margins below 1");
    int conj_degree = 3, conj_workers = 0;
    long conj_samples = 10000;
    std::uint64_t conj_seed = 0;
    std::string conj_strategy = "coefficient", conj_out;
    RootFlags conj_root;
    cmd_conj->add_option("--degree", conj_degree, "polynomial degree")
        ->required()
        ->check(CLI::Range(2, 64));
    cmd_conj->add_option("--samples", conj_samples, "number of samples")
        ->check(CLI::PositiveNumber);
    auto* conj_seed_opt = cmd_conj->add_option(
        "--seed", conj_seed, "search seed (generated and printed if absent)");
    cmd_conj->add_option("--strategy", conj_strategy, "coefficient | fixed-point");
    cmd_conj->add_option("--workers", conj_workers, "worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    cmd_conj->add_option("-o,--output", conj_out, "output path (default stdout)");
    conj_root.attach(cmd_conj);

    // identity
    auto* cmd_identity = app.add_subcommand(
        "identity", "exact low-degree checks: quadratic multiplier sum, cubic decomposition");
    bool id_quadratic = false, id_cubic = false;
    std::string id_in, id_coeffs, id_c, id_z1, id_z2, id_z3, id_out;
    cmd_identity->add_flag("--quadratic", id_quadratic, "check lambda1 + lambda2 = 2");
    cmd_identity->add_flag("--cubic", id_cubic, "decompose c(z-z1)(z-z2)(z-z3) + z");
    cmd_identity->add_option("-i,--input", id_in, "polynomial JSON file (quadratic mode)");
    cmd_identity->add_option("--coeffs", id_coeffs, "inline polynomial JSON (quadratic mode)");
    cmd_identity->add_option("--c", id_c, "leading factor [re,im] (cubic mode)");
    cmd_identity->add_option("--z1", id_z1, "fixed point [re,im] (cubic mode)");
    cmd_identity->add_option("--z2", id_z2, "fixed point [re,im] (cubic mode)");
    cmd_identity->add_option("--z3", id_z3, "fixed point [re,im] (cubic mode)");
    cmd_identity->add_option("-o,--output", id_out, "output path (default stdout)");

    // iterate
    auto* cmd_iterate = app.add_subcommand("iterate", "dump a fixed-point iteration orbit");
    std::string it_in, it_coeffs, it_x0, it_out;
    int it_max_steps = 10000;
    double it_conv_tol = 1e-10, it_escape = 0.0;
    cmd_iterate->add_option("-i,--input", it_in, "polynomial JSON file (- for stdin)");
    cmd_iterate->add_option("--coeffs", it_coeffs, "inline polynomial JSON");
    cmd_iterate->add_option("--x0", it_x0, "seed [re,im]")->required();
    cmd_iterate->add_option("--max-steps", it_max_steps, "iteration budget")
        ->check(CLI::PositiveNumber);
    cmd_iterate->add_option("--conv-tol", it_conv_tol, "successive-iterate tolerance")
        ->check(CLI::PositiveNumber);
    cmd_iterate->add_option("--escape-radius", it_escape, "escape radius (0 = auto)");
    cmd_iterate->add_option("-o,--output", it_out, "output path (default stdout)");

    // coverage
    auto* cmd_cover = app.add_subcommand(
        "coverage", "check that critical orbits reach every attractive fixed point");
    std::string cover_in, cover_coeffs, cover_out;
    int cover_max_steps = 10000;
    double cover_conv_tol = 1e-10;
    RootFlags cover_root;
    cmd_cover->add_option("-i,--input", cover_in, "polynomial JSON file (- for stdin)");
    cmd_cover->add_option("--coeffs", cover_coeffs, "inline polynomial JSON");
    cmd_cover->add_option("--max-steps", cover_max_steps, "orbit budget")
        ->check(CLI::PositiveNumber);
    cmd_cover->add_option("--conv-tol", cover_conv_tol, "orbit convergence tolerance")
        ->check(CLI::PositiveNumber);
    cmd_cover->add_option("-o,--output", cover_out, "output path (default stdout)");
    cover_root.attach(cmd_cover);

    // basins
    auto* cmd_basins = app.add_subcommand("basins", "render basins of attraction to PPM");
    std::string basins_in, basins_coeffs, basins_center = "[0,0]", basins_ppm;
    double basins_half_width = 2.0, basins_conv_tol = 1e-10;
    int basins_width = 512, basins_height = 512, basins_max_steps = 256, basins_workers = 0;
    RootFlags basins_root;
    cmd_basins->add_option("-i,--input", basins_in, "polynomial JSON file (- for stdin)");
    cmd_basins->add_option("--coeffs", basins_coeffs, "inline polynomial JSON");
    cmd_basins->add_option("--out", basins_ppm, "output PPM path")->required();
    cmd_basins->add_option("--center", basins_center, "window center [re,im]");
    cmd_basins->add_option("--half-width", basins_half_width, "window half-width")
        ->check(CLI::PositiveNumber);
    cmd_basins->add_option("--width", basins_width, "image width")->check(CLI::PositiveNumber);
    cmd_basins->add_option("--height", basins_height, "image height")
        ->check(CLI::PositiveNumber);
    cmd_basins->add_option("--max-steps", basins_max_steps, "orbit budget per pixel")
        ->check(CLI::PositiveNumber);
    cmd_basins->add_option("--conv-tol", basins_conv_tol, "orbit convergence tolerance")
        ->check(CLI::PositiveNumber);
    cmd_basins->add_option("--workers", basins_workers, "worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    basins_root.attach(cmd_basins);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_exemplar) {
            emit(exemplar_out, to_json(exemplar_family(exemplar_n)));
            return kExitOk;
        }

        if (*cmd_analyze) {
            Polynomial p = parse_polynomial(
                fetch_input(analyze_coeffs, analyze_in, "polynomial"));
            BoundReport report = check_half_bound(p, analyze_root.config(),
                                                  analyze_eps_class, analyze_eps_line);
            double margin = conjecture_margin(p, analyze_root.config());
            emit(analyze_out, analyze_json(report, margin));
            bool margin_ok = margin >= 1.0 - 1e-6;
            if (!report.satisfied)
                std::cerr << "BOUND VIOLATION: " << report.max_collinear_attractive
                          << " collinear attractive fixed points exceed ceil(n/2) = "
                          << report.bound << "\n" << to_json(p) << "\n";
            if (!margin_ok)
                std::cerr << "CONJECTURE VIOLATION: margin " << margin << " < 1\n"
                          << to_json(p) << "\n";
            return (report.satisfied && margin_ok) ? kExitOk : kExitViolation;
        }

        if (*cmd_synth) {
            NodeSystem sys = parse_node_system(
                fetch_input(synth_nodes, synth_in, "node system"));
            emit(synth_out, to_json(synthesize(sys)));
            return kExitOk;
        }

        if (*cmd_verify) {
            std::vector<Polynomial> corpus;
            std::uint64_t seed = verify_seed;
            if (verify_random) {
                if (verify_seed_opt->count() == 0) {
                    seed = fresh_seed();
                    std::cerr << "verify-bound: generated seed " << seed << "\n";
                }
            } else {
                corpus = parse_polynomial_list(
                    fetch_input(std::string{}, verify_in, "polynomial corpus"));
            }
            const SampleStrategy strategy = parse_strategy(verify_strategy);
            const long total = verify_random ? verify_samples
                                             : static_cast<long>(corpus.size());
            long checked = 0, skipped = 0;
            std::vector<std::string> violations;
            for (long idx = 0; idx < total; ++idx) {
                Polynomial p;
                if (verify_random) {
                    SplitMix64 rng(split_seed(seed, static_cast<std::uint64_t>(idx)));
                    p = sample_polynomial(strategy, verify_degree, rng);
                } else {
                    p = corpus[static_cast<std::size_t>(idx)];
                }
                try {
                    BoundReport report = check_half_bound(p, verify_root.config(),
                                                          verify_eps_class, verify_eps_line);
                    ++checked;
                    if (!report.satisfied) {
                        violations.push_back("{\"polynomial\":" + to_json(p) +
                                             ",\"report\":" + to_json(report) + "}");
                        std::cerr << "BOUND VIOLATION:\n" << to_json(p) << "\n";
                    }
                } catch (const NoConvergence&) {
                    ++skipped;
                }
            }
            std::string out = "{\"checked\":" + std::to_string(checked) +
                              ",\"skipped\":" + std::to_string(skipped) +
                              ",\"violations\":" + std::to_string(violations.size()) +
                              ",\"violation_instances\":[";
            for (std::size_t i = 0; i < violations.size() && i < 16; ++i) {
                if (i) out += ",";
                out += violations[i];
            }
            out += "]";
            if (verify_random)
                out += ",\"seed\":" + std::to_string(seed) +
                       ",\"strategy\":" + json_string(to_string(strategy)) +
                       ",\"degree\":" + std::to_string(verify_degree);
            out += "}";
            emit(verify_out, out);
            if (!violations.empty()) return kExitViolation;
            if (total > 0 && skipped * 100 > total) return kExitNoConvergence;
            return kExitOk;
        }

        if (*cmd_conj) {
            SearchConfig cfg;
            cfg.degree = conj_degree;
            cfg.samples = conj_samples;
            cfg.strategy = parse_strategy(conj_strategy);
            cfg.workers = conj_workers;
            cfg.root = conj_root.config();
            cfg.progress = conj_samples >= 10000;
            if (conj_seed_opt->count() > 0) {
                cfg.seed = conj_seed;
            } else {
                cfg.seed = fresh_seed();
                std::cerr << "conjecture: generated seed " << cfg.seed << "\n";
            }
            SearchReport report = conjecture_search(cfg);
            emit(conj_out, to_json(report));
            if (report.violations > 0) {
                std::cerr << "CONJECTURE VIOLATION: min margin " << report.min_margin
                          << " at " << json_complex_list(report.argmin_coeffs) << "\n";
                return kExitViolation;
            }
            if (report.skip_rate() > 0.01) {
                std::cerr << "conjecture: skip rate " << report.skip_rate()
                          << " exceeds 1%\n";
                return kExitNoConvergence;
            }
            return kExitOk;
        }

        if (*cmd_identity) {
            if (id_quadratic == id_cubic)
                throw Error("identity: pass exactly one of --quadratic or --cubic");
            if (id_quadratic) {
                Polynomial p = parse_polynomial(fetch_input(id_coeffs, id_in, "polynomial"));
                QuadraticIdentity q = quadratic_identity_check(p);
                emit(id_out, to_json(q));
                return q.ok ? kExitOk : kExitViolation;
            }
            if (id_c.empty() || id_z1.empty() || id_z2.empty() || id_z3.empty())
                throw Error("identity --cubic: need --c, --z1, --z2, --z3");
            CubicDecomposition dec =
                cubic_decomposition(parse_complex(id_c), parse_complex(id_z1),
                                    parse_complex(id_z2), parse_complex(id_z3));
            emit(id_out, to_json(dec));
            return dec.margin >= 1.0 - 1e-9 ? kExitOk : kExitViolation;
        }

        if (*cmd_iterate) {
            Polynomial p = parse_polynomial(fetch_input(it_coeffs, it_in, "polynomial"));
            Orbit orbit = iterate(p, parse_complex(it_x0), it_max_steps, it_conv_tol,
                                  it_escape);
            emit(it_out, to_json(orbit));
            return kExitOk;
        }

        if (*cmd_cover) {
            Polynomial p = parse_polynomial(fetch_input(cover_coeffs, cover_in, "polynomial"));
            CoverageReport report = critical_orbit_coverage(p, cover_root.config(),
                                                            cover_max_steps, cover_conv_tol);
            emit(cover_out, to_json(report));
            if (!report.count_bound_ok) {
                std::cerr << "ATTRACTIVE COUNT VIOLATION: " << report.attractive_count
                          << " attractive fixed points on degree " << p.degree() << "\n"
                          << to_json(p) << "\n";
                return kExitViolation;
            }
            return kExitOk;
        }

        if (*cmd_basins) {
            Polynomial p = parse_polynomial(fetch_input(basins_coeffs, basins_in, "polynomial"));
            Window window{parse_complex(basins_center), basins_half_width};
            BasinImage img = render_basins(p, window, basins_width, basins_height,
                                           basins_max_steps, basins_root.config(),
                                           basins_conv_tol, basins_workers);
            write_ppm(img, basins_ppm);
            std::ofstream sidecar(basins_ppm + ".json");
            if (!sidecar) throw Error("cannot open sidecar file: " + basins_ppm + ".json");
            sidecar << basin_sidecar_json(img) << "\n";
            std::cout << basin_sidecar_json(img) << "\n";
            return kExitOk;
        }
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const DidNotConverge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
