#include "polyfp/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <thread>

namespace polyfp {

const char* to_string(Stability s) {
    switch (s) {
        case Stability::attractive: return "attractive";
        case Stability::neutral: return "neutral";
        case Stability::repelling: return "repelling";
    }
    return "?";
}

const char* to_string(SampleStrategy s) {
    return s == SampleStrategy::coefficient ? "coefficient" : "fixed-point";
}

std::vector<FixedPointRecord> classify(const Polynomial& p, const RootFindConfig& cfg,
                                       double eps_class) {
    const std::vector<Cplx> thetas = fixed_points(p, cfg);
    const Polynomial dp = p.derivative();
    std::vector<FixedPointRecord> records;
    records.reserve(thetas.size());
    for (const Cplx& theta : thetas) {
        FixedPointRecord rec;
        rec.theta = theta;
        rec.multiplier = dp(theta);
        rec.residual = std::abs(p(theta) - theta);
        const double mod = std::abs(rec.multiplier);
        if (mod < 1.0 - eps_class)
            rec.cls = Stability::attractive;
        else if (mod > 1.0 + eps_class)
            rec.cls = Stability::repelling;
        else
            rec.cls = Stability::neutral;
        records.push_back(rec);
    }
    return records; // fixed_points is already sorted lexicographically
}

CollinearCount max_collinear_attractive(const std::vector<FixedPointRecord>& records,
                                        double eps_line) {
    std::vector<Cplx> pts;
    for (const auto& rec : records)
        if (rec.cls == Stability::attractive) pts.push_back(rec.theta);

    const int m = static_cast<int>(pts.size());
    if (m <= 1) return {m, std::nullopt};

    double spread = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            spread = std::max(spread, std::abs(pts[i] - pts[j]));
    if (spread == 0.0) {
        // all coincident; any line through them works
        return {m, Line{pts[0], Cplx{1.0, 0.0}}};
    }
    const double tol = eps_line * spread;

    CollinearCount best{0, std::nullopt};
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            Cplx dir = pts[j] - pts[i];
            const double len = std::abs(dir);
            if (len == 0.0) continue;
            dir /= len;
            int count = 0;
            for (int k = 0; k < m; ++k) {
                const Cplx rel = (pts[k] - pts[i]) * std::conj(dir);
                if (std::abs(rel.imag()) <= tol) ++count;
            }
            if (count > best.count) best = {count, Line{pts[i], dir}};
        }
    }
    return best;
}

BoundReport check_half_bound(const Polynomial& p, const RootFindConfig& cfg,
                             double eps_class, double eps_line) {
    BoundReport report;
    report.degree = p.degree();
    report.records = classify(p, cfg, eps_class);
    CollinearCount cc = max_collinear_attractive(report.records, eps_line);
    report.max_collinear_attractive = cc.count;
    report.witness_line = cc.witness;
    report.bound = (report.degree + 1) / 2;
    report.satisfied = report.max_collinear_attractive <= report.bound;
    return report;
}

double conjecture_margin(const Polynomial& p, const RootFindConfig& cfg) {
    const std::vector<Cplx> thetas = fixed_points(p, cfg);
    const Polynomial dp = p.derivative();
    double margin = -std::numeric_limits<double>::infinity();
    for (const Cplx& theta : thetas)
        margin = std::max(margin, dp(theta).real());
    return margin;
}

QuadraticIdentity quadratic_identity_check(const Polynomial& p) {
    if (p.degree() != 2)
        throw WrongDegree("quadratic_identity_check: degree must be 2, got " +
                          std::to_string(p.degree()));
    // Fixed points are the roots of a2 z^2 + (a1 - 1) z + a0, solved in
    // closed form (cancellation-safe variant).
    const Cplx a = p.coeff(2);
    const Cplx b = p.coeff(1) - Cplx{1.0, 0.0};
    const Cplx c = p.coeff(0);
    Cplx disc = std::sqrt(b * b - 4.0 * a * c);
    if ((std::conj(b) * disc).real() < 0.0) disc = -disc;
    const Cplx q = -0.5 * (b + disc);
    const Cplx z1 = q / a;
    const Cplx z2 = (q == Cplx{}) ? Cplx{} : c / q;

    const double sep_tol = 1e-10 * std::max({1.0, std::abs(z1), std::abs(z2)});
    if (std::abs(z1 - z2) <= sep_tol)
        throw MultipleFixedPoint("quadratic_identity_check: fixed points coincide");

    const Polynomial dp = p.derivative();
    QuadraticIdentity result;
    result.lambda1 = dp(z1);
    result.lambda2 = dp(z2);
    result.sum = result.lambda1 + result.lambda2;
    const double scale =
        std::max({1.0, std::abs(result.lambda1), std::abs(result.lambda2)});
    result.ok = std::abs(result.sum - Cplx{2.0, 0.0}) <= 1e-9 * scale;
    return result;
}

CubicDecomposition cubic_decomposition(Cplx c, Cplx z1, Cplx z2, Cplx z3) {
    require_finite(c, "cubic_decomposition c");
    require_finite(z1, "cubic_decomposition z1");
    require_finite(z2, "cubic_decomposition z2");
    require_finite(z3, "cubic_decomposition z3");
    if (c == Cplx{})
        throw ZeroLeadingFactor("cubic_decomposition: c must be nonzero");
    const double sep_tol =
        1e-10 * std::max({1.0, std::abs(z1), std::abs(z2), std::abs(z3)});
    if (std::abs(z1 - z2) <= sep_tol || std::abs(z2 - z3) <= sep_tol ||
        std::abs(z3 - z1) <= sep_tol)
        throw NodesTooClose("cubic_decomposition: fixed points must be pairwise distinct");

    CubicDecomposition dec;
    dec.a = std::sqrt(c);
    dec.alphas = {dec.a * (z1 - z2), dec.a * (z3 - z1), dec.a * (z2 - z3)};
    dec.lambdas = {Cplx{1.0, 0.0} - dec.alphas[0] * dec.alphas[1],
                   Cplx{1.0, 0.0} - dec.alphas[1] * dec.alphas[2],
                   Cplx{1.0, 0.0} - dec.alphas[2] * dec.alphas[0]};

    // internal consistency: alpha telescoping and lambda_i = p'(.) at the
    // matching fixed point (z1, z3, z2 in lambda order)
    double ascale = std::max({1.0, std::abs(dec.alphas[0]), std::abs(dec.alphas[1]),
                              std::abs(dec.alphas[2])});
    Cplx asum = dec.alphas[0] + dec.alphas[1] + dec.alphas[2];
    if (std::abs(asum) > 1e-12 * ascale)
        throw Error("cubic_decomposition: alpha sum failed to vanish");
    const Polynomial dp = from_fixed_point_form(c, {z1, z2, z3}).derivative();
    const Cplx expected[3] = {dp(z1), dp(z3), dp(z2)};
    for (int i = 0; i < 3; ++i) {
        double lscale = std::max(1.0, std::abs(dec.lambdas[static_cast<std::size_t>(i)]));
        if (std::abs(dec.lambdas[static_cast<std::size_t>(i)] - expected[i]) > 1e-9 * lscale)
            throw Error("cubic_decomposition: multiplier identity failed");
    }

    const double b1 = dec.alphas[0].imag();
    const double b2 = dec.alphas[1].imag();
    const double b3 = dec.alphas[2].imag();
    if (b1 * b2 >= 0.0)
        dec.same_sign_pair = {1, 2};
    else if (b2 * b3 >= 0.0)
        dec.same_sign_pair = {2, 3};
    else
        dec.same_sign_pair = {3, 1};

    dec.guaranteed_index = 1;
    for (int i = 1; i < 3; ++i)
        if (dec.lambdas[static_cast<std::size_t>(i)].real() >
            dec.lambdas[static_cast<std::size_t>(dec.guaranteed_index - 1)].real())
            dec.guaranteed_index = i + 1;
    dec.margin = dec.lambdas[static_cast<std::size_t>(dec.guaranteed_index - 1)].real();
    return dec;
}

Polynomial sample_polynomial(SampleStrategy strategy, int degree, SplitMix64& rng) {
    if (strategy == SampleStrategy::coefficient) {
        std::vector<Cplx> coeffs(static_cast<std::size_t>(degree) + 1);
        for (Cplx& c : coeffs) c = rng.box(1.0);
        while (std::abs(coeffs.back()) < 0.1) coeffs.back() = rng.box(1.0);
        return Polynomial(std::move(coeffs));
    }
    const Cplx c = rng.annulus(0.1, 2.0);
    std::vector<Cplx> pts(static_cast<std::size_t>(degree));
    for (Cplx& z : pts) z = rng.disk();
    return from_fixed_point_form(c, pts);
}

namespace {

struct ChunkResult {
    long valid = 0;
    long skipped = 0;
    long violations = 0;
    std::array<long, 64> histogram{};
    double min_margin = std::numeric_limits<double>::infinity();
    long min_index = -1;
    std::vector<Cplx> min_coeffs;
};

int histogram_bin(double margin) {
    double clamped = std::min(4.0, std::max(0.0, margin));
    int bin = static_cast<int>(clamped / 4.0 * 64.0);
    return std::min(bin, 63);
}

// Margin of one sample, fully determined by (seed, index). Resamples on
// clustered fixed points; returns false on persistent root-find failure.
bool run_sample(const SearchConfig& cfg, long index, double* margin_out,
                std::vector<Cplx>* coeffs_out) {
    SplitMix64 rng(split_seed(cfg.seed, static_cast<std::uint64_t>(index)));
    for (int attempt = 0; attempt < 100; ++attempt) {
        Polynomial p = sample_polynomial(cfg.strategy, cfg.degree, rng);
        if (p.degree() != cfg.degree) continue; // trimmed degenerate draw
        std::vector<Cplx> thetas;
        try {
            thetas = fixed_points(p, cfg.root);
        } catch (const NoConvergence&) {
            return false; // counted as skipped, not resampled
        }
        double spread = 0.0, min_sep = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < thetas.size(); ++i)
            for (std::size_t j = i + 1; j < thetas.size(); ++j) {
                double d = std::abs(thetas[i] - thetas[j]);
                spread = std::max(spread, d);
                min_sep = std::min(min_sep, d);
            }
        if (thetas.size() > 1 && min_sep < 1e-8 * spread) continue;

        const Polynomial dp = p.derivative();
        double margin = -std::numeric_limits<double>::infinity();
        for (const Cplx& theta : thetas)
            margin = std::max(margin, dp(theta).real());
        *margin_out = margin;
        *coeffs_out = p.coeffs();
        return true;
    }
    return false;
}

ChunkResult run_chunk(const SearchConfig& cfg, long begin, long end,
                      std::atomic<long>* progress_counter) {
    ChunkResult res;
    for (long idx = begin; idx < end; ++idx) {
        double margin = 0.0;
        std::vector<Cplx> coeffs;
        if (!run_sample(cfg, idx, &margin, &coeffs)) {
            ++res.skipped;
        } else {
            ++res.valid;
            ++res.histogram[static_cast<std::size_t>(histogram_bin(margin))];
            if (margin < 1.0 - 1e-6) ++res.violations;
            if (margin < res.min_margin ||
                (margin == res.min_margin && idx < res.min_index)) {
                res.min_margin = margin;
                res.min_index = idx;
                res.min_coeffs = std::move(coeffs);
            }
        }
        if (progress_counter) progress_counter->fetch_add(1, std::memory_order_relaxed);
    }
    return res;
}

} // namespace

SearchReport conjecture_search(const SearchConfig& cfg) {
    if (cfg.degree < 2)
        throw DegreeTooSmall("conjecture_search: degree must be >= 2");
    if (cfg.samples < 1)
        throw Error("conjecture_search: need at least one sample");

    const long chunk_size = 1024;
    const long n_chunks = (cfg.samples + chunk_size - 1) / chunk_size;
    std::vector<ChunkResult> chunks(static_cast<std::size_t>(n_chunks));

    unsigned workers = cfg.workers > 0
                           ? static_cast<unsigned>(cfg.workers)
                           : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n_chunks));

    std::atomic<long> progress{0};
    std::atomic<long> next_chunk{0};
    std::atomic<int> decile{1};
    auto worker_loop = [&] {
        for (;;) {
            long chunk = next_chunk.fetch_add(1);
            if (chunk >= n_chunks) return;
            long begin = chunk * chunk_size;
            long end = std::min(cfg.samples, begin + chunk_size);
            chunks[static_cast<std::size_t>(chunk)] =
                run_chunk(cfg, begin, end, cfg.progress ? &progress : nullptr);
            if (cfg.progress) {
                long did = progress.load(std::memory_order_relaxed);
                int dec = decile.load(std::memory_order_relaxed);
                while (dec <= 10 && did * 10 >= cfg.samples * dec) {
                    if (decile.compare_exchange_strong(dec, dec + 1))
                        std::fprintf(stderr, "conjecture_search: %d%% (%ld/%ld)\n",
                                     dec * 10, did, cfg.samples);
                }
            }
        }
    };

    if (workers <= 1) {
        worker_loop();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker_loop);
        for (std::thread& t : pool) t.join();
    }

    SearchReport report;
    report.samples = cfg.samples;
    report.seed = cfg.seed;
    report.strategy = cfg.strategy;
    report.degree = cfg.degree;
    report.min_margin = std::numeric_limits<double>::quiet_NaN();
    double best = std::numeric_limits<double>::infinity();
    long best_index = -1;
    for (const ChunkResult& cr : chunks) { // merge in chunk order
        report.violations += cr.violations;
        report.skipped += cr.skipped;
        for (std::size_t b = 0; b < cr.histogram.size(); ++b)
            report.histogram[b] += cr.histogram[b];
        if (cr.valid > 0 &&
            (cr.min_margin < best || (cr.min_margin == best && cr.min_index < best_index))) {
            best = cr.min_margin;
            best_index = cr.min_index;
            report.argmin_coeffs = cr.min_coeffs;
        }
    }
    if (best_index >= 0) report.min_margin = best;
    return report;
}

} // namespace polyfp
