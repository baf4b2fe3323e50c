#ifndef POLYFP_ANALYSIS_HPP
#define POLYFP_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polyfp/polynomial.hpp"
#include "polyfp/rng.hpp"
#include "polyfp/rootfind.hpp"

namespace polyfp {

enum class Stability { attractive, neutral, repelling };

const char* to_string(Stability s);

/// Multipliers within eps of the unit circle are neutral: the collinear-count
/// hypothesis is a strict inequality, and a misclassified neutral point could
/// fabricate a bound violation.
constexpr double kDefaultClassEps = 1e-9;

/// Collinearity tolerance, relative to the spread of the attractive points.
constexpr double kDefaultLineEps = 1e-7;

struct FixedPointRecord {
    Cplx theta;        // the fixed point
    Cplx multiplier;   // p'(theta)
    Stability cls;
    double residual;   // |p(theta) - theta|
};

/// One record per fixed point of p (with multiplicity), sorted by (re, im).
std::vector<FixedPointRecord> classify(const Polynomial& p,
                                       const RootFindConfig& cfg = {},
                                       double eps_class = kDefaultClassEps);

struct Line {
    Cplx point;
    Cplx direction; // unit modulus
};

struct CollinearCount {
    int count = 0;
    std::optional<Line> witness;
};

/// Largest subset of attractive-class points lying within perpendicular
/// distance eps_line * spread of a common line, by exhaustive enumeration of
/// lines through all pairs. With 0 or 1 attractive points the count is that
/// number and no line is reported.
CollinearCount max_collinear_attractive(const std::vector<FixedPointRecord>& records,
                                        double eps_line = kDefaultLineEps);

struct BoundReport {
    int degree = 0;
    std::vector<FixedPointRecord> records;
    int max_collinear_attractive = 0;
    int bound = 0; // ceil(degree / 2)
    bool satisfied = false;
    std::optional<Line> witness_line;
};

/// Checks that no more than ceil(degree/2) attractive fixed points are
/// collinear. satisfied == false is a headline event, not an error: it means
/// either a numerical artifact or a counterexample, and callers must surface
/// the instance.
BoundReport check_half_bound(const Polynomial& p, const RootFindConfig& cfg = {},
                             double eps_class = kDefaultClassEps,
                             double eps_line = kDefaultLineEps);

/// max over fixed points theta of Re(p'(theta)). Conjectured >= 1 for every
/// polynomial of degree > 1.
double conjecture_margin(const Polynomial& p, const RootFindConfig& cfg = {});

struct QuadraticIdentity {
    Cplx lambda1, lambda2; // multipliers at the two fixed points
    Cplx sum;              // lambda1 + lambda2, algebraically exactly 2
    bool ok;               // |sum - 2| <= 1e-9 * max(1, |lambda1|, |lambda2|)
};

/// The degree-2 case in executable form: the two multipliers of a quadratic
/// with distinct fixed points sum to exactly 2, so one of them has real part
/// >= 1. Throws WrongDegree unless degree(p) == 2 and MultipleFixedPoint when
/// the fixed points coincide.
QuadraticIdentity quadratic_identity_check(const Polynomial& p);

struct CubicDecomposition {
    Cplx a;                        // a^2 = c (principal square root)
    std::array<Cplx, 3> alphas;    // a(z1-z2), a(z3-z1), a(z2-z3); sums to 0
    std::array<Cplx, 3> lambdas;   // 1 - a1*a2, 1 - a2*a3, 1 - a3*a1
    std::pair<int, int> same_sign_pair; // 1-based (i, j) with Im a_i * Im a_j >= 0
    int guaranteed_index = 0;      // 1-based argmax of Re(lambda); Re >= 1
    double margin = 0.0;           // max_i Re(lambda_i)
};

/// The degree-3 case: for p = c(z-z1)(z-z2)(z-z3) + z the multipliers are
/// lambda_1 = p'(z1), lambda_2 = p'(z3), lambda_3 = p'(z2), and at least one
/// has real part >= 1. Verifies the alpha-sum and multiplier identities
/// internally. Throws ZeroLeadingFactor when c = 0, NodesTooClose when the
/// z_i are not pairwise distinct.
CubicDecomposition cubic_decomposition(Cplx c, Cplx z1, Cplx z2, Cplx z3);

enum class SampleStrategy {
    coefficient, // all coefficients uniform in the unit box, |leading| >= 0.1
    fixed_point, // c in the annulus 0.1 <= |c| <= 2, fixed points in the unit disk
};

const char* to_string(SampleStrategy s);

/// Random polynomial of the given degree under the strategy. Deterministic
/// for a given rng state.
Polynomial sample_polynomial(SampleStrategy strategy, int degree, SplitMix64& rng);

struct SearchConfig {
    int degree = 3;
    long samples = 10000;
    std::uint64_t seed = 1;
    SampleStrategy strategy = SampleStrategy::coefficient;
    int workers = 0; // 0 = hardware concurrency
    RootFindConfig root;
    bool progress = false; // decile progress lines on stderr
};

struct SearchReport {
    double min_margin = 0.0;          // NaN when every sample was skipped
    std::vector<Cplx> argmin_coeffs;
    std::array<long, 64> histogram{}; // margins clamped into [0, 4]
    long violations = 0;              // margin < 1 - 1e-6
    long skipped = 0;                 // root-finding failures
    long samples = 0;
    std::uint64_t seed = 0;
    SampleStrategy strategy = SampleStrategy::coefficient;
    int degree = 0;

    double skip_rate() const {
        return samples > 0 ? static_cast<double>(skipped) / static_cast<double>(samples) : 0.0;
    }
};

/// Samples cfg.samples random polynomials and records the conjecture margin
/// of each. Samples whose fixed points cluster within 1e-8 * spread are
/// redrawn from the same per-sample stream; samples whose root-finding fails
/// are skipped and counted. Work is split into fixed-size chunks whose
/// partial reports merge in chunk order, so the result is byte-identical for
/// any worker count.
SearchReport conjecture_search(const SearchConfig& cfg);

} // namespace polyfp

#endif
