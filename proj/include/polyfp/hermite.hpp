#ifndef POLYFP_HERMITE_HPP
#define POLYFP_HERMITE_HPP

#include <vector>

#include "polyfp/polynomial.hpp"

namespace polyfp {

/// A prescribed fixed point z with target multiplier alpha: the synthesized
/// polynomial will satisfy h(z) = z and h'(z) = alpha.
struct Node {
    Cplx z;
    Cplx alpha;
};

/// Prescription for synthesis. Points must be pairwise distinct: minimum
/// separation max(1e-8 * spread, 1e-12), where spread is the largest pairwise
/// distance. Violations throw NodesTooClose at construction.
class NodeSystem {
public:
    explicit NodeSystem(std::vector<Node> nodes);

    int size() const { return static_cast<int>(nodes_.size()); }
    const Node& operator[](int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    const std::vector<Node>& nodes() const { return nodes_; }
    double spread() const { return spread_; }

private:
    std::vector<Node> nodes_;
    double spread_ = 0.0;
};

/// Triangular divided-difference table over the doubled node list
/// (z_1, z_1, z_2, z_2, ...). entries[k][i] spans doubled_nodes[i..i+k];
/// the repeated-pair spans of length 2 hold the prescribed derivatives, and
/// every longer span is the standard quotient recursion. Repeated nodes are
/// detected positionally (even start index), never by coordinate equality.
struct DividedDifferenceTable {
    std::vector<Cplx> doubled_nodes;
    std::vector<std::vector<Cplx>> entries;

    /// Diagonal entries[k][0]: the Newton-form coefficients of the interpolant.
    std::vector<Cplx> newton_coefficients() const;

    /// Topmost entry, the coefficient of the full-length Newton term.
    Cplx top() const { return entries.back()[0]; }
};

DividedDifferenceTable build_table(const NodeSystem& sys);

/// Closed form for the doubled-pair span over nodes 1..k (2 <= k <= n):
///   sum_i (alpha_i - 1) / prod_{j != i} (z_i - z_j)^2.
Cplx closed_form_even(const NodeSystem& sys, int k);

/// Closed form for the bridge span (z_1, z_2, z_2, ..., z_k, z_k, z_{k+1})
/// with 2 <= k <= n-1:
///   sum_{i=2..k} (alpha_i - 1)(z_i - z_1)(z_i - z_{k+1}) / pi_i,
/// where pi_i = prod_{j <= k+1, j != i} (z_i - z_j)^2. Equals the table entry
/// entries[2k-1][1].
Cplx closed_form_bridge(const NodeSystem& sys, int k);

struct SynthesisResult {
    Polynomial h;                      // monomial form, trimmed
    std::vector<Cplx> newton_coeffs;   // table diagonal
    Cplx leading_coefficient;          // table top entry, before any trimming
    int achieved_degree;               // degree of h after trimming
    double max_value_residual;         // max_i |h(z_i) - z_i|
    double max_derivative_residual;    // max_i |h'(z_i) - alpha_i|
};

/// Least-degree polynomial with h(z_i) = z_i and h'(z_i) = alpha_i for every
/// node. Degree is at most 2n-1; when all |alpha_i| < 1 and the z_i are
/// collinear it is exactly 2n-1 with a nonzero leading coefficient.
SynthesisResult synthesize(const NodeSystem& sys);

/// Expand sum_k c_k * prod_{j<k} (z - nodes[j]) to monomial form by
/// multiply-accumulate from the highest term down. Lengths must match.
Polynomial newton_to_monomial(const std::vector<Cplx>& newton_coeffs,
                              const std::vector<Cplx>& nodes);

} // namespace polyfp

#endif
