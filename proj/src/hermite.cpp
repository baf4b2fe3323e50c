#include "polyfp/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace polyfp {

NodeSystem::NodeSystem(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty())
        throw std::invalid_argument("NodeSystem: at least one node required");
    for (const Node& nd : nodes_) {
        require_finite(nd.z, "NodeSystem point");
        require_finite(nd.alpha, "NodeSystem multiplier");
    }
    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
            double d = std::abs(nodes_[i].z - nodes_[j].z);
            spread_ = std::max(spread_, d);
            min_sep = std::min(min_sep, d);
        }
    }
    if (nodes_.size() > 1) {
        const double eps_sep = std::max(1e-8 * spread_, 1e-12);
        if (min_sep < eps_sep)
            throw NodesTooClose("NodeSystem: minimum point separation " +
                                std::to_string(min_sep) + " below " +
                                std::to_string(eps_sep));
    }
}

std::vector<Cplx> DividedDifferenceTable::newton_coefficients() const {
    std::vector<Cplx> diag;
    diag.reserve(entries.size());
    for (const auto& row : entries) diag.push_back(row[0]);
    return diag;
}

DividedDifferenceTable build_table(const NodeSystem& sys) {
    const int n = sys.size();
    const std::size_t m = 2 * static_cast<std::size_t>(n);

    DividedDifferenceTable table;
    table.doubled_nodes.resize(m);
    for (int i = 0; i < n; ++i) {
        table.doubled_nodes[2 * static_cast<std::size_t>(i)] = sys[i].z;
        table.doubled_nodes[2 * static_cast<std::size_t>(i) + 1] = sys[i].z;
    }

    table.entries.resize(m);
    // span length 1: values at fixed points are the points themselves
    table.entries[0].resize(m);
    for (std::size_t j = 0; j < m; ++j)
        table.entries[0][j] = table.doubled_nodes[j];

    if (m == 1) return table;

    // span length 2: prescribed derivative on repeated pairs (even start),
    // quotient on distinct neighbours
    table.entries[1].resize(m - 1);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        if (j % 2 == 0) {
            table.entries[1][j] = sys[static_cast<int>(j / 2)].alpha;
        } else {
            table.entries[1][j] =
                (table.entries[0][j + 1] - table.entries[0][j]) /
                (table.doubled_nodes[j + 1] - table.doubled_nodes[j]);
        }
    }

    for (std::size_t k = 2; k < m; ++k) {
        table.entries[k].resize(m - k);
        for (std::size_t j = 0; j + k < m; ++j) {
            table.entries[k][j] =
                (table.entries[k - 1][j + 1] - table.entries[k - 1][j]) /
                (table.doubled_nodes[j + k] - table.doubled_nodes[j]);
        }
    }
    return table;
}

Cplx closed_form_even(const NodeSystem& sys, int k) {
    if (k < 2 || k > sys.size())
        throw std::invalid_argument("closed_form_even: k must be in 2..n");
    Cplx sum{};
    for (int i = 0; i < k; ++i) {
        Cplx pi{1.0, 0.0};
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            Cplx d = sys[i].z - sys[j].z;
            pi *= d * d;
        }
        if (pi == Cplx{})
            throw NodesTooClose("closed_form_even: separation product underflowed");
        sum += (sys[i].alpha - Cplx{1.0, 0.0}) / pi;
    }
    return sum;
}

Cplx closed_form_bridge(const NodeSystem& sys, int k) {
    if (k < 2 || k > sys.size() - 1)
        throw std::invalid_argument("closed_form_bridge: k must be in 2..n-1");
    Cplx sum{};
    for (int i = 1; i < k; ++i) { // nodes 2..k, zero-based 1..k-1
        Cplx pi{1.0, 0.0};
        for (int j = 0; j <= k; ++j) { // nodes 1..k+1
            if (j == i) continue;
            Cplx d = sys[i].z - sys[j].z;
            pi *= d * d;
        }
        if (pi == Cplx{})
            throw NodesTooClose("closed_form_bridge: separation product underflowed");
        sum += (sys[i].alpha - Cplx{1.0, 0.0}) *
               (sys[i].z - sys[0].z) * (sys[i].z - sys[k].z) / pi;
    }
    return sum;
}

Polynomial newton_to_monomial(const std::vector<Cplx>& newton_coeffs,
                              const std::vector<Cplx>& nodes) {
    if (newton_coeffs.size() != nodes.size())
        throw std::invalid_argument("newton_to_monomial: coefficient/node length mismatch");
    if (newton_coeffs.empty()) return Polynomial{};

    std::vector<Cplx> acc{newton_coeffs.back()};
    for (std::size_t k = newton_coeffs.size() - 1; k-- > 0;) {
        // acc <- acc * (z - nodes[k]) + c_k
        acc.push_back(Cplx{});
        for (std::size_t j = acc.size() - 1; j >= 1; --j)
            acc[j] = acc[j - 1] - nodes[k] * acc[j];
        acc[0] = -nodes[k] * acc[0] + newton_coeffs[k];
    }
    return Polynomial(std::move(acc));
}

SynthesisResult synthesize(const NodeSystem& sys) {
    DividedDifferenceTable table = build_table(sys);
    SynthesisResult result;
    result.newton_coeffs = table.newton_coefficients();
    result.leading_coefficient = table.top();
    result.h = newton_to_monomial(result.newton_coeffs, table.doubled_nodes);
    result.achieved_degree = result.h.degree();

    Polynomial dh = result.h.derivative();
    result.max_value_residual = 0.0;
    result.max_derivative_residual = 0.0;
    for (const Node& nd : sys.nodes()) {
        result.max_value_residual =
            std::max(result.max_value_residual, std::abs(result.h(nd.z) - nd.z));
        result.max_derivative_residual =
            std::max(result.max_derivative_residual, std::abs(dh(nd.z) - nd.alpha));
    }
    return result;
}

} // namespace polyfp
