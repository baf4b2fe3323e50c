#include "polyfp/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyfp {

Polynomial::Polynomial(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        coeffs_.assign(1, Cplx{});
        return;
    }
    double maxmag = 0.0;
    for (const Cplx& c : coeffs_) {
        require_finite(c, "Polynomial coefficient");
        maxmag = std::max(maxmag, std::abs(c));
    }
    const double threshold = kTrimRel * maxmag;
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= threshold)
        coeffs_.pop_back();
    if (coeffs_.size() == 1 && std::abs(coeffs_[0]) <= threshold)
        coeffs_[0] = Cplx{};
}

Cplx Polynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return Cplx{};
    return coeffs_[static_cast<std::size_t>(k)];
}

Cplx Polynomial::operator()(Cplx z) const {
    require_finite(z, "Polynomial evaluation point");
    Cplx acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;)
        acc = acc * z + coeffs_[k];
    return acc;
}

std::pair<Cplx, Cplx> Polynomial::eval_with_derivative(Cplx z) const {
    require_finite(z, "Polynomial evaluation point");
    Cplx val = coeffs_.back();
    Cplx der{};
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        der = der * z + val;
        val = val * z + coeffs_[k];
    }
    return {val, der};
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial{};
    std::vector<Cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Cplx> sum(std::max(coeffs_.size(), other.coeffs_.size()), Cplx{});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) sum[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) sum[k] += other.coeffs_[k];
    return Polynomial(std::move(sum));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<Cplx> diff(std::max(coeffs_.size(), other.coeffs_.size()), Cplx{});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) diff[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) diff[k] -= other.coeffs_[k];
    return Polynomial(std::move(diff));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial{};
    std::vector<Cplx> prod(coeffs_.size() + other.coeffs_.size() - 1, Cplx{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(prod));
}

Polynomial Polynomial::operator*(Cplx s) const {
    require_finite(s, "Polynomial scalar factor");
    std::vector<Cplx> scaled(coeffs_);
    for (Cplx& c : scaled) c *= s;
    return Polynomial(std::move(scaled));
}

double max_coeff_magnitude(const Polynomial& p) {
    double maxmag = 0.0;
    for (const Cplx& c : p.coeffs()) maxmag = std::max(maxmag, std::abs(c));
    return maxmag;
}

double cauchy_root_bound(const Polynomial& p) {
    if (p.degree() < 1 || p.leading() == Cplx{}) return 0.0;
    const double lead = std::abs(p.leading());
    double maxlow = 0.0;
    for (int k = 0; k < p.degree(); ++k)
        maxlow = std::max(maxlow, std::abs(p.coeff(k)));
    return 1.0 + maxlow / lead;
}

Polynomial from_roots(Cplx leading, const std::vector<Cplx>& roots) {
    require_finite(leading, "from_roots leading coefficient");
    std::vector<Cplx> acc{leading};
    for (const Cplx& r : roots) {
        require_finite(r, "from_roots root");
        acc.push_back(Cplx{});
        for (std::size_t k = acc.size() - 1; k >= 1; --k)
            acc[k] = acc[k - 1] - r * acc[k];
        acc[0] = -r * acc[0];
    }
    return Polynomial(std::move(acc));
}

Polynomial from_fixed_point_form(Cplx c, const std::vector<Cplx>& roots) {
    require_finite(c, "from_fixed_point_form factor");
    if (c == Cplx{})
        throw ZeroLeadingFactor("from_fixed_point_form: c must be nonzero");
    return from_roots(c, roots) + Polynomial{Cplx{0.0, 0.0}, Cplx{1.0, 0.0}};
}

Polynomial exemplar_family(int n) {
    if (n < 2)
        throw DegreeTooSmall("exemplar_family requires n >= 2, got " + std::to_string(n));
    std::vector<Cplx> coeffs(static_cast<std::size_t>(n) + 2, Cplx{});
    coeffs[1] = Cplx{(static_cast<double>(n) + 1.0) / n, 0.0};
    coeffs.back() = Cplx{-1.0 / n, 0.0};
    return Polynomial(std::move(coeffs));
}

} // namespace polyfp
