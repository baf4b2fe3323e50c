#ifndef POLYFP_POLYNOMIAL_HPP
#define POLYFP_POLYNOMIAL_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "polyfp/complex.hpp"

namespace polyfp {

/// Dense complex polynomial, coefficients ascending: coeffs[k] multiplies z^k.
///
/// The representation is trimmed on construction: a trailing coefficient
/// counts as zero when its magnitude is <= 1e-13 times the largest
/// coefficient magnitude (Newton-form expansion introduces rounding in
/// exactly that range). The zero polynomial is the single coefficient 0.
class Polynomial {
public:
    static constexpr double kTrimRel = 1e-13;

    Polynomial() : coeffs_{Cplx{0.0, 0.0}} {}
    explicit Polynomial(std::vector<Cplx> coeffs);
    Polynomial(std::initializer_list<Cplx> coeffs)
        : Polynomial(std::vector<Cplx>(coeffs)) {}

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Cplx{}; }
    const std::vector<Cplx>& coeffs() const { return coeffs_; }
    Cplx coeff(int k) const;
    Cplx leading() const { return coeffs_.back(); }

    /// Horner evaluation; exact for degree 0.
    Cplx operator()(Cplx z) const;

    /// p(z) and p'(z) in one Horner pass.
    std::pair<Cplx, Cplx> eval_with_derivative(Cplx z) const;

    /// Derivative of a constant is the zero polynomial.
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(Cplx s) const;
    bool operator==(const Polynomial& other) const = default;

private:
    std::vector<Cplx> coeffs_;
};

double max_coeff_magnitude(const Polynomial& p);

/// 1 + max_k |a_k / a_n|; every root has modulus below this.
double cauchy_root_bound(const Polynomial& p);

/// leading * prod_i (z - roots[i]), expanded.
Polynomial from_roots(Cplx leading, const std::vector<Cplx>& roots);

/// c * prod_i (z - roots[i]) + z; every root is a fixed point of the result.
/// Throws ZeroLeadingFactor when c = 0.
Polynomial from_fixed_point_form(Cplx c, const std::vector<Cplx>& roots);

/// (-z^(n+1) + (n+1)z) / n for n >= 2. Its fixed points are 0 and the n-th
/// roots of unity; the roots of unity are superattractive.
Polynomial exemplar_family(int n);

} // namespace polyfp

#endif
