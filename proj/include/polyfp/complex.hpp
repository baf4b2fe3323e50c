#ifndef POLYFP_COMPLEX_HPP
#define POLYFP_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <string>

#include "polyfp/errors.hpp"

namespace polyfp {

using Cplx = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x))
        throw NonFiniteInput(std::string(what) + ": value is not finite");
}

inline void require_finite(Cplx z, const char* what) {
    if (!is_finite(z))
        throw NonFiniteInput(std::string(what) + ": value is not finite");
}

} // namespace polyfp

#endif
