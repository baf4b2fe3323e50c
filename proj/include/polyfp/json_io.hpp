#ifndef POLYFP_JSON_IO_HPP
#define POLYFP_JSON_IO_HPP

#include <string>
#include <vector>

#include "polyfp/analysis.hpp"
#include "polyfp/dynamics.hpp"
#include "polyfp/hermite.hpp"
#include "polyfp/polynomial.hpp"

namespace polyfp {

// Emitted JSON is byte-stable: fixed field order, reals at 17 significant
// digits (lossless for doubles), no locale dependence. Parsing is liberal
// about whitespace and accepts both wrapped and bare forms.

std::string json_real(double x); // non-finite values serialize as null
std::string json_complex(Cplx z); // [re, im]
std::string json_complex_list(const std::vector<Cplx>& zs);
std::string json_string(const std::string& s);

std::string to_json(const Polynomial& p);        // {"coeffs": [[re, im], ...]}
std::string to_json(const NodeSystem& sys);      // {"nodes": [{"z": .., "alpha": ..}, ..]}
std::string to_json(const SynthesisResult& r);
std::string to_json(const SearchReport& r);
std::string to_json(const BoundReport& r);
std::string to_json(const Orbit& o);
std::string to_json(const CoverageReport& r);
std::string to_json(const QuadraticIdentity& q);
std::string to_json(const CubicDecomposition& d);
std::string basin_sidecar_json(const BasinImage& img);

/// BoundReport plus the conjecture margin, as one object (the `analyze`
/// command output).
std::string analyze_json(const BoundReport& r, double conjecture_margin);

Polynomial parse_polynomial(const std::string& text);
NodeSystem parse_node_system(const std::string& text);
std::vector<Polynomial> parse_polynomial_list(const std::string& text);
Cplx parse_complex(const std::string& text); // "[re, im]" or a bare real

} // namespace polyfp

#endif
