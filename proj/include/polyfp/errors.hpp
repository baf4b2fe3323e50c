#ifndef POLYFP_ERRORS_HPP
#define POLYFP_ERRORS_HPP

#include <stdexcept>

namespace polyfp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations.
struct NonFiniteInput : Error { using Error::Error; };
struct ZeroLeadingFactor : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };
struct DegreeZero : Error { using Error::Error; };
struct WrongDegree : Error { using Error::Error; };
struct NodesTooClose : Error { using Error::Error; };
struct MultipleFixedPoint : Error { using Error::Error; };
struct NotAFixedPoint : Error { using Error::Error; };

// Iteration failures.
struct NoConvergence : Error { using Error::Error; };
struct DidNotConverge : Error { using Error::Error; };

} // namespace polyfp

#endif
