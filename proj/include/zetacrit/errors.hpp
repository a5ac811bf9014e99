#ifndef ZETACRIT_ERRORS_HPP
#define ZETACRIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetacrit {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };

// zeta family
struct PoleAtOne : Error { using Error::Error; };
struct ToleranceUnachievable : Error { using Error::Error; };
struct LogOfZero : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };

// argument tracking
struct PathThroughZero : Error { using Error::Error; };
struct UnwrapInconsistent : Error { using Error::Error; };

// zero tables
struct ParseError : Error { using Error::Error; };
struct NotMonotone : Error { using Error::Error; };
struct CountMismatch : Error { using Error::Error; };
struct MissedZero : Error { using Error::Error; };

// quadrature
struct NonConvergent : Error { using Error::Error; };
struct UnsupportedKernel : Error { using Error::Error; };
struct NotSimplePole : Error { using Error::Error; };

// criteria
struct SpecViolation : Error { using Error::Error; };
struct InsufficientZeroTable : Error { using Error::Error; };
struct Inconclusive : Error { using Error::Error; };

} // namespace zetacrit

#endif
