#pragma once

#include <stdexcept>
#include <string>

namespace bq {

/// Base class for all library-specific failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Attempt to invert a null biquaternion (semi-norm zero, e.g. 1 + i*e3).
struct NullElementError : Error {
    explicit NullElementError(const std::string& what = "null biquaternion has no inverse")
        : Error(what) {}
};

/// Field evaluated at a declared singular point (e.g. Coulomb center).
struct SingularPointError : Error {
    explicit SingularPointError(const std::string& what = "field is singular at this event")
        : Error(what) {}
};

/// Spinor decomposition requested for a null electromagnetic field (F.F = 0).
struct NullFieldError : Error {
    explicit NullFieldError(const std::string& what = "null field is not spinorizable")
        : Error(what) {}
};

/// Gursey rotor formula degenerates when the field direction is antipodal to
/// the reference axis (f.u -> -1). Retry with the opposite axis -u.
struct DegenerateAxisError : Error {
    explicit DegenerateAxisError(
        const std::string& what = "field direction antipodal to reference axis; retry with -u")
        : Error(what) {}
};

/// Two rotors do not differ by a factor on the exp(c*u) gauge orbit.
struct NotOnOrbitError : Error {
    explicit NotOnOrbitError(const std::string& what = "rotors are not on the same gauge orbit")
        : Error(what) {}
};

/// Plane-wave spinor construction requires an on-shell momentum.
struct OffShellError : Error {
    explicit OffShellError(const std::string& what = "momentum is not on the mass shell")
        : Error(what) {}
};

/// Operation needs second partial derivatives the field does not supply.
struct MissingDerivativeError : Error {
    explicit MissingDerivativeError(const std::string& what = "field supplies no second partials")
        : Error(what) {}
};

/// Exhaustive time-reversal scan found no solution-preserving candidate;
/// indicates inconsistent operator conventions.
struct SearchExhaustedError : Error {
    explicit SearchExhaustedError(
        const std::string& what = "no time-reversal candidate preserves solutions")
        : Error(what) {}
};

} // namespace bq
