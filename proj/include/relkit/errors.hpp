#ifndef RELKIT_ERRORS_HPP
#define RELKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace relkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial has no root decomposition") {}
};

struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& what) : Error(what) {}
};

struct NotASubspace : Error {
    explicit NotASubspace(const std::string& what) : Error(what) {}
};

struct NotInSpan : Error {
    explicit NotInSpan(const std::string& what) : Error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct DimMismatch : Error {
    explicit DimMismatch(const std::string& what) : Error(what) {}
};

struct SingularTransform : Error {
    SingularTransform() : Error("transform matrix is singular") {}
};

struct NotAProperEigenvalue : Error {
    explicit NotAProperEigenvalue(const std::string& what) : Error(what) {}
};

struct MalformedCharacteristic : Error {
    explicit MalformedCharacteristic(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Raised when candidate eigenvalue polynomials cannot be split over the
// working field; carries printable factor strings for reporting.
struct UnsplitEigenvalues : Error {
    std::vector<std::string> factors;
    explicit UnsplitEigenvalues(std::vector<std::string> fs)
        : Error("eigenvalues outside the working field; unsplit factors present"),
          factors(std::move(fs)) {}
};

// Internal consistency failure: a mathematically guaranteed invariant did
// not hold, which indicates a bug rather than bad input.
struct InternalCheckFailure : Error {
    explicit InternalCheckFailure(const std::string& what)
        : Error("internal check failed: " + what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalCheckFailure(what);
}

}  // namespace relkit

#endif
