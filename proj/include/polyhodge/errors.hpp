#ifndef POLYHODGE_ERRORS_HPP
#define POLYHODGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyhodge {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& msg = "empty input") : Error(msg) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};
struct DimensionOutOfRange : Error {
    explicit DimensionOutOfRange(const std::string& msg) : Error(msg) {}
};
struct UnsupportedSpec : Error {
    explicit UnsupportedSpec(const std::string& msg) : Error(msg) {}
};
struct NotAComplex : Error {
    explicit NotAComplex(const std::string& msg) : Error(msg) {}
};
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& msg) : Error(msg) {}
};
struct NonIntegralVertices : Error {
    explicit NonIntegralVertices(const std::string& msg) : Error(msg) {}
};
struct DegreeNotBounded : Error {
    explicit DegreeNotBounded(const std::string& msg) : Error(msg) {}
};
struct DegreeUnsupported : Error {
    explicit DegreeUnsupported(const std::string& msg) : Error(msg) {}
};
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};
struct UnknownName : Error {
    explicit UnknownName(const std::string& msg) : Error(msg) {}
};

}  // namespace polyhodge

#endif
