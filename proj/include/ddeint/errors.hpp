#ifndef DDEINT_ERRORS_HPP
#define DDEINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ddeint {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInterval : Error {
    explicit InvalidInterval(const std::string& m) : Error("invalid interval: " + m) {}
};
struct DivisionByZeroInterval : Error {
    DivisionByZeroInterval() : Error("division by an interval containing zero") {}
};
struct EmptyIntersection : Error {
    EmptyIntersection() : Error("empty interval intersection") {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse error: " + m) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& m) : Error("dimension mismatch: " + m) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& m) : Error("index out of range: " + m) {}
};
struct OrderTooLow : Error {
    explicit OrderTooLow(const std::string& m) : Error("order too low: " + m) {}
};
struct EnclosureFailure : Error {
    explicit EnclosureFailure(const std::string& m) : Error("rough enclosure failed: " + m) {}
};
struct EpsilonOutOfRange : Error {
    explicit EpsilonOutOfRange(const std::string& m) : Error("epsilon out of range: " + m) {}
};
struct TransversalityFailure : Error {
    explicit TransversalityFailure(const std::string& m) : Error("transversality failed: " + m) {}
};
struct NoCrossing : Error {
    explicit NoCrossing(const std::string& m) : Error("no section crossing: " + m) {}
};
struct RegularityGateViolated : Error {
    explicit RegularityGateViolated(const std::string& m) : Error("regularity gate violated: " + m) {}
};
struct InclusionFailed : Error {
    explicit InclusionFailed(const std::string& m) : Error("inclusion failed: " + m) {}
};
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& m) : Error("no convergence: " + m) {}
};
struct SingularJacobian : Error {
    explicit SingularJacobian(const std::string& m) : Error("singular jacobian: " + m) {}
};
struct EigSolverFailure : Error {
    explicit EigSolverFailure(const std::string& m) : Error("eigensolver failure: " + m) {}
};
struct Eigenvalue1Missing : Error {
    explicit Eigenvalue1Missing(const std::string& m) : Error("no eigenvalue near 1: " + m) {}
};
struct DegenerateNormal : Error {
    explicit DegenerateNormal(const std::string& m) : Error("degenerate section normal: " + m) {}
};
struct NoInvariance : Error {
    explicit NoInvariance(const std::string& m) : Error("no invariant set found: " + m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error("io error: " + m) {}
};

} // namespace ddeint

#endif
