#ifndef QGDEF_ERRORS_HPP
#define QGDEF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgdef {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidParametersError : Error {
    explicit InvalidParametersError(const std::string& msg) : Error(msg) {}
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& msg) : Error(msg) {}
};

struct ZeroDenominatorPolynomialError : Error {
    explicit ZeroDenominatorPolynomialError(const std::string& msg) : Error(msg) {}
};

struct WeightBelowTwoError : Error {
    explicit WeightBelowTwoError(const std::string& msg) : Error(msg) {}
};

struct UnknownVertexError : Error {
    explicit UnknownVertexError(const std::string& msg) : Error(msg) {}
};

struct SelfLoopForbiddenError : Error {
    explicit SelfLoopForbiddenError(const std::string& msg) : Error(msg) {}
};

struct NotNegativeDefiniteError : Error {
    explicit NotNegativeDefiniteError(const std::string& msg) : Error(msg) {}
};

struct NotAChainError : Error {
    explicit NotAChainError(const std::string& msg) : Error(msg) {}
};

struct AmbiguousAnchorError : Error {
    explicit AmbiguousAnchorError(const std::string& msg) : Error(msg) {}
};

struct OutOfCatalogError : Error {
    explicit OutOfCatalogError(const std::string& msg) : Error(msg) {}
};

struct RoleRequiredError : Error {
    explicit RoleRequiredError(const std::string& msg) : Error(msg) {}
};

struct SltNotPresentableError : Error {
    explicit SltNotPresentableError(const std::string& msg) : Error(msg) {}
};

struct RequiresGraphError : Error {
    explicit RequiresGraphError(const std::string& msg) : Error(msg) {}
};

struct OracleUnavailableError : Error {
    explicit OracleUnavailableError(const std::string& msg) : Error(msg) {}
};

struct IndeterminateLimitError : Error {
    explicit IndeterminateLimitError(const std::string& msg) : Error(msg) {}
};

// Germ file syntax error, carries the offending line number.
struct GermParseError : Error {
    int line;
    GermParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace qgdef

#endif
