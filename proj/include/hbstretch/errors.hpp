#pragma once

#include <stdexcept>
#include <string>

namespace hbstretch {

/// Base class for all domain errors. `code()` is the stable machine-readable
/// identifier emitted by the CLI; `what()` carries the human detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct InvalidMatrixError : Error {
    explicit InvalidMatrixError(const std::string& d)
        : Error("invalid_matrix", d) {}
};

struct NotFullyIrreducibleError : Error {
    explicit NotFullyIrreducibleError(const std::string& d)
        : Error("not_fully_irreducible", d) {}
};

struct IncomparableFieldsError : Error {
    explicit IncomparableFieldsError(const std::string& d)
        : Error("incomparable_fields", d) {}
};

struct NegativeRadicandError : Error {
    explicit NegativeRadicandError(const std::string& d)
        : Error("negative_radicand", d) {}
};

struct NoSignChangeError : Error {
    explicit NoSignChangeError(const std::string& d)
        : Error("no_sign_change", d) {}
};

struct PrecisionExhaustedError : Error {
    explicit PrecisionExhaustedError(const std::string& d)
        : Error("precision_exhausted", d) {}
};

struct BlockShapeViolationError : Error {
    explicit BlockShapeViolationError(const std::string& d)
        : Error("block_shape_violation", d) {}
};

struct NotPrimitiveError : Error {
    explicit NotPrimitiveError(const std::string& d)
        : Error("not_primitive", d) {}
};

struct RadiusTooSmallError : Error {
    explicit RadiusTooSmallError(const std::string& d)
        : Error("radius_too_small", d) {}
};

/// Raised when an internal consistency check fails (e.g. the glide
/// half-period symmetry); indicates a bug, never a bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& d)
        : Error("internal_error", d) {}
};

}  // namespace hbstretch
