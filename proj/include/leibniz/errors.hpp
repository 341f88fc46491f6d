#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : InputError {
    DivisionByZero() : InputError("division by zero") {}
};

struct MixedFieldContext : InputError {
    MixedFieldContext() : InputError("mixed field contexts in one operation") {}
};

struct ShapeMismatch : InputError {
    explicit ShapeMismatch(const std::string& msg) : InputError("shape mismatch: " + msg) {}
};

struct SingularMatrix : InputError {
    int rank;
    explicit SingularMatrix(int rank_found)
        : InputError("singular matrix (rank " + std::to_string(rank_found) + ")"), rank(rank_found) {}
};

struct AllocationGuard : InputError {
    explicit AllocationGuard(const std::string& msg) : InputError(msg) {}
};

struct CarrierMismatch : InputError {
    CarrierMismatch() : InputError("multilinear maps live on different carriers") {}
};

struct InvalidAlgebra : InputError {
    explicit InvalidAlgebra(const std::string& msg) : InputError(msg) {}
};

struct InvalidRepresentation : InputError {
    explicit InvalidRepresentation(const std::string& msg) : InputError(msg) {}
};

struct InvalidQuadratic : InputError {
    explicit InvalidQuadratic(const std::string& msg) : InputError(msg) {}
};

struct NotARotaBaxterOperator : InputError {
    NotARotaBaxterOperator() : InputError("operator fails the Rota-Baxter identity") {}
};

struct NotAMatchedPair : InputError {
    NotAMatchedPair() : InputError("data fails the matched-pair conditions") {}
};

struct NotABialgebra : InputError {
    NotABialgebra() : InputError("pair fails the bialgebra conditions") {}
};

struct NotDendriform : InputError {
    NotDendriform() : InputError("products fail the dendriform axioms") {}
};

struct SingularK : InputError {
    SingularK() : InputError("operator is not invertible") {}
};

struct SingularRSharp : InputError {
    SingularRSharp() : InputError("r is degenerate") {}
};

struct SearchSpaceTooLarge : InputError {
    explicit SearchSpaceTooLarge(const std::string& msg) : InputError(msg) {}
};

struct UnknownFixture : InputError {
    explicit UnknownFixture(const std::string& name) : InputError("unknown fixture: " + name) {}
};

}  // namespace leibniz

#endif
