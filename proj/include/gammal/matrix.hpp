#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gammal/automorphism.hpp"
#include "gammal/scalar.hpp"

namespace gammal {

/// Dense matrix over the exact ground field. Row-major. Used both for group
/// elements (square, invertible) and for echelon-form subspace bases.
class ScalarMatrix {
public:
    ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    static ScalarMatrix identity(const CycloCtxPtr& ctx, std::size_t n);
    static ScalarMatrix zero(const CycloCtxPtr& ctx, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    CycloCtxPtr context() const { return e_.empty() ? nullptr : e_[0].context(); }
    unsigned conductor() const { return e_.empty() ? 0 : e_[0].conductor(); }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

    bool is_identity() const;
    std::string key() const;
    std::string display() const; // "[a, b; c, d]" rows separated by ';'

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Reduced row echelon form; returns the RREF, its rank, and pivot columns.
struct Echelon {
    ScalarMatrix rref;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};
Echelon echelon_form(ScalarMatrix m);

bool is_invertible(const ScalarMatrix& m);

/// Inverse of a square invertible matrix via Gauss-Jordan.
ScalarMatrix matrix_inverse(const ScalarMatrix& m);

/// Basis of the right kernel {v : m v = 0}, rows in canonical RREF.
/// Empty rows() means the kernel is trivial.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m);

/// Apply a field automorphism entrywise.
ScalarMatrix apply_entrywise(const FieldAutomorphism& sigma, const ScalarMatrix& m);

/// Canonical subspace representation: RREF of the span of the given rows,
/// with zero rows dropped. Two spans are equal iff these agree.
ScalarMatrix row_space_canonical(const ScalarMatrix& rows);

/// Matrix-vector product m * v (v as column).
std::vector<Scalar> apply_to_vector(const ScalarMatrix& m, const std::vector<Scalar>& v);

} // namespace gammal
