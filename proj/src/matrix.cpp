#include "gammal/matrix.hpp"

#include <sstream>

namespace gammal {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        fail(errc::validation_error, "matrix entry count does not match shape");
    for (const auto& x : e_)
        if (x.conductor() != e_[0].conductor())
            fail(errc::conductor_mismatch, "matrix entries over mixed conductors");
}

ScalarMatrix ScalarMatrix::identity(const CycloCtxPtr& ctx, std::size_t n) {
    std::vector<Scalar> e(n * n, Scalar::zero(ctx));
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Scalar::one(ctx);
    return ScalarMatrix(n, n, std::move(e));
}

ScalarMatrix ScalarMatrix::zero(const CycloCtxPtr& ctx, std::size_t rows, std::size_t cols) {
    return ScalarMatrix(rows, cols, std::vector<Scalar>(rows * cols, Scalar::zero(ctx)));
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) fail(errc::validation_error, "matrix product shape mismatch");
    ScalarMatrix out = ScalarMatrix::zero(a.context(), a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) = out.at(i, j) + aik * bkj;
            }
        }
    return out;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

bool ScalarMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

std::string ScalarMatrix::key() const {
    std::ostringstream os;
    os << 'M' << rows_ << 'x' << cols_ << ':';
    for (const auto& x : e_) os << x.key();
    return os.str();
}

std::string ScalarMatrix::display() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).display();
        }
    }
    os << ']';
    return os.str();
}

Echelon echelon_form(ScalarMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return Echelon{std::move(m), row, std::move(pivots)};
}

bool is_invertible(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) return false;
    return echelon_form(m).rank == m.rows();
}

ScalarMatrix matrix_inverse(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) fail(errc::validation_error, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    auto ctx = m.context();
    // [m | I] -> RREF -> [I | m^-1]
    ScalarMatrix aug = ScalarMatrix::zero(ctx, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(ctx);
    }
    Echelon ech = echelon_form(std::move(aug));
    if (ech.rank != n || ech.pivots.back() >= n)
        fail(errc::validation_error, "matrix is singular");
    ScalarMatrix out = ScalarMatrix::zero(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = ech.rref.at(i, n + j);
    return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m) {
    auto ctx = m.context();
    Echelon ech = echelon_form(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(n, Scalar::zero(ctx));
        v[free_col] = Scalar::one(ctx);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v[ech.pivots[r]] = -ech.rref.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

ScalarMatrix apply_entrywise(const FieldAutomorphism& sigma, const ScalarMatrix& m) {
    if (sigma.is_identity()) return m;
    std::vector<Scalar> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(sigma(m.at(i, j)));
    return ScalarMatrix(m.rows(), m.cols(), std::move(out));
}

ScalarMatrix row_space_canonical(const ScalarMatrix& rows) {
    Echelon ech = echelon_form(rows);
    std::vector<Scalar> kept;
    kept.reserve(ech.rank * rows.cols());
    for (std::size_t i = 0; i < ech.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) kept.push_back(ech.rref.at(i, j));
    return ScalarMatrix(ech.rank, rows.cols(), std::move(kept));
}

std::vector<Scalar> apply_to_vector(const ScalarMatrix& m, const std::vector<Scalar>& v) {
    if (v.size() != m.cols()) fail(errc::validation_error, "matrix-vector shape mismatch");
    std::vector<Scalar> out(m.rows(), Scalar::zero(m.context()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] = out[i] + m.at(i, j) * v[j];
        }
    return out;
}

} // namespace gammal
