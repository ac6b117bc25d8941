#include "jetkit/linalg.hpp"

#include "jetkit/errors.hpp"

#include <utility>

namespace jetkit {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw InvariantError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix Matrix::stacked(const Matrix& below) const
{
    if (cols_ != below.cols_) throw InvariantError("stacked matrices need equal column counts");
    Matrix out(rows_ + below.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t r = 0; r < below.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(rows_ + r, c) = below(r, c);
    return out;
}

namespace {

// Reduces [a | b] in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& a, Matrix& b)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
            for (std::size_t c = 0; c < b.cols(); ++c) std::swap(b(pivot, c), b(row, c));
        }
        const Rational inv = 1 / a(row, col);
        for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t c = 0; c < b.cols(); ++c) b(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (a(row, c) != 0) a(r, c) -= factor * a(row, c);
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b(row, c) != 0) b(r, c) -= factor * b(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix m)
{
    Matrix none(m.rows(), 0);
    return eliminate(m, none).size();
}

Solution solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows()) throw InvariantError("solve: row count mismatch");
    Matrix lhs = a;
    Matrix rhs = b;
    const auto pivots = eliminate(lhs, rhs);
    for (std::size_t r = pivots.size(); r < rhs.rows(); ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c)
            if (rhs(r, c) != 0) return {SolveStatus::inconsistent, {}};
    if (pivots.size() != a.cols()) return {SolveStatus::underdetermined, {}};
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[r], c) = rhs(r, c);
    return {SolveStatus::unique, std::move(x)};
}

}  // namespace jetkit
