#pragma once

#include "jetkit/rational.hpp"

#include <cstddef>
#include <optional>

namespace jetkit {

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    // Stacks `below` under this matrix; column counts must agree.
    [[nodiscard]] Matrix stacked(const Matrix& below) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

[[nodiscard]] std::size_t rank(Matrix m);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct Solution {
    SolveStatus status;
    Matrix x;  // meaningful only when status == unique
};

// Solves a X = b exactly by Gauss-Jordan elimination. `a` may have more
// rows than columns; the system is unique only when rank(a) = a.cols() and
// every extra equation is consistent.
[[nodiscard]] Solution solve(const Matrix& a, const Matrix& b);

}  // namespace jetkit
