#pragma once

#include "pqderiv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace pqderiv {

using Vec = std::vector<Rat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Dense exact rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rat& c) const;
    Matrix transpose() const;
    Rat trace() const;
    Vec apply(const Vec& v) const;

    /// Row r as a vector.
    Vec row(std::size_t r) const;
    /// Column c as a vector.
    Vec col(std::size_t c) const;

    /// Entries flattened row-major.
    const std::vector<Rat>& flat() const { return a_; }

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct Echelon {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Reduced row echelon form; first-nonzero pivot selection in column order.
Echelon row_reduce(Matrix m);

class Subspace;

/// Exact null space {v : m v = 0} as a canonical subspace.
Subspace nullspace(const Matrix& m);

/// One solution of m x = b with all free variables set to zero, or nothing.
/// The solution is canonical under the deterministic elimination order.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);

}  // namespace pqderiv
