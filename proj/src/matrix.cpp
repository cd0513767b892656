#include "pqderiv/matrix.hpp"
#include "pqderiv/subspace.hpp"

#include <stdexcept>

namespace pqderiv {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (const auto& x : r) a_.push_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::scaled(const Rat& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rat t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

Echelon row_reduce(Matrix m) {
    Echelon e;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && m.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        const Rat inv = Rat(1) / m.at(lead, col);
        for (std::size_t j = col; j < cols; ++j)
            if (m.at(lead, j) != 0) m.at(lead, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead) continue;
            const Rat f = m.at(r, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                if (m.at(lead, j) != 0) m.at(r, j) -= f * m.at(lead, j);
        }
        e.pivots.push_back(col);
        ++lead;
    }
    e.rank = e.pivots.size();
    e.rref = std::move(m);
    return e;
}

Subspace nullspace(const Matrix& m) {
    const Echelon e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> vs;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.rref.at(r, f);
        vs.push_back(std::move(v));
    }
    return Subspace::span(cols, vs);
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const Echelon e = row_reduce(std::move(aug));
    Vec x(m.cols());
    for (std::size_t r = 0; r < e.rank; ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;  // inconsistent
        x[e.pivots[r]] = e.rref.at(r, m.cols());
    }
    return x;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("spanning vector length mismatch");
    Matrix m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
    const Echelon e = row_reduce(std::move(m));
    Subspace s(ambient);
    for (std::size_t r = 0; r < e.rank; ++r) s.basis_.push_back(e.rref.row(r));
    s.pivots_ = e.pivots;
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v(ambient);
        v[i] = 1;
        vs.push_back(std::move(v));
    }
    return span(ambient, vs);
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Rat f = v[pivots_[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_[r][j] != 0) v[j] -= f * basis_[r][j];
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Vec> vs = a.basis();
    for (const auto& v : b.basis()) vs.push_back(v);
    return Subspace::span(a.ambient(), vs);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    const std::size_t n = a.ambient(), da = a.dim(), db = b.dim();
    // Columns are (alpha, beta); rows force  sum alpha_i a_i - sum beta_j b_j = 0.
    Matrix m(n, da + db);
    for (std::size_t j = 0; j < da; ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = a.basis()[j][i];
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, da + j) = -b.basis()[j][i];
    const Subspace ker = nullspace(m);
    std::vector<Vec> vs;
    for (const auto& ab : ker.basis()) {
        Vec v(n);
        for (std::size_t j = 0; j < da; ++j)
            if (ab[j] != 0) v = vec_add(v, vec_scale(ab[j], a.basis()[j]));
        vs.push_back(std::move(v));
    }
    return Subspace::span(n, vs);
}

}  // namespace pqderiv
