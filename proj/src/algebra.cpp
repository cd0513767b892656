#include "pqderiv/algebra.hpp"

#include <sstream>

namespace pqderiv {

Algebra::Algebra(std::string name, std::vector<std::string> basis_labels,
                 std::vector<Rat> structure, std::map<std::string, std::string> metadata)
    : name_(std::move(name)),
      dim_(basis_labels.size()),
      labels_(std::move(basis_labels)),
      c_(std::move(structure)),
      metadata_(std::move(metadata)) {
    if (c_.size() != dim_ * dim_ * dim_)
        throw std::invalid_argument("structure constant grid has wrong size for algebra '" +
                                    name_ + "'");
    // Associativity: sum_m c[i][j][m] c[m][k][l] = sum_m c[j][k][m] c[i][m][l].
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                for (std::size_t l = 0; l < dim_; ++l) {
                    Rat lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < dim_; ++m) {
                        if (sc(i, j, m) != 0) lhs += sc(i, j, m) * sc(m, k, l);
                        if (sc(j, k, m) != 0) rhs += sc(j, k, m) * sc(i, m, l);
                    }
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "associativity fails in algebra '" << name_ << "' at basis triple ("
                           << i << "," << j << "," << k << "), coordinate " << l;
                        throw std::invalid_argument(os.str());
                    }
                }
}

Element Algebra::basis_element(std::size_t i) const {
    Element e(dim_);
    e.at(i) = 1;
    return e;
}

std::string Algebra::describe_element(const Element& x) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        if (!first) os << " + ";
        os << "(" << to_string(x[i]) << ")*" << labels_[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Element multiply(const Algebra& a, const Element& x, const Element& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("element dimension mismatch in multiply");
    Element r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rat xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (a.sc(i, j, k) != 0) r[k] += xy * a.sc(i, j, k);
        }
    }
    return r;
}

Element element_power(const Algebra& a, const Element& x, unsigned n) {
    if (n == 0) throw std::invalid_argument("element_power needs n >= 1");
    Element p = x;
    for (unsigned k = 1; k < n; ++k) p = multiply(a, p, x);
    return p;
}

Matrix left_rep(const Algebra& a, const Element& x) {
    const std::size_t n = a.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Element col = multiply(a, x, a.basis_element(j));
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Matrix right_rep(const Algebra& a, const Element& x) {
    const std::size_t n = a.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Element col = multiply(a, a.basis_element(j), x);
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Subspace center(const Algebra& a) {
    const std::size_t n = a.dim();
    // Unknown x with x*e_j = e_j*x for every j; rows indexed by (j, l).
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i)
                m.at(j * n + l, i) = a.sc(i, j, l) - a.sc(j, i, l);
    return nullspace(m);
}

Unitization unitization(const Algebra& a) {
    const std::size_t n = a.dim(), m = n + 1;
    std::vector<Rat> c(m * m * m);
    auto idx = [m](std::size_t i, std::size_t j, std::size_t k) { return (i * m + j) * m + k; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[idx(i, j, k)] = a.sc(i, j, k);
    for (std::size_t i = 0; i < m; ++i) {
        c[idx(n, i, i)] = 1;  // u * e_i = e_i
        if (i < n) c[idx(i, n, i)] = 1;  // e_i * u = e_i
    }
    std::vector<std::string> labels = a.basis_labels();
    labels.push_back("1");
    return Unitization{Algebra(a.name() + "^1", std::move(labels), std::move(c)), n};
}

Element embed_in_unitization(const Unitization& u, const Element& x) {
    Element e = x;
    e.resize(u.algebra.dim());
    return e;
}

namespace {

// Solve for E with e_i * E = e_i (right identity) or additionally E * e_i = e_i.
std::optional<Element> solve_identity(const Algebra& a, bool two_sided) {
    const std::size_t n = a.dim();
    if (n == 0) return std::nullopt;
    const std::size_t rows = two_sided ? 2 * n * n : n * n;
    Matrix m(rows, n);
    Vec b(rows);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t j = 0; j < n; ++j) m.at(i * n + l, j) = a.sc(i, j, l);
            b[i * n + l] = (i == l) ? 1 : 0;
            if (two_sided) {
                for (std::size_t j = 0; j < n; ++j) m.at(n * n + i * n + l, j) = a.sc(j, i, l);
                b[n * n + i * n + l] = (i == l) ? 1 : 0;
            }
        }
    return solve_linear(m, b);
}

}  // namespace

std::optional<Element> find_right_identity(const Algebra& a) { return solve_identity(a, false); }

std::optional<Element> find_unit(const Algebra& a) { return solve_identity(a, true); }

std::optional<Element> quasi_inverse(const Algebra& a, const Element& x) {
    const std::size_t n = a.dim();
    if (x.size() != n) throw std::invalid_argument("element dimension mismatch");
    // (L_x - I) b = x and (R_x - I) b = x.
    const Matrix l = left_rep(a, x) - Matrix::identity(n);
    const Matrix r = right_rep(a, x) - Matrix::identity(n);
    Matrix m(2 * n, n);
    Vec b(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = l.at(i, j);
            m.at(n + i, j) = r.at(i, j);
        }
    for (std::size_t i = 0; i < n; ++i) b[i] = b[n + i] = x[i];
    auto sol = solve_linear(m, b);
    if (!sol) return std::nullopt;
    // Re-verify the defining equations exactly.
    const Element ab = multiply(a, x, *sol), ba = multiply(a, *sol, x);
    const Element apb = vec_add(x, *sol);
    if (ab != apb || ba != apb) return std::nullopt;
    return sol;
}

std::optional<unsigned> nilpotency_index(const Algebra& a, const Element& x, unsigned cap) {
    if (cap < 1) throw std::invalid_argument("nilpotency cap must be >= 1");
    Element p = x;
    for (unsigned n = 1; n <= cap; ++n) {
        if (vec_is_zero(p)) return n;
        p = multiply(a, p, x);
    }
    return std::nullopt;
}

bool is_ideal(const Algebra& a, const Subspace& s) {
    if (s.ambient() != a.dim()) return false;
    for (const auto& v : s.basis())
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (!s.contains(multiply(a, a.basis_element(i), v))) return false;
            if (!s.contains(multiply(a, v, a.basis_element(i)))) return false;
        }
    return true;
}

Ideal make_ideal(const Algebra& a, const Subspace& s) {
    if (!is_ideal(a, s))
        throw NotAnIdeal("subspace is not a two-sided ideal of algebra '" + a.name() + "'");
    return Ideal{s};
}

Ideal right_annihilator(const Algebra& a) {
    const std::size_t n = a.dim();
    // gamma with e_i * gamma = 0 for all i; rows (i, l), columns j.
    Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t j = 0; j < n; ++j) m.at(i * n + l, j) = a.sc(i, j, l);
    return make_ideal(a, nullspace(m));
}

}  // namespace pqderiv
