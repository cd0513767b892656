#include "pqderiv/derivation.hpp"

#include "pqderiv/polynomial.hpp"

#include <sstream>

namespace pqderiv {

DerivationKind DerivationKind::pq(long p, long q) { return {Variant::PQ, p, q}; }

DerivationKind DerivationKind::jordan_pq(long p, long q) { return {Variant::JordanPQ, p, q}; }

void DerivationKind::validate() const {
    if (variant == Variant::PQ || variant == Variant::JordanPQ) {
        if (p < 0 || q < 0) throw InvalidKind("p and q must be non-negative");
        if (p == q) throw InvalidKind("p = q is not a valid (p,q) kind; use the ordinary kind");
        if (p + q == 0) throw InvalidKind("p + q must be positive");
    }
}

std::pair<long, long> DerivationKind::weights() const {
    switch (variant) {
        case Variant::Ordinary: return {1, 1};
        case Variant::Left:
        case Variant::JordanLeft: return {0, 1};
        case Variant::Right:
        case Variant::JordanRight: return {1, 0};
        case Variant::PQ:
        case Variant::JordanPQ: return {p, q};
    }
    throw InvalidKind("unknown variant");
}

std::string DerivationKind::str() const {
    std::ostringstream os;
    switch (variant) {
        case Variant::Ordinary: return "ordinary";
        case Variant::Left: return "left";
        case Variant::Right: return "right";
        case Variant::JordanLeft: return "jordan_left";
        case Variant::JordanRight: return "jordan_right";
        case Variant::PQ: os << "pq(" << p << "," << q << ")"; return os.str();
        case Variant::JordanPQ: os << "jordan(" << p << "," << q << ")"; return os.str();
    }
    return "?";
}

bool DerivationSpace::contains(const LinearMap& d) const {
    std::vector<Vec> flats;
    for (const auto& b : basis) flats.push_back(b.flat());
    return Subspace::span(algebra_dim * algebra_dim, flats).contains(d.flat());
}

Matrix assemble_constraints(const Algebra& a, const DerivationKind& kind) {
    kind.validate();
    const std::size_t n = a.dim();
    const auto [p, q] = kind.weights();
    const Rat sum(p + q), twop(2 * p), twoq(2 * q);
    // Unknown u[r*n + c] = D[r][c], with d(e_j) = sum_r D[r][j] e_r.
    std::vector<Vec> rows;
    auto add_pair_rows = [&](std::size_t i, std::size_t j, bool symmetrize) {
        for (std::size_t l = 0; l < n; ++l) {
            Vec row(n * n);
            auto product_terms = [&](std::size_t x, std::size_t y) {
                // (p+q) d(e_x e_y)|_l - 2p (d(e_x) e_y)|_l - 2q (e_x d(e_y))|_l
                for (std::size_t k = 0; k < n; ++k)
                    if (a.sc(x, y, k) != 0) row[l * n + k] += sum * a.sc(x, y, k);
                for (std::size_t m = 0; m < n; ++m) {
                    if (a.sc(m, y, l) != 0) row[m * n + x] -= twop * a.sc(m, y, l);
                    if (a.sc(x, m, l) != 0) row[m * n + y] -= twoq * a.sc(x, m, l);
                }
            };
            product_terms(i, j);
            if (symmetrize) product_terms(j, i);
            if (!vec_is_zero(row)) rows.push_back(std::move(row));
        }
    };
    if (kind.is_jordan()) {
        // Linearized squared identity on unordered basis pairs; over char 0
        // this is equivalent to the identity on all squares.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) add_pair_rows(i, j, true);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) add_pair_rows(i, j, false);
    }
    Matrix m(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c) m.at(r, c) = rows[r][c];
    return m;
}

DerivationSpace solve_space(const Algebra& a, const DerivationKind& kind) {
    const std::size_t n = a.dim();
    const Subspace sol = nullspace(assemble_constraints(a, kind));
    DerivationSpace space{kind, n, {}};
    for (const auto& v : sol.basis()) {
        Matrix d(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) d.at(r, c) = v[r * n + c];
        if (!check_identity(a, d, kind))
            throw std::logic_error("solved map fails the identity oracle on algebra '" +
                                   a.name() + "', kind " + kind.str());
        space.basis.push_back(std::move(d));
    }
    return space;
}

bool check_identity(const Algebra& a, const LinearMap& d, const DerivationKind& kind) {
    kind.validate();
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n)
        throw std::invalid_argument("map dimension mismatch in check_identity");
    const auto [p, q] = kind.weights();
    const Rat sum(p + q), twop(2 * p), twoq(2 * q);
    auto holds_on = [&](const Element& x, const Element& y) {
        const Element lhs = vec_scale(sum, d.apply(multiply(a, x, y)));
        const Element rhs = vec_add(vec_scale(twop, multiply(a, d.apply(x), y)),
                                    vec_scale(twoq, multiply(a, x, d.apply(y))));
        return lhs == rhs;
    };
    if (kind.is_jordan()) {
        // Squared identity on basis elements plus the symmetrized identity on
        // all pairs (the char-0 linearization).
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const Element x = a.basis_element(i), y = a.basis_element(j);
                const Element lhs = vec_scale(
                    sum, d.apply(vec_add(multiply(a, x, y), multiply(a, y, x))));
                Element rhs = vec_add(vec_scale(twop, multiply(a, d.apply(x), y)),
                                      vec_scale(twoq, multiply(a, x, d.apply(y))));
                rhs = vec_add(rhs, vec_scale(twop, multiply(a, d.apply(y), x)));
                rhs = vec_add(rhs, vec_scale(twoq, multiply(a, y, d.apply(x))));
                if (lhs != rhs) return false;
            }
        return true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!holds_on(a.basis_element(i), a.basis_element(j))) return false;
    return true;
}

std::pair<Element, Element> leibniz_iterate(const Algebra& a, const LinearMap& d,
                                            const Element& a1, const Element& a2, unsigned n,
                                            long p, long q) {
    if (n < 1) throw InvalidKind("leibniz_iterate needs n >= 1");
    if (p == q || p + q <= 0 || p < 0 || q < 0)
        throw InvalidKind("leibniz_iterate needs distinct non-negative p, q with p + q > 0");
    // Iterated images d^k(a1), d^k(a2) for k = 0..n.
    std::vector<Element> da1{a1}, da2{a2};
    for (unsigned k = 1; k <= n; ++k) {
        da1.push_back(d.apply(da1.back()));
        da2.push_back(d.apply(da2.back()));
    }
    Element lhs = multiply(a, a1, a2);
    for (unsigned k = 0; k < n; ++k) lhs = d.apply(lhs);
    Element rhs = a.zero();
    for (unsigned k = 0; k <= n; ++k) {
        const Rat coeff = Rat(binomial(n, k)) * rat_pow(Rat(p), n - k) * rat_pow(Rat(q), k);
        if (coeff == 0) continue;
        rhs = vec_add(rhs, vec_scale(coeff, multiply(a, da1[n - k], da2[k])));
    }
    rhs = vec_scale(rat_pow(Rat(2), n) / rat_pow(Rat(p + q), n), rhs);
    return {lhs, rhs};
}

Rat lemma1_coefficient(unsigned n, long p, long q) {
    if (n < 1) throw std::invalid_argument("lemma1_coefficient needs n >= 1");
    if (p + q <= 0) throw std::invalid_argument("lemma1_coefficient needs p + q > 0");
    const unsigned e1 = (n * n + n - 2) / 2;
    const unsigned e2 = (n * n - n) / 2;
    return Rat(factorial(n)) * rat_pow(Rat(2) / Rat(p + q), e1) * rat_pow(Rat(q), e2) *
           rat_pow(Rat(p), n - 1);
}

bool lemma1_membership(const Algebra& a, const LinearMap& d, const Ideal& ideal,
                       const Element& iota, unsigned n, long p, long q) {
    if (!ideal.space.contains(iota)) throw IotaNotInIdeal("iota does not lie in the ideal");
    Element lhs = element_power(a, iota, n);
    for (unsigned k = 0; k < n; ++k) lhs = d.apply(lhs);
    const Element diota_pow = element_power(a, d.apply(iota), n);
    const Element diff = vec_sub(lhs, vec_scale(lemma1_coefficient(n, p, q), diota_pow));
    return ideal.space.contains(diff);
}

CompositionInfo compose_and_classify(const Algebra& a, const LinearMap& d1, const LinearMap& d2) {
    const std::size_t n = a.dim();
    if (d1.rows() != n || d1.cols() != n || d2.rows() != n || d2.cols() != n)
        throw std::invalid_argument("map dimension mismatch in compose_and_classify");
    CompositionInfo info{d1 * d2, false, Subspace(n)};
    info.is_ordinary_derivation = check_identity(a, info.composition, DerivationKind::ordinary());
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < n; ++c) cols.push_back(info.composition.col(c));
    info.range = Subspace::span(n, cols);
    return info;
}

std::vector<std::pair<Rat, Subspace>> rational_eigenpairs(const LinearMap& d) {
    if (!d.is_square()) throw std::invalid_argument("eigenpairs of non-square matrix");
    const std::size_t n = d.rows();
    std::vector<std::pair<Rat, Subspace>> pairs;
    const Poly p = char_poly(d);
    for (const auto& [lambda, mult] : rational_roots(p)) {
        Subspace es = nullspace(d - Matrix::identity(n).scaled(lambda));
        pairs.emplace_back(lambda, std::move(es));
    }
    return pairs;
}

}  // namespace pqderiv
