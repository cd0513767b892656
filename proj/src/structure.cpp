#include "pqderiv/structure.hpp"

#include "pqderiv/polynomial.hpp"

#include <algorithm>
#include <random>

namespace pqderiv {

namespace {

// Trace-form radical without the self-verification pass.
Subspace radical_space(const Algebra& a) {
    const std::size_t n = a.dim();
    if (n == 0) return Subspace(0);
    const Unitization u = unitization(a);
    const std::size_t m = u.algebra.dim();
    // Gram matrix of (x, y) -> trace(L_{xy}) on the unitization.
    std::vector<Matrix> lreps;
    for (std::size_t i = 0; i < m; ++i) lreps.push_back(left_rep(u.algebra, u.algebra.basis_element(i)));
    Matrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Element prod = multiply(u.algebra, u.algebra.basis_element(i),
                                          u.algebra.basis_element(j));
            Rat t = 0;
            for (std::size_t k = 0; k < m; ++k)
                if (prod[k] != 0) t += prod[k] * lreps[k].trace();
            gram.at(i, j) = t;
        }
    const Subspace kernel = nullspace(gram);
    // Intersect back into A = span of the first n coordinates.
    std::vector<Vec> coords;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(m);
        v[i] = 1;
        coords.push_back(std::move(v));
    }
    const Subspace inter = subspace_intersect(kernel, Subspace::span(m, coords));
    std::vector<Vec> cut;
    for (const auto& v : inter.basis()) cut.emplace_back(v.begin(), v.begin() + n);
    return Subspace::span(n, cut);
}

// Smallest m with S^m = 0 for an ideal subspace known to be nilpotent.
std::optional<unsigned> nilpotency_exponent(const Algebra& a, const Subspace& s, unsigned cap) {
    if (s.is_zero()) return 1;
    Subspace power = s;
    for (unsigned m = 1; m <= cap; ++m) {
        if (power.is_zero()) return m;
        std::vector<Vec> next;
        for (const auto& x : power.basis())
            for (const auto& y : s.basis()) next.push_back(multiply(a, x, y));
        power = Subspace::span(a.dim(), next);
    }
    return std::nullopt;
}

}  // namespace

Ideal radical(const Algebra& a) {
    const Subspace r = radical_space(a);
    Ideal ideal = make_ideal(a, r);
    if (!nilpotency_exponent(a, r, static_cast<unsigned>(a.dim()) + 1))
        throw std::logic_error("trace-form radical of '" + a.name() + "' is not nilpotent");
    // Maximality: the quotient must have zero trace-radical.
    if (r.dim() < a.dim()) {
        const QuotientAlgebra q = quotient(a, ideal);
        if (!radical_space(q.quotient).is_zero())
            throw std::logic_error("quotient by trace-form radical of '" + a.name() +
                                   "' is not semisimple");
    }
    return ideal;
}

Nilradical nilradical(const Algebra& a) {
    Ideal r = radical(a);
    const auto m = nilpotency_exponent(a, r.space, static_cast<unsigned>(a.dim()) + 1);
    return Nilradical{std::move(r), *m};
}

Ideal ideal_closure(const Algebra& a, const std::vector<Element>& generators) {
    Subspace s = Subspace::span(a.dim(), generators);
    for (;;) {
        std::vector<Vec> vs = s.basis();
        for (const auto& v : s.basis())
            for (std::size_t i = 0; i < a.dim(); ++i) {
                vs.push_back(multiply(a, a.basis_element(i), v));
                vs.push_back(multiply(a, v, a.basis_element(i)));
            }
        Subspace next = Subspace::span(a.dim(), vs);
        if (next.dim() == s.dim()) return make_ideal(a, next);
        s = std::move(next);
    }
}

QuotientAlgebra quotient(const Algebra& a, const Ideal& ideal) {
    if (!is_ideal(a, ideal.space))
        throw NotAnIdeal("quotient requires a two-sided ideal of '" + a.name() + "'");
    const std::size_t n = a.dim();
    const auto& piv = ideal.space.pivots();
    std::vector<std::size_t> complement;  // lexicographically earliest coordinates
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) complement.push_back(c);
    const std::size_t m = complement.size();
    Matrix proj(m, n), sect(n, m);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec red = ideal.space.reduce(a.basis_element(j));
        for (std::size_t k = 0; k < m; ++k) proj.at(k, j) = red[complement[k]];
    }
    for (std::size_t k = 0; k < m; ++k) sect.at(complement[k], k) = 1;
    std::vector<Rat> c(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Element prod =
                multiply(a, a.basis_element(complement[i]), a.basis_element(complement[j]));
            const Vec img = proj.apply(prod);
            for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = img[k];
        }
    std::vector<std::string> labels;
    for (auto k : complement) labels.push_back(a.basis_labels()[k] + "~");
    Algebra q(a.name() + "/I", std::move(labels), std::move(c));
    return QuotientAlgebra{std::move(q), ideal, std::move(proj), std::move(sect)};
}

bool is_semiprime(const Algebra& a) { return nilradical(a).ideal.space.is_zero(); }

namespace {

// Minimal polynomial of a central element z of a unital algebra: the least
// linear dependency among the powers unit, z, z^2, ...
Poly minimal_polynomial(const Algebra& s, const Element& unit, const Element& z) {
    const std::size_t n = s.dim();
    std::vector<Element> powers{unit};
    for (;;) {
        powers.push_back(multiply(s, powers.back(), z));
        // Dependency  sum_k x_k z^k = 0  with x_deg = 1?
        const std::size_t cnt = powers.size();
        Matrix m(n, cnt - 1);
        Vec b(n);
        for (std::size_t k = 0; k + 1 < cnt; ++k)
            for (std::size_t i = 0; i < n; ++i) m.at(i, k) = powers[k][i];
        for (std::size_t i = 0; i < n; ++i) b[i] = -powers.back()[i];
        if (auto x = solve_linear(m, b)) {
            std::vector<Rat> coeffs = *x;
            coeffs.push_back(1);
            return Poly(std::move(coeffs));
        }
        if (cnt > n + 1) throw std::logic_error("minimal polynomial search did not terminate");
    }
}

}  // namespace

BlockDecomposition primitive_ideals(const Algebra& a, int degree_cap, std::uint64_t seed,
                                    int max_retries) {
    BlockDecomposition out;
    const Nilradical nil = nilradical(a);
    if (nil.ideal.space.dim() == a.dim()) return out;  // A = rad(A): no primitive ideals
    const QuotientAlgebra q = quotient(a, nil.ideal);
    const Algebra& s = q.quotient;
    const auto unit = find_unit(s);
    if (!unit) throw std::logic_error("semisimple quotient of '" + a.name() + "' has no unit");
    const Subspace z = center(s);

    // Separating central element: canonical central basis vectors first, then
    // seeded random small combinations.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::optional<Element> sep;
    Poly minpoly;
    for (int attempt = 0; attempt < max_retries + static_cast<int>(z.dim()); ++attempt) {
        Element cand(s.dim());
        if (attempt < static_cast<int>(z.dim())) {
            cand = z.basis()[attempt];
        } else {
            for (const auto& v : z.basis()) cand = vec_add(cand, vec_scale(Rat(coeff(rng)), v));
        }
        if (vec_is_zero(cand)) continue;
        const Poly mp = minimal_polynomial(s, *unit, cand);
        if (mp.degree() != static_cast<int>(z.dim())) continue;
        if (poly_gcd(mp, mp.derivative()).degree() != 0) continue;  // not squarefree
        sep = std::move(cand);
        minpoly = mp;
        break;
    }
    if (!sep)
        throw SeparatingElementNotFound("no separating central element found for '" + a.name() +
                                        "' within the retry budget");

    const auto factors = factor_polynomial(minpoly, degree_cap);
    for (const auto& [f, mult] : factors) {
        // Primitive central idempotent e_i = (u_i * F_i)(sep) with
        // u_i * F_i + v * f_i = 1.
        const Poly fi = f.monic();
        const Poly cofactor = minpoly.divmod(fi).first;
        auto [g, u, v] = poly_xgcd(cofactor, fi);
        if (g.degree() != 0) throw std::logic_error("idempotent lifting failed: gcd not constant");
        const Poly ei_poly = (u * cofactor).divmod(minpoly).second;
        // Evaluate at sep inside s.
        Element e = s.zero();
        Element power = *unit;
        for (std::size_t k = 0; k <= static_cast<std::size_t>(ei_poly.degree()); ++k) {
            e = vec_add(e, vec_scale(ei_poly.coeff(k), power));
            power = multiply(s, power, *sep);
        }
        if (multiply(s, e, e) != e) throw std::logic_error("lifted element is not idempotent");
        // Block = S e, its dimension.
        std::vector<Vec> block_vs;
        for (std::size_t i = 0; i < s.dim(); ++i)
            block_vs.push_back(multiply(s, s.basis_element(i), e));
        const Subspace block = Subspace::span(s.dim(), block_vs);
        out.blocks.emplace_back(e, block.dim());

        // Primitive ideal of A: {x : pi(x) e = 0}.
        const Matrix cond = right_rep(s, e) * q.projection;
        Ideal p = make_ideal(a, nullspace(cond));
        // Certify A/P simple: every nonzero basis class generates the whole quotient.
        const QuotientAlgebra ap = quotient(a, p);
        for (std::size_t i = 0; i < ap.quotient.dim(); ++i) {
            const Ideal gen = ideal_closure(ap.quotient, {ap.quotient.basis_element(i)});
            if (gen.space.dim() != ap.quotient.dim())
                throw std::logic_error("quotient by computed primitive ideal is not simple");
        }
        out.primitive_ideals.push_back(std::move(p));
    }

    // Orthogonality and completeness of the idempotents.
    Element total = s.zero();
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        total = vec_add(total, out.blocks[i].first);
        for (std::size_t j = 0; j < out.blocks.size(); ++j)
            if (i != j && !vec_is_zero(multiply(s, out.blocks[i].first, out.blocks[j].first)))
                throw std::logic_error("central idempotents are not orthogonal");
    }
    if (total != *unit) throw std::logic_error("central idempotents do not sum to the unit");
    return out;
}

bool check_ideal_invariance(const Algebra& a, const LinearMap& d, const Ideal& ideal) {
    if (d.rows() != a.dim() || d.cols() != a.dim())
        throw std::invalid_argument("map dimension mismatch in check_ideal_invariance");
    for (const auto& v : ideal.space.basis())
        if (!ideal.space.contains(d.apply(v))) return false;
    return true;
}

}  // namespace pqderiv
