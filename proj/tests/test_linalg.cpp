#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqderiv/matrix.hpp"
#include "pqderiv/polynomial.hpp"
#include "pqderiv/subspace.hpp"

#include <random>

using namespace pqderiv;

namespace {

Matrix mat(std::size_t rows, std::size_t cols, std::vector<long> entries) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rat(entries[r * cols + c]);
    return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> dist(-5, 5);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Rat(dist(rng));
    return m;
}

}  // namespace

TEST_CASE("rational parsing and arithmetic helpers") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK(binomial(4, 2) == Int(6));
    CHECK(factorial(5) == Int(120));
    CHECK(rat_pow(Rat(0), 0) == Rat(1));
    CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
}

TEST_CASE("row reduction produces a canonical reduced echelon form") {
    // Rank-1 matrix [[1,2],[2,4]]: RREF is [[1,2],[0,0]].
    const auto e = row_reduce(mat(2, 2, {1, 2, 2, 4}));
    CHECK(e.rank == 1);
    REQUIRE(e.pivots == std::vector<std::size_t>{0});
    CHECK(e.rref.at(0, 0) == Rat(1));
    CHECK(e.rref.at(0, 1) == Rat(2));
    CHECK(e.rref.at(1, 0) == Rat(0));
    CHECK(e.rref.at(1, 1) == Rat(0));
}

TEST_CASE("nullspace vectors are canonical and satisfy the system") {
    const Matrix m = mat(2, 2, {1, 2, 2, 4});
    const Subspace ns = nullspace(m);
    REQUIRE(ns.dim() == 1);
    // Free column scaled so the leading nonzero entry is 1: (1, -1/2)
    // after canonicalization of span{(-2, 1)}.
    const Vec v = ns.basis()[0];
    CHECK(vec_is_zero(m.apply(v)));
    CHECK(ns.contains(Vec{Rat(-2), Rat(1)}));
    CHECK_FALSE(ns.contains(Vec{Rat(1), Rat(1)}));
}

TEST_CASE("rank-nullity holds for random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const Matrix m = random_matrix(rng, n);
        const auto e = row_reduce(m);
        const Subspace ns = nullspace(m);
        CHECK(e.rank + ns.dim() == n);
        for (const auto& v : ns.basis()) CHECK(vec_is_zero(m.apply(v)));
    }
}

TEST_CASE("solve_linear finds an exact solution or reports none") {
    const Matrix m = mat(2, 2, {1, 1, 0, 1});
    const auto x = solve_linear(m, Vec{Rat(3), Rat(1)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{Rat(2), Rat(1)});
    // Inconsistent system.
    const Matrix s = mat(2, 2, {1, 2, 2, 4});
    CHECK_FALSE(solve_linear(s, Vec{Rat(1), Rat(1)}).has_value());
}

TEST_CASE("subspace membership, sum, and intersection") {
    const Subspace a = Subspace::span(2, {Vec{Rat(1), Rat(0)}});
    const Subspace b = Subspace::span(2, {Vec{Rat(1), Rat(1)}});
    CHECK(a.dim() == 1);
    CHECK(subspace_sum(a, b).dim() == 2);
    CHECK(subspace_intersect(a, b).is_zero());

    const Subspace c = Subspace::span(3, {Vec{Rat(1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(1), Rat(0)}});
    const Subspace d = Subspace::span(3, {Vec{Rat(0), Rat(1), Rat(0)}, Vec{Rat(0), Rat(0), Rat(1)}});
    const Subspace meet = subspace_intersect(c, d);
    REQUIRE(meet.dim() == 1);
    CHECK(meet.contains(Vec{Rat(0), Rat(1), Rat(0)}));
    CHECK(c.contains(meet));
    CHECK(d.contains(meet));
}

TEST_CASE("spans are canonical: equal subspaces give equal bases") {
    const Subspace a = Subspace::span(2, {Vec{Rat(2), Rat(4)}, Vec{Rat(1), Rat(2)}});
    const Subspace b = Subspace::span(2, {Vec{Rat(-3), Rat(-6)}});
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
}

TEST_CASE("characteristic polynomial satisfies Cayley-Hamilton up to dim 8") {
    std::mt19937 rng(11);
    for (std::size_t n = 1; n <= 8; ++n) {
        const Matrix m = random_matrix(rng, n);
        const Poly p = char_poly(m);
        CHECK(p.degree() == static_cast<long>(n));
        CHECK(p.leading() == Rat(1));
        CHECK(poly_at_matrix(p, m).is_zero());
    }
}

TEST_CASE("char poly of a diagonal matrix has the diagonal as roots") {
    Matrix m(3, 3);
    m.at(0, 0) = Rat(1);
    m.at(1, 1) = Rat(2);
    m.at(2, 2) = Rat(2);
    const auto roots = rational_roots(char_poly(m));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::pair{Rat(1), 1});
    CHECK(roots[1] == std::pair{Rat(2), 2});
}

TEST_CASE("polynomial division and gcd") {
    const Poly x = Poly::x();
    const Poly p = (x * x - Poly::constant(Rat(1))) * (x + Poly::constant(Rat(2)));
    const auto [quot, rem] = p.divmod(x + Poly::constant(Rat(2)));
    CHECK(rem.degree() == -1);
    CHECK(quot == x * x - Poly::constant(Rat(1)));
    const Poly g = poly_gcd(p, x * x - Poly::constant(Rat(1)));
    CHECK(g == (x * x - Poly::constant(Rat(1))).monic());
    const auto [gg, u, v] = poly_xgcd(x + Poly::constant(Rat(1)), x - Poly::constant(Rat(1)));
    CHECK(gg == Poly::constant(Rat(1)));
    CHECK(u * (x + Poly::constant(Rat(1))) + v * (x - Poly::constant(Rat(1))) == gg);
}

TEST_CASE("factorization recovers known factors and expands back") {
    const Poly x = Poly::x();
    SUBCASE("x^2 - 1 splits into linear factors") {
        const auto fs = factor_polynomial(x * x - Poly::constant(Rat(1)));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].second == 1);
        CHECK(fs[1].second == 1);
    }
    SUBCASE("x^3 - 1 = (x - 1)(x^2 + x + 1)") {
        const auto fs = factor_polynomial(x * x * x - Poly::constant(Rat(1)));
        REQUIRE(fs.size() == 2);
        const bool has_quadratic =
            fs[0].first.degree() == 2 || fs[1].first.degree() == 2;
        CHECK(has_quadratic);
    }
    SUBCASE("x^2 + 1 is irreducible over Q") {
        const auto fs = factor_polynomial(x * x + Poly::constant(Rat(1)));
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first.degree() == 2);
        CHECK(fs[0].second == 1);
    }
    SUBCASE("x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2), a root-free quartic") {
        const Poly p = x * x * x * x + Poly::constant(Rat(4));
        const auto fs = factor_polynomial(p);
        REQUIRE(fs.size() == 2);
        Poly prod = Poly::constant(Rat(1));
        for (const auto& [f, mult] : fs)
            for (int i = 0; i < mult; ++i) prod = prod * f;
        CHECK(prod.monic() == p.monic());
    }
    SUBCASE("repeated factors carry multiplicities") {
        const Poly p = (x - Poly::constant(Rat(3))) * (x - Poly::constant(Rat(3))) *
                       (x * x + Poly::constant(Rat(1)));
        const auto fs = factor_polynomial(p);
        REQUIRE(fs.size() == 2);
        int total = 0;
        Poly prod = Poly::constant(Rat(1));
        for (const auto& [f, mult] : fs) {
            total += mult * static_cast<int>(f.degree());
            for (int i = 0; i < mult; ++i) prod = prod * f;
        }
        CHECK(total == 4);
        CHECK(prod.monic() == p.monic());
    }
    SUBCASE("degree cap is enforced") {
        Poly big = Poly::constant(Rat(1));
        for (int i = 0; i < 13; ++i) big = big * x;
        big = big + Poly::constant(Rat(1));
        CHECK_THROWS_AS(factor_polynomial(big, 12), DegreeCapExceeded);
    }
}

TEST_CASE("squarefree decomposition separates multiplicities") {
    const Poly x = Poly::x();
    const Poly p = (x - Poly::constant(Rat(1))) * (x - Poly::constant(Rat(1))) *
                   (x + Poly::constant(Rat(2)));
    const auto parts = squarefree_decomposition(p);
    Poly prod = Poly::constant(Rat(1));
    for (const auto& [f, mult] : parts)
        for (int i = 0; i < mult; ++i) prod = prod * f;
    CHECK(prod.monic() == p.monic());
}
