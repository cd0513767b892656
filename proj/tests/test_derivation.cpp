#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqderiv/constructors.hpp"
#include "pqderiv/derivation.hpp"

using namespace pqderiv;

namespace {

// Commutator derivation ad_x = L_x - R_x.
LinearMap ad(const Algebra& a, const Element& x) {
    return left_rep(a, x) - right_rep(a, x);
}

}  // namespace

TEST_CASE("kind validation") {
    CHECK_THROWS_AS(DerivationKind::pq(1, 1).validate(), InvalidKind);
    CHECK_THROWS_AS(DerivationKind::pq(0, 0).validate(), InvalidKind);
    CHECK_THROWS_AS(DerivationKind::pq(-1, 2).validate(), InvalidKind);
    CHECK_THROWS_AS(DerivationKind::jordan_pq(2, 2).validate(), InvalidKind);
    CHECK_NOTHROW(DerivationKind::pq(0, 1).validate());
    CHECK_NOTHROW(DerivationKind::pq(1, 3).validate());
    CHECK(DerivationKind::ordinary().weights() == std::pair<long, long>{1, 1});
    CHECK(DerivationKind::left().weights() == std::pair<long, long>{0, 1});
    CHECK(DerivationKind::right().weights() == std::pair<long, long>{1, 0});
    CHECK(DerivationKind::pq(1, 2).str() == "pq(1,2)");
    CHECK(DerivationKind::jordan_pq(1, 2).str() == "jordan(1,2)");
}

TEST_CASE("ordinary derivations of the 2x2 matrix algebra are inner") {
    const Algebra a = builtin("full_matrix", 2);
    const DerivationSpace space = solve_space(a, DerivationKind::ordinary());
    CHECK(space.dim() == 3);  // sl_2: inner derivations modulo the center
    for (std::size_t i = 0; i < a.dim(); ++i)
        CHECK(space.contains(ad(a, a.basis_element(i))));
}

TEST_CASE("semisimple algebras admit no (p,q)-derivations with p != q") {
    for (const char* name : {"c2", "c3", "q8"}) {
        const Algebra a = group_algebra(bundled_group(name));
        CHECK(solve_space(a, DerivationKind::pq(1, 2)).dim() == 0);
        CHECK(solve_space(a, DerivationKind::pq(0, 1)).dim() == 0);
    }
    CHECK(solve_space(builtin("full_matrix", 2), DerivationKind::pq(2, 1)).dim() == 0);
}

TEST_CASE("the two-dimensional model algebra has a 2-dim space for every kind") {
    const Algebra a = builtin("paper_example");
    for (const DerivationKind& k :
         {DerivationKind::pq(0, 1), DerivationKind::pq(1, 0), DerivationKind::pq(1, 2),
          DerivationKind::pq(2, 1), DerivationKind::pq(1, 3), DerivationKind::ordinary()}) {
        const DerivationSpace space = solve_space(a, k);
        CHECK(space.dim() == 2);
    }
}

TEST_CASE("the diagonal scaling d(a)=lambda a, d(a^2)=2 lambda a^2 is a member") {
    const Algebra a = builtin("paper_example");
    const DerivationSpace space = solve_space(a, DerivationKind::pq(3, 7));
    for (const Rat& lambda : {Rat(1), Rat(5), Rat(-3, 2)}) {
        LinearMap d(2, 2);
        d.at(0, 0) = lambda;
        d.at(1, 1) = 2 * lambda;
        CHECK(space.contains(d));
        CHECK(check_identity(a, d, DerivationKind::pq(3, 7)));
    }
}

TEST_CASE("left kind coincides with the (0,1) product kind") {
    for (const char* name : {"paper_example", "upper_triangular(3)", "annihilator_model"}) {
        const Algebra a = builtin(name);
        const DerivationSpace l = solve_space(a, DerivationKind::left());
        const DerivationSpace pq01 = solve_space(a, DerivationKind::pq(0, 1));
        CHECK(l.dim() == pq01.dim());
        for (const auto& d : l.basis) CHECK(pq01.contains(d));
        const DerivationSpace r = solve_space(a, DerivationKind::right());
        const DerivationSpace pq10 = solve_space(a, DerivationKind::pq(1, 0));
        CHECK(r.dim() == pq10.dim());
        for (const auto& d : r.basis) CHECK(pq10.contains(d));
    }
}

TEST_CASE("the identity oracle rejects maps outside the space") {
    const Algebra a = builtin("full_matrix", 2);
    LinearMap not_a_derivation = Matrix::identity(4);
    CHECK_FALSE(check_identity(a, not_a_derivation, DerivationKind::ordinary()));
    CHECK(check_identity(a, ad(a, a.basis_element(1)), DerivationKind::ordinary()));
    CHECK_FALSE(check_identity(a, ad(a, a.basis_element(1)), DerivationKind::pq(1, 2)));
}

TEST_CASE("Jordan kinds contain the product kinds") {
    for (const char* name : {"paper_example", "upper_triangular(2)", "annihilator_model"}) {
        const Algebra a = builtin(name);
        for (long pp : {0L, 1L, 2L}) {
            for (long qq : {0L, 1L, 2L, 3L}) {
                if (pp == qq || pp + qq <= 0) continue;
                const DerivationSpace product = solve_space(a, DerivationKind::pq(pp, qq));
                const DerivationSpace jordan = solve_space(a, DerivationKind::jordan_pq(pp, qq));
                CHECK(jordan.dim() >= product.dim());
                for (const auto& d : product.basis) CHECK(jordan.contains(d));
            }
        }
    }
}

TEST_CASE("Jordan space of the annihilator model is zero") {
    const Algebra a = builtin("annihilator_model");
    CHECK(solve_space(a, DerivationKind::jordan_pq(1, 2)).dim() == 0);
    CHECK(solve_space(a, DerivationKind::pq(1, 2)).dim() == 0);
}

TEST_CASE("iterated Leibniz expansion matches direct iteration") {
    const Algebra a = builtin("paper_example");
    LinearMap d(2, 2);
    d.at(0, 0) = Rat(1);
    d.at(1, 1) = Rat(2);
    REQUIRE(check_identity(a, d, DerivationKind::pq(1, 2)));
    const Element x = a.basis_element(0);
    for (unsigned n = 1; n <= 4; ++n) {
        const auto [lhs, rhs] = leibniz_iterate(a, d, x, x, n, 1, 2);
        CHECK(lhs == rhs);
    }
    // Concrete value: d^2(a*a) = d^2(a^2) = 4 a^2.
    const auto [lhs2, rhs2] = leibniz_iterate(a, d, x, x, 2, 1, 2);
    CHECK(lhs2 == Element{Rat(0), Rat(4)});
}

TEST_CASE("closed-form power coefficient") {
    // n = 1: every exponent is zero, so the coefficient is 1 for any kind.
    CHECK(lemma1_coefficient(1, 1, 2) == Rat(1));
    CHECK(lemma1_coefficient(1, 0, 1) == Rat(1));
    CHECK(lemma1_coefficient(2, 1, 2) == Rat(16, 9));
    CHECK(lemma1_coefficient(2, 1, 1) == Rat(2));
    CHECK(lemma1_coefficient(3, 2, 1) == Rat(256, 81));
    // p = 0 and n >= 2 kill the p^(n-1) factor; so does q = 0.
    CHECK(lemma1_coefficient(2, 0, 1) == Rat(0));
    CHECK(lemma1_coefficient(2, 1, 0) == Rat(0));
}

TEST_CASE("power-difference membership in an ideal") {
    const Algebra a = builtin("paper_example");
    LinearMap d(2, 2);
    d.at(0, 0) = Rat(1);
    d.at(1, 1) = Rat(2);
    const Element iota = a.basis_element(0);
    // The whole algebra is an ideal of itself (it is nilpotent), and every
    // power difference lands in it.
    const Ideal full = make_ideal(a, Subspace::full(2));
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(lemma1_membership(a, d, full, iota, n, 1, 2));
    // iota must actually lie in the ideal.
    const Ideal zero = make_ideal(a, Subspace(2));
    CHECK_THROWS_AS(lemma1_membership(a, d, zero, iota, 1, 1, 2), IotaNotInIdeal);

    // A genuine failure: in the right-identity model take I = span{r}, iota = r,
    // and a map sending r to e. Then iota^2 = 0 but d(iota)^2 = e, so the n = 2
    // difference is -(16/9) e, which is outside I.
    const Algebra b = builtin("annihilator_model");
    LinearMap m(2, 2);
    m.at(0, 1) = Rat(1);  // d(r) = e, d(e) = 0
    const Ideal span_r = make_ideal(b, Subspace::span(2, {b.basis_element(1)}));
    CHECK(lemma1_membership(b, m, span_r, b.basis_element(1), 1, 1, 2));
    CHECK_FALSE(lemma1_membership(b, m, span_r, b.basis_element(1), 2, 1, 2));
}

TEST_CASE("composition of derivations is classified correctly") {
    const Algebra a = builtin("full_matrix", 2);
    const LinearMap d1 = ad(a, a.basis_element(1));  // ad e12
    const LinearMap d2 = ad(a, a.basis_element(2));  // ad e21
    const CompositionInfo info = compose_and_classify(a, d1, d2);
    CHECK(info.composition == d1 * d2);
    CHECK_FALSE(info.is_ordinary_derivation);
    CHECK(info.range.dim() >= 1);
    // A derivation composed with the zero map is the zero map, a derivation.
    const CompositionInfo z = compose_and_classify(a, d1, LinearMap(4, 4));
    CHECK(z.is_ordinary_derivation);
    CHECK(z.range.is_zero());
}

TEST_CASE("rational eigenpairs of the diagonal model map") {
    LinearMap d(2, 2);
    d.at(0, 0) = Rat(1);
    d.at(1, 1) = Rat(2);
    const auto pairs = rational_eigenpairs(d);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].first == Rat(1));
    CHECK(pairs[0].second.contains(Vec{Rat(1), Rat(0)}));
    CHECK(pairs[1].first == Rat(2));
    CHECK(pairs[1].second.contains(Vec{Rat(0), Rat(1)}));
}

TEST_CASE("solve_space result satisfies the oracle on every basis map") {
    for (const char* name : {"upper_triangular(3)", "truncated_polynomial(4)"}) {
        const Algebra a = builtin(name);
        for (const DerivationKind& k : {DerivationKind::pq(1, 2), DerivationKind::ordinary(),
                                        DerivationKind::jordan_pq(2, 1)}) {
            const DerivationSpace s = solve_space(a, k);
            for (const auto& d : s.basis) CHECK(check_identity(a, d, k));
        }
    }
}
