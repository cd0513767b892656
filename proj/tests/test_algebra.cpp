#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqderiv/algebra.hpp"
#include "pqderiv/constructors.hpp"

using namespace pqderiv;

namespace {

Element e(const Algebra& a, std::size_t i) { return a.basis_element(i); }

}  // namespace

TEST_CASE("non-associative structure constants are rejected at construction") {
    // dim 2 with x*x = y, x*y = x, rest zero: (xx)y = xy = x but x(xy) = xx = y.
    std::vector<Rat> c(8);
    c[(0 * 2 + 0) * 2 + 1] = 1;  // x*x = y
    c[(0 * 2 + 1) * 2 + 0] = 1;  // x*y = x
    CHECK_THROWS_AS(Algebra("bad", {"x", "y"}, c), std::invalid_argument);
}

TEST_CASE("multiplication matches the regular representations") {
    const Algebra a = builtin("full_matrix", 2);
    REQUIRE(a.dim() == 4);
    // Basis order e11, e12, e21, e22: e12 * e21 = e11.
    const Element p = multiply(a, e(a, 1), e(a, 2));
    CHECK(p == e(a, 0));
    CHECK(left_rep(a, e(a, 1)).apply(e(a, 2)) == p);
    CHECK(right_rep(a, e(a, 2)).apply(e(a, 1)) == p);
    // Left and right representations commute with each other's arguments:
    // L_x R_y = R_y L_x for all basis x, y (associativity restated).
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            CHECK(left_rep(a, e(a, i)) * right_rep(a, e(a, j)) ==
                  right_rep(a, e(a, j)) * left_rep(a, e(a, i)));
}

TEST_CASE("element powers are left-nested products") {
    const Algebra a = builtin("truncated_polynomial", 4);  // basis t, t^2, t^3
    CHECK(element_power(a, e(a, 0), 1) == e(a, 0));
    CHECK(element_power(a, e(a, 0), 2) == e(a, 1));
    CHECK(element_power(a, e(a, 0), 3) == e(a, 2));
    CHECK(vec_is_zero(element_power(a, e(a, 0), 4)));
}

TEST_CASE("center of the 2x2 matrix algebra is the scalars") {
    const Algebra a = builtin("full_matrix", 2);
    const Subspace z = center(a);
    REQUIRE(z.dim() == 1);
    CHECK(z.contains(vec_add(e(a, 0), e(a, 3))));
}

TEST_CASE("center of a commutative algebra is everything") {
    const Algebra a = group_algebra(bundled_group("c3"));
    CHECK(center(a).dim() == 3);
    CHECK(center(a).full(3) == center(a));
}

TEST_CASE("unitization adjoins a two-sided unit") {
    const Algebra a = builtin("strictly_upper_triangular", 3);
    const Unitization u = unitization(a);
    CHECK(u.algebra.dim() == a.dim() + 1);
    const Element one = u.algebra.basis_element(u.unit_index);
    for (std::size_t i = 0; i < u.algebra.dim(); ++i) {
        const Element x = u.algebra.basis_element(i);
        CHECK(multiply(u.algebra, one, x) == x);
        CHECK(multiply(u.algebra, x, one) == x);
    }
    // Embedded products agree with the original algebra.
    const Element xy = multiply(a, e(a, 0), e(a, 1));
    CHECK(embed_in_unitization(u, xy) ==
          multiply(u.algebra, embed_in_unitization(u, e(a, 0)),
                   embed_in_unitization(u, e(a, 1))));
}

TEST_CASE("unit and right identity detection") {
    SUBCASE("matrix algebra has a unit") {
        const Algebra a = builtin("full_matrix", 2);
        const auto one = find_unit(a);
        REQUIRE(one.has_value());
        CHECK(*one == vec_add(e(a, 0), e(a, 3)));
    }
    SUBCASE("strictly upper triangular has no one-sided identity") {
        const Algebra a = builtin("strictly_upper_triangular", 3);
        CHECK_FALSE(find_right_identity(a).has_value());
        CHECK_FALSE(find_unit(a).has_value());
    }
    SUBCASE("the annihilator model has a right identity but no unit") {
        const Algebra a = builtin("annihilator_model");
        const auto rid = find_right_identity(a);
        REQUIRE(rid.has_value());
        CHECK(*rid == e(a, 0));
        for (std::size_t i = 0; i < a.dim(); ++i)
            CHECK(multiply(a, e(a, i), *rid) == e(a, i));
        CHECK_FALSE(find_unit(a).has_value());
    }
}

TEST_CASE("quasi-inverse of a nilpotent element is -a - a^2 - ... and verifies") {
    const Algebra a = builtin("truncated_polynomial", 4);
    const Element t = e(a, 0);
    const auto b = quasi_inverse(a, t);
    REQUIRE(b.has_value());
    CHECK(multiply(a, t, *b) == vec_add(t, *b));
    CHECK(multiply(a, *b, t) == vec_add(t, *b));
    // b = -t(1-t)^{-1} = -t - t^2 - t^3 since t^4 = 0.
    CHECK(*b == Element{Rat(-1), Rat(-1), Rat(-1)});
}

TEST_CASE("idempotents have no quasi-inverse") {
    const Algebra a = builtin("annihilator_model");
    CHECK_FALSE(quasi_inverse(a, e(a, 0)).has_value());
}

TEST_CASE("nilpotency index is the smallest vanishing power") {
    const Algebra a = builtin("truncated_polynomial", 5);
    CHECK(nilpotency_index(a, e(a, 0), 10) == 5u);
    CHECK(nilpotency_index(a, e(a, 1), 10) == 3u);
    const Algebra m = builtin("full_matrix", 2);
    CHECK_FALSE(nilpotency_index(m, m.basis_element(0), 10).has_value());
}

TEST_CASE("right annihilator of the annihilator model is spanned by r") {
    const Algebra a = builtin("annihilator_model");
    const Ideal ann = right_annihilator(a);
    REQUIRE(ann.space.dim() == 1);
    CHECK(ann.space.contains(e(a, 1)));
}

TEST_CASE("ideal verification accepts ideals and rejects mere subspaces") {
    const Algebra a = builtin("upper_triangular", 2);  // basis e11, e12, e22
    const Subspace rad = Subspace::span(3, {e(a, 1)});
    CHECK(is_ideal(a, rad));
    CHECK_NOTHROW(make_ideal(a, rad));
    const Subspace not_ideal = Subspace::span(3, {e(a, 0)});
    CHECK_FALSE(is_ideal(a, not_ideal));
    CHECK_THROWS_AS(make_ideal(a, not_ideal), NotAnIdeal);
}

TEST_CASE("describe_element renders labelled combinations") {
    const Algebra a = builtin("paper_example");
    const std::string s = a.describe_element(Element{Rat(1), Rat(-2)});
    CHECK(s.find("a") != std::string::npos);
}
