#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqderiv/constructors.hpp"
#include "pqderiv/structure.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

using namespace pqderiv;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("named builtins have the expected dimensions and structure") {
    CHECK(builtin("full_matrix", 2).dim() == 4);
    CHECK(builtin("full_matrix", 3).dim() == 9);
    CHECK(builtin("upper_triangular", 3).dim() == 6);
    CHECK(builtin("strictly_upper_triangular", 3).dim() == 3);
    CHECK(builtin("truncated_polynomial", 5).dim() == 4);
    CHECK(builtin("paper_example").dim() == 2);
    CHECK(builtin("annihilator_model").dim() == 2);
    // "name(param)" spelling resolves identically.
    CHECK(builtin("upper_triangular(3)").structure() ==
          builtin("upper_triangular", 3).structure());
    CHECK_THROWS_AS(builtin("no_such_algebra"), UnknownBuiltin);
    CHECK_THROWS_AS(builtin("truncated_polynomial", 1), std::invalid_argument);
}

TEST_CASE("the two-dimensional model multiplies as a*a = a^2, a^2 annihilates") {
    const Algebra a = builtin("paper_example");
    CHECK(multiply(a, a.basis_element(0), a.basis_element(0)) == a.basis_element(1));
    CHECK(vec_is_zero(multiply(a, a.basis_element(0), a.basis_element(1))));
    CHECK(vec_is_zero(multiply(a, a.basis_element(1), a.basis_element(0))));
    CHECK(vec_is_zero(multiply(a, a.basis_element(1), a.basis_element(1))));
}

TEST_CASE("the right-identity model multiplies as specified") {
    const Algebra a = builtin("annihilator_model");  // basis e, r
    const Element e = a.basis_element(0), r = a.basis_element(1);
    CHECK(multiply(a, e, e) == e);
    CHECK(multiply(a, r, e) == r);
    CHECK(vec_is_zero(multiply(a, e, r)));
    CHECK(vec_is_zero(multiply(a, r, r)));
}

TEST_CASE("bundled group tables validate and build group algebras") {
    for (const std::string& name : bundled_group_names()) {
        const CayleyTable t = bundled_group(name);
        CHECK_NOTHROW(t.validate());
        const Algebra a = group_algebra(t);
        CHECK(a.dim() == t.order);
        const auto one = find_unit(a);
        REQUIRE(one.has_value());
        CHECK(*one == a.basis_element(t.identity));
    }
    CHECK(bundled_group("s3").order == 6);
    CHECK(bundled_group("q8").order == 8);
    CHECK_THROWS_AS(bundled_group("s5"), UnknownBuiltin);
}

TEST_CASE("corrupted Cayley tables are rejected with a witness") {
    CayleyTable t = bundled_group("c3");
    SUBCASE("breaking the Latin-square property") {
        t.table[1][1] = t.table[1][0];
        try {
            t.validate();
            FAIL("expected NotAGroup");
        } catch (const NotAGroup& e) {
            CHECK(std::string(e.what()).find("row") != std::string::npos);
        }
    }
    SUBCASE("breaking associativity") {
        // Swap two entries to keep rows Latin but break (ab)c = a(bc).
        std::swap(t.table[1][1], t.table[1][2]);
        std::swap(t.table[2][1], t.table[2][2]);
        CHECK_THROWS_AS(t.validate(), NotAGroup);
    }
    SUBCASE("breaking the identity") {
        t.identity = 1;
        CHECK_THROWS_AS(t.validate(), NotAGroup);
    }
}

TEST_CASE("direct sums multiply componentwise") {
    const Algebra a = builtin("paper_example");
    const Algebra b = builtin("full_matrix", 2);
    const Algebra s = direct_sum(a, b);
    CHECK(s.dim() == 6);
    // Cross terms vanish.
    CHECK(vec_is_zero(multiply(s, s.basis_element(0), s.basis_element(3))));
    // Left summand keeps its own multiplication: a * a = a^2.
    CHECK(multiply(s, s.basis_element(0), s.basis_element(0)) == s.basis_element(1));
    CHECK(radical(s).space.dim() == radical(a).space.dim() + radical(b).space.dim());
}

TEST_CASE("the default catalog is nonempty, valid, and uniquely named") {
    const auto catalog = default_catalog();
    CHECK(catalog.size() >= 12);
    std::set<std::string> names;
    for (const Algebra& a : catalog) {
        CHECK(a.dim() >= 1);
        CHECK(names.insert(a.name()).second);
    }
}

TEST_CASE("algebra JSON round trip is exact") {
    for (const char* name : {"full_matrix(2)", "paper_example", "annihilator_model"}) {
        const Algebra a = builtin(name);
        const Algebra back = algebra_from_json(algebra_to_json(a));
        CHECK(back.name() == a.name());
        CHECK(back.basis_labels() == a.basis_labels());
        CHECK(back.structure() == a.structure());
        CHECK(back.metadata() == a.metadata());
        // Serialization is deterministic: same algebra, same bytes.
        CHECK(algebra_to_json(a).dump() == algebra_to_json(back).dump());
    }
}

TEST_CASE("rational structure constants survive the round trip") {
    std::vector<Rat> c(8);
    c[(0 * 2 + 0) * 2 + 1] = Rat(22, 7);  // x*x = (22/7) y, all else zero
    const Algebra a("frac", {"x", "y"}, c);
    const Algebra back = algebra_from_json(algebra_to_json(a));
    CHECK(back.sc(0, 0, 1) == Rat(22, 7));
}

TEST_CASE("Cayley JSON round trip is exact") {
    const CayleyTable t = bundled_group("d4");
    const CayleyTable back = cayley_from_json(cayley_to_json(t));
    CHECK(back.order == t.order);
    CHECK(back.identity == t.identity);
    CHECK(back.table == t.table);
    CHECK(back.labels == t.labels);
}

TEST_CASE("file save/load round trip") {
    TempFile f("pqderiv_test_algebra.json");
    const Algebra a = builtin("upper_triangular", 2);
    save_algebra(f.path, a);
    const Algebra back = load_algebra(f.path);
    CHECK(back.structure() == a.structure());

    TempFile g("pqderiv_test_group.json");
    save_cayley(g.path, bundled_group("s3"));
    CHECK(group_algebra(load_cayley(g.path)).dim() == 6);
}

TEST_CASE("malformed inputs raise ParseError") {
    TempFile f("pqderiv_test_bad.json");
    {
        std::ofstream out(f.path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_algebra(f.path), ParseError);
    {
        std::ofstream out(f.path);
        out << R"({"name":"x","dim":2,"labels":["a","b"],"structure":[{"i":0,"j":0,"k":1,"c":"1/0"}]})";
    }
    CHECK_THROWS(load_algebra(f.path));
}

TEST_CASE("resolve_algebra accepts names, builtin specs, groups, and files") {
    CHECK(resolve_algebra("paper_example").dim() == 2);
    CHECK(resolve_algebra("full_matrix(3)").dim() == 9);
    CHECK(resolve_algebra("q8").dim() == 8);
    TempFile f("pqderiv_test_resolve.json");
    save_algebra(f.path, builtin("truncated_polynomial", 3));
    CHECK(resolve_algebra(f.path.string()).dim() == 2);
    CHECK_THROWS(resolve_algebra("definitely_missing"));
}
