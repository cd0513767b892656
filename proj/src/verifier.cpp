#include "pqderiv/verifier.hpp"

#include "pqderiv/polynomial.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace pqderiv {

using nlohmann::json;

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

CheckResult CheckResult::pass(std::string check, std::string algebra, std::string kind,
                              std::string details) {
    return {std::move(check), std::move(algebra), std::move(kind), CheckStatus::Pass, nullptr,
            std::move(details)};
}

CheckResult CheckResult::fail(std::string check, std::string algebra, std::string kind,
                              json witness, std::string details) {
    if (witness.is_null()) throw std::logic_error("fail result requires a witness");
    return {std::move(check), std::move(algebra), std::move(kind), CheckStatus::Fail,
            std::move(witness), std::move(details)};
}

CheckResult CheckResult::skipped(std::string check, std::string algebra, std::string kind,
                                 std::string reason) {
    if (reason.empty()) throw std::logic_error("skipped result requires a reason");
    return {std::move(check), std::move(algebra), std::move(kind), CheckStatus::Skipped, nullptr,
            std::move(reason)};
}

void VerificationReport::add(CheckResult r) {
    switch (r.status) {
        case CheckStatus::Pass: ++passed; break;
        case CheckStatus::Fail: ++failed; break;
        case CheckStatus::Skipped: ++skipped; break;
    }
    results.push_back(std::move(r));
}

json VerificationReport::to_json() const {
    json rs = json::array();
    for (const auto& r : results)
        rs.push_back({{"check", r.check},
                      {"algebra", r.algebra},
                      {"kind", r.kind},
                      {"status", to_string(r.status)},
                      {"witness", r.witness},
                      {"details", r.details}});
    return json{{"version", version},
                {"results", rs},
                {"totals", {{"pass", passed}, {"fail", failed}, {"skipped", skipped}}}};
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    for (const auto& r : results) {
        os << "[" << to_string(r.status) << "] " << r.check << " | " << r.algebra;
        if (!r.kind.empty()) os << " | " << r.kind;
        if (!r.details.empty()) os << " | " << r.details;
        os << "\n";
    }
    os << "totals: pass=" << passed << " fail=" << failed << " skipped=" << skipped << "\n";
    return os.str();
}

json linear_map_to_json(const LinearMap& d) {
    json rows = json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(to_string(d.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json element_to_json(const Element& x) {
    json v = json::array();
    for (const auto& c : x) v.push_back(to_string(c));
    return v;
}

const std::vector<std::string>& check_catalog() {
    static const std::vector<std::string> ids{
        "singer_wermer",        "semisimple_trivial", "left_derivation_radical",
        "primitive_invariance", "eigen_cube_zero",    "eigen_quasi_inverse",
        "eigen_empty_unital",   "right_identity_trivial", "leibniz_formula",
        "lemma1_ideal",         "jordan_containment", "habb_analogue",
        "posner_creedon"};
    return ids;
}

namespace {

constexpr const char* kEmptySpaceNote = "trivially: empty derivation space";
constexpr const char* kRationalEigenNote = "rational eigenvalues only";

struct Cache {
    std::map<std::string, DerivationSpace> spaces;
    std::map<std::string, Nilradical> nilradicals;

    const DerivationSpace& space(const Algebra& a, const DerivationKind& kind) {
        const std::string key = a.name() + "#" + kind.str();
        auto it = spaces.find(key);
        if (it == spaces.end()) it = spaces.emplace(key, solve_space(a, kind)).first;
        return it->second;
    }
    const Nilradical& nil(const Algebra& a) {
        auto it = nilradicals.find(a.name());
        if (it == nilradicals.end()) it = nilradicals.emplace(a.name(), nilradical(a)).first;
        return it->second;
    }
};

Subspace range_of(const Algebra& a, const std::vector<LinearMap>& maps) {
    std::vector<Vec> cols;
    for (const auto& d : maps)
        for (std::size_t c = 0; c < a.dim(); ++c) cols.push_back(d.col(c));
    return Subspace::span(a.dim(), cols);
}

bool product_kind(const DerivationKind& k) {
    return k.variant == Variant::PQ || k.variant == Variant::Left || k.variant == Variant::Right;
}

bool jordan_kind(const DerivationKind& k) { return k.is_jordan(); }

CheckResult need_product_kind(const std::string& id, const Algebra& a, const DerivationKind& k) {
    return CheckResult::skipped(id, a.name(), k.str(), "check requires a (p,q) product kind");
}

CheckResult need_jordan_kind(const std::string& id, const Algebra& a, const DerivationKind& k) {
    return CheckResult::skipped(id, a.name(), k.str(), "check requires a Jordan (p,q) kind");
}

std::string dim_note(const DerivationSpace& s) {
    return "derivation space dim " + std::to_string(s.dim());
}

CheckResult check_singer_wermer(const Algebra& a, const DerivationKind& kind, Cache& cache) {
    const auto& space = cache.space(a, kind);
    const auto& nil = cache.nil(a).ideal.space;
    if (space.dim() == 0)
        return CheckResult::pass("singer_wermer", a.name(), kind.str(), kEmptySpaceNote);
    for (std::size_t m = 0; m < space.dim(); ++m)
        for (std::size_t c = 0; c < a.dim(); ++c) {
            const Vec col = space.basis[m].col(c);
            if (!nil.contains(col))
                return CheckResult::fail(
                    "singer_wermer", a.name(), kind.str(),
                    json{{"map", linear_map_to_json(space.basis[m])},
                         {"image", element_to_json(col)}},
                    "image of basis vector escapes nil(A)");
        }
    return CheckResult::pass("singer_wermer", a.name(), kind.str(),
                             dim_note(space) + "; range contained in nil(A) of dim " +
                                 std::to_string(nil.dim()));
}

CheckResult check_semisimple_trivial(const Algebra& a, const DerivationKind& kind, Cache& cache) {
    if (!cache.nil(a).ideal.space.is_zero())
        return CheckResult::skipped("semisimple_trivial", a.name(), kind.str(),
                                    "hypothesis fails: radical is nonzero");
    const auto& space = cache.space(a, kind);
    if (space.dim() != 0)
        return CheckResult::fail("semisimple_trivial", a.name(), kind.str(),
                                 json{{"map", linear_map_to_json(space.basis[0])}},
                                 "nonzero (p,q)-derivation on a semisimple algebra");
    return CheckResult::pass("semisimple_trivial", a.name(), kind.str(),
                             "semisimple and derivation space dim 0");
}

CheckResult check_left_derivation_radical(const Algebra& a, Cache& cache) {
    const DerivationKind left = DerivationKind::left();
    const auto& space = cache.space(a, left);
    if (space.dim() == 0)
        return CheckResult::pass("left_derivation_radical", a.name(), left.str(), kEmptySpaceNote);
    const Subspace range = range_of(a, space.basis);
    const auto& rad = cache.nil(a).ideal.space;
    if (!rad.contains(range))
        return CheckResult::fail("left_derivation_radical", a.name(), left.str(),
                                 json{{"range_basis", element_to_json(range.basis()[0])}},
                                 "left-derivation range escapes rad(A)");
    return CheckResult::pass("left_derivation_radical", a.name(), left.str(),
                             dim_note(space) + "; range inside rad(A)");
}

CheckResult check_primitive_invariance(const Algebra& a, const DerivationKind& kind, Cache& cache,
                                       const VerifyOptions& opts) {
    BlockDecomposition blocks;
    try {
        blocks = primitive_ideals(a, opts.factor_degree_cap, opts.seed);
    } catch (const DegreeCapExceeded& e) {
        return CheckResult::skipped("primitive_invariance", a.name(), kind.str(), e.what());
    } catch (const SeparatingElementNotFound& e) {
        return CheckResult::skipped("primitive_invariance", a.name(), kind.str(), e.what());
    }
    const auto& space = cache.space(a, kind);
    if (blocks.primitive_ideals.empty())
        return CheckResult::pass("primitive_invariance", a.name(), kind.str(),
                                 "trivially: no primitive ideals (radical algebra)");
    if (space.dim() == 0)
        return CheckResult::pass("primitive_invariance", a.name(), kind.str(),
                                 std::string(kEmptySpaceNote) + "; " +
                                     std::to_string(blocks.primitive_ideals.size()) +
                                     " primitive ideal(s)");
    for (const auto& d : space.basis)
        for (std::size_t pi = 0; pi < blocks.primitive_ideals.size(); ++pi) {
            const Ideal& p = blocks.primitive_ideals[pi];
            if (!check_ideal_invariance(a, d, p))
                return CheckResult::fail("primitive_invariance", a.name(), kind.str(),
                                         json{{"map", linear_map_to_json(d)},
                                              {"primitive_ideal_index", pi}},
                                         "primitive ideal not invariant");
            // Cross-validation: the induced map on A/P satisfies the identity.
            const QuotientAlgebra q = quotient(a, p);
            const LinearMap induced = q.projection * d * q.section;
            if (!check_identity(q.quotient, induced, kind))
                return CheckResult::fail("primitive_invariance", a.name(), kind.str(),
                                         json{{"map", linear_map_to_json(d)},
                                              {"induced", linear_map_to_json(induced)},
                                              {"primitive_ideal_index", pi}},
                                         "induced map on A/P fails the identity");
        }
    return CheckResult::pass("primitive_invariance", a.name(), kind.str(),
                             dim_note(space) + "; " +
                                 std::to_string(blocks.primitive_ideals.size()) +
                                 " primitive ideal(s) invariant, induced maps verified");
}

// All triple products of eigenspace basis vectors vanish, which makes x^3 = 0
// for every element of the eigenspace, not only the basis.
bool cube_vanishes_on(const Algebra& a, const Subspace& s) {
    for (const auto& u : s.basis())
        for (const auto& v : s.basis())
            for (const auto& w : s.basis())
                if (!vec_is_zero(multiply(a, multiply(a, u, v), w))) return false;
    return true;
}

CheckResult check_eigen_cube_zero(const Algebra& a, const DerivationKind& kind, Cache& cache) {
    const auto& space = cache.space(a, kind);
    if (space.dim() == 0)
        return CheckResult::pass("eigen_cube_zero", a.name(), kind.str(),
                                 std::string(kEmptySpaceNote) + "; " + kRationalEigenNote);
    std::size_t seen = 0;
    for (const auto& d : space.basis)
        for (const auto& [lambda, es] : rational_eigenpairs(d)) {
            if (lambda == 0) continue;
            ++seen;
            if (!cube_vanishes_on(a, es))
                return CheckResult::fail("eigen_cube_zero", a.name(), kind.str(),
                                         json{{"map", linear_map_to_json(d)},
                                              {"lambda", to_string(lambda)},
                                              {"eigenvector", element_to_json(es.basis()[0])}},
                                         "eigenvector is not cube-zero");
        }
    return CheckResult::pass("eigen_cube_zero", a.name(), kind.str(),
                             dim_note(space) + "; " + std::to_string(seen) +
                                 " nonzero eigenpair(s) cube-zero; " + kRationalEigenNote);
}

CheckResult check_eigen_quasi_inverse(const Algebra& a, const DerivationKind& kind, Cache& cache,
                                      const VerifyOptions& opts) {
    const auto& space = cache.space(a, kind);
    if (space.dim() == 0)
        return CheckResult::pass("eigen_quasi_inverse", a.name(), kind.str(),
                                 std::string(kEmptySpaceNote) + "; " + kRationalEigenNote);
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::size_t tested = 0;
    for (const auto& d : space.basis)
        for (const auto& [lambda, es] : rational_eigenpairs(d)) {
            if (lambda == 0) continue;
            std::vector<Element> candidates = es.basis();
            for (int r = 0; r < 3; ++r) {
                Element x(a.dim());
                for (const auto& v : es.basis()) x = vec_add(x, vec_scale(Rat(coeff(rng)), v));
                if (!vec_is_zero(x)) candidates.push_back(std::move(x));
            }
            for (const auto& x : candidates) {
                ++tested;
                const Element b = vec_sub(a.zero(), vec_add(x, element_power(a, x, 2)));
                const Element xb = multiply(a, x, b), bx = multiply(a, b, x);
                const Element xpb = vec_add(x, b);
                if (xb != xpb || bx != xpb)
                    return CheckResult::fail(
                        "eigen_quasi_inverse", a.name(), kind.str(),
                        json{{"map", linear_map_to_json(d)},
                             {"lambda", to_string(lambda)},
                             {"eigenvector", element_to_json(x)}},
                        "-a-a^2 is not the quasi-inverse of the eigenvector");
            }
        }
    return CheckResult::pass("eigen_quasi_inverse", a.name(), kind.str(),
                             dim_note(space) + "; " + std::to_string(tested) +
                                 " eigenvector(s) verified; " + kRationalEigenNote);
}

CheckResult check_eigen_empty_unital(const Algebra& a, const DerivationKind& kind, Cache& cache) {
    std::string hyp;
    if (find_unit(a)) {
        hyp = "unital";
    } else if (cache.nil(a).ideal.space.is_zero()) {
        hyp = "no nonzero cube-zero elements (semiprime)";
    } else {
        return CheckResult::skipped("eigen_empty_unital", a.name(), kind.str(),
                                    "hypothesis fails: non-unital with nonzero nilpotents");
    }
    const auto& space = cache.space(a, kind);
    for (const auto& d : space.basis)
        for (const auto& [lambda, es] : rational_eigenpairs(d))
            if (lambda != 0)
                return CheckResult::fail("eigen_empty_unital", a.name(), kind.str(),
                                         json{{"map", linear_map_to_json(d)},
                                              {"lambda", to_string(lambda)},
                                              {"eigenvector", element_to_json(es.basis()[0])}},
                                         "nonzero eigenvalue despite hypothesis (" + hyp + ")");
    return CheckResult::pass("eigen_empty_unital", a.name(), kind.str(),
                             hyp + "; no nonzero rational eigenvalues (" + dim_note(space) + "); " +
                                 kRationalEigenNote);
}

CheckResult check_right_identity_trivial(const Algebra& a, const DerivationKind& kind,
                                         Cache& cache) {
    const auto e = find_right_identity(a);
    if (!e)
        return CheckResult::skipped("right_identity_trivial", a.name(), kind.str(),
                                    "hypothesis fails: no right identity");
    const auto& space = cache.space(a, kind);
    if (space.dim() != 0)
        return CheckResult::fail("right_identity_trivial", a.name(), kind.str(),
                                 json{{"map", linear_map_to_json(space.basis[0])},
                                      {"right_identity", element_to_json(*e)}},
                                 "nonzero (p,q)-derivation despite a right identity");
    return CheckResult::pass("right_identity_trivial", a.name(), kind.str(),
                             "right identity " + a.describe_element(*e) +
                                 "; derivation space dim 0");
}

CheckResult check_leibniz_formula(const Algebra& a, const DerivationKind& kind, Cache& cache,
                                  const VerifyOptions& opts) {
    const auto& space = cache.space(a, kind);
    if (space.dim() == 0)
        return CheckResult::pass("leibniz_formula", a.name(), kind.str(), kEmptySpaceNote);
    const auto [p, q] = kind.weights();
    std::mt19937_64 rng(opts.seed ^ 0xc2b2ae3d27d4eb4full);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<std::pair<Element, Element>> pairs;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            pairs.emplace_back(a.basis_element(i), a.basis_element(j));
    for (int r = 0; r < 4; ++r) {
        Element x(a.dim()), y(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            x[i] = coeff(rng);
            y[i] = coeff(rng);
        }
        pairs.emplace_back(std::move(x), std::move(y));
    }
    for (const auto& d : space.basis)
        for (unsigned n = 1; n <= opts.leibniz_max_n; ++n)
            for (const auto& [x, y] : pairs) {
                const auto [lhs, rhs] = leibniz_iterate(a, d, x, y, n, p, q);
                if (lhs != rhs)
                    return CheckResult::fail("leibniz_formula", a.name(), kind.str(),
                                             json{{"map", linear_map_to_json(d)},
                                                  {"n", n},
                                                  {"a1", element_to_json(x)},
                                                  {"a2", element_to_json(y)}},
                                             "iterated Leibniz expansion mismatch");
            }
    return CheckResult::pass("leibniz_formula", a.name(), kind.str(),
                             dim_note(space) + "; n <= " + std::to_string(opts.leibniz_max_n) +
                                 " on " + std::to_string(pairs.size()) + " pairs");
}

CheckResult check_lemma1_ideal(const Algebra& a, const DerivationKind& kind, Cache& cache,
                               const VerifyOptions& opts) {
    const auto& space = cache.space(a, kind);
    if (space.dim() == 0)
        return CheckResult::pass("lemma1_ideal", a.name(), kind.str(), kEmptySpaceNote);
    const auto& nil = cache.nil(a).ideal;
    if (nil.space.is_zero())
        return CheckResult::pass("lemma1_ideal", a.name(), kind.str(),
                                 "trivially: zero nilradical, no generators to test");
    const auto [p, q] = kind.weights();
    for (const auto& d : space.basis)
        for (const auto& iota : nil.space.basis())
            for (unsigned n = 1; n <= opts.leibniz_max_n; ++n)
                if (!lemma1_membership(a, d, nil, iota, n, p, q))
                    return CheckResult::fail("lemma1_ideal", a.name(), kind.str(),
                                             json{{"map", linear_map_to_json(d)},
                                                  {"iota", element_to_json(iota)},
                                                  {"n", n}},
                                             "iterated-power congruence leaves the ideal");
    return CheckResult::pass("lemma1_ideal", a.name(), kind.str(),
                             dim_note(space) + "; nilradical dim " +
                                 std::to_string(nil.space.dim()) + ", n <= " +
                                 std::to_string(opts.leibniz_max_n));
}

CheckResult check_jordan_containment(const Algebra& a, const DerivationKind& kind, Cache& cache) {
    const auto [p, q] = kind.weights();
    if (p <= 0 || q <= 0)
        return CheckResult::skipped("jordan_containment", a.name(), kind.str(),
                                    "hypothesis fails: p and q must be distinct positive");
    if (!cache.nil(a).ideal.space.is_zero())
        return CheckResult::skipped("jordan_containment", a.name(), kind.str(),
                                    "hypothesis fails: algebra is not semiprime");
    const auto& space = cache.space(a, kind);
    if (space.dim() == 0)
        return CheckResult::pass("jordan_containment", a.name(), kind.str(), kEmptySpaceNote);
    for (const auto& d : space.basis)
        if (!check_identity(a, d, DerivationKind::ordinary()))
            return CheckResult::fail("jordan_containment", a.name(), kind.str(),
                                     json{{"map", linear_map_to_json(d)}},
                                     "Jordan (p,q)-derivation is not an ordinary derivation");
    return CheckResult::pass("jordan_containment", a.name(), kind.str(),
                             dim_note(space) + "; all maps are ordinary derivations");
}

CheckResult check_habb_analogue(const Algebra& a, const DerivationKind& kind, Cache& cache) {
    const auto [p, q] = kind.weights();
    if (p <= 0 || q <= 0)
        return CheckResult::skipped("habb_analogue", a.name(), kind.str(),
                                    "hypothesis fails: p and q must be distinct positive");
    if (!find_right_identity(a))
        return CheckResult::skipped("habb_analogue", a.name(), kind.str(),
                                    "hypothesis fails: no right identity");
    const Ideal ran = right_annihilator(a);
    if (ran.space.is_zero())
        return CheckResult::skipped("habb_analogue", a.name(), kind.str(),
                                    "hypothesis fails: right annihilator is zero");
    const auto& space = cache.space(a, kind);
    if (space.dim() == 0)
        return CheckResult::pass("habb_analogue", a.name(), kind.str(),
                                 std::string(kEmptySpaceNote) + "; range vacuously in ran(A) of dim " +
                                     std::to_string(ran.space.dim()));
    for (const auto& d : space.basis) {
        const Subspace range = range_of(a, {d});
        if (!ran.space.contains(range))
            return CheckResult::fail("habb_analogue", a.name(), kind.str(),
                                     json{{"map", linear_map_to_json(d)}},
                                     "range escapes the right annihilator");
        if (!check_identity(a, d, DerivationKind::jordan_left()))
            return CheckResult::fail("habb_analogue", a.name(), kind.str(),
                                     json{{"map", linear_map_to_json(d)}},
                                     "map fails the Jordan-left identity");
    }
    return CheckResult::pass("habb_analogue", a.name(), kind.str(),
                             dim_note(space) + "; range in ran(A), Jordan-left identity holds");
}

CheckResult check_posner_creedon(const Algebra& a, Cache& cache) {
    const DerivationKind ord = DerivationKind::ordinary();
    const auto& space = cache.space(a, ord);
    if (space.dim() == 0)
        return CheckResult::pass("posner_creedon", a.name(), ord.str(), kEmptySpaceNote);
    const auto& rad = cache.nil(a).ideal.space;
    std::size_t derivations = 0;
    for (const auto& d1 : space.basis)
        for (const auto& d2 : space.basis) {
            const CompositionInfo info = compose_and_classify(a, d1, d2);
            if (!info.is_ordinary_derivation) continue;
            ++derivations;
            if (!rad.contains(info.range))
                return CheckResult::fail("posner_creedon", a.name(), ord.str(),
                                         json{{"d1", linear_map_to_json(d1)},
                                              {"d2", linear_map_to_json(d2)},
                                              {"composition", linear_map_to_json(info.composition)}},
                                         "derivation composition range escapes rad(A)");
        }
    return CheckResult::pass("posner_creedon", a.name(), ord.str(),
                             dim_note(space) + "; " + std::to_string(derivations) +
                                 " composition(s) were derivations, ranges in rad(A)");
}

CheckResult verify_impl(const std::string& id, const Algebra& a, const DerivationKind& kind,
                        const VerifyOptions& opts, Cache& cache) {
    if (id == "left_derivation_radical") return check_left_derivation_radical(a, cache);
    if (id == "posner_creedon") return check_posner_creedon(a, cache);
    if (id == "jordan_containment")
        return jordan_kind(kind) ? check_jordan_containment(a, kind, cache)
                                 : need_jordan_kind(id, a, kind);
    if (id == "habb_analogue")
        return jordan_kind(kind) ? check_habb_analogue(a, kind, cache)
                                 : need_jordan_kind(id, a, kind);
    if (!product_kind(kind)) {
        if (std::find(check_catalog().begin(), check_catalog().end(), id) ==
            check_catalog().end())
            throw UnknownCheck("unknown check id '" + id + "'");
        return need_product_kind(id, a, kind);
    }
    if (id == "singer_wermer") return check_singer_wermer(a, kind, cache);
    if (id == "semisimple_trivial") return check_semisimple_trivial(a, kind, cache);
    if (id == "primitive_invariance") return check_primitive_invariance(a, kind, cache, opts);
    if (id == "eigen_cube_zero") return check_eigen_cube_zero(a, kind, cache);
    if (id == "eigen_quasi_inverse") return check_eigen_quasi_inverse(a, kind, cache, opts);
    if (id == "eigen_empty_unital") return check_eigen_empty_unital(a, kind, cache);
    if (id == "right_identity_trivial") return check_right_identity_trivial(a, kind, cache);
    if (id == "leibniz_formula") return check_leibniz_formula(a, kind, cache, opts);
    if (id == "lemma1_ideal") return check_lemma1_ideal(a, kind, cache, opts);
    throw UnknownCheck("unknown check id '" + id + "'");
}

}  // namespace

CheckResult verify(const std::string& check_id, const Algebra& a, const DerivationKind& kind,
                   const VerifyOptions& opts) {
    Cache cache;
    return verify_impl(check_id, a, kind, opts, cache);
}

VerificationReport run_suite(const std::vector<Algebra>& algebras,
                             const std::vector<DerivationKind>& kinds,
                             const VerifyOptions& opts) {
    static const std::vector<std::string> product_checks{
        "singer_wermer",    "semisimple_trivial",     "primitive_invariance",
        "eigen_cube_zero",  "eigen_quasi_inverse",    "eigen_empty_unital",
        "right_identity_trivial", "leibniz_formula",  "lemma1_ideal"};
    static const std::vector<std::string> jordan_checks{"jordan_containment", "habb_analogue"};

    VerificationReport report;
    report.version = kArtifactVersion;
    Cache cache;
    for (const auto& a : algebras) {
        report.add(check_left_derivation_radical(a, cache));
        report.add(check_posner_creedon(a, cache));
        for (const auto& kind : kinds) {
            kind.validate();
            if (product_kind(kind)) {
                for (const auto& id : product_checks)
                    report.add(verify_impl(id, a, kind, opts, cache));
                // Each product kind drives its Jordan twin.
                const auto [p, q] = kind.weights();
                const DerivationKind twin = DerivationKind::jordan_pq(p, q);
                for (const auto& id : jordan_checks)
                    report.add(verify_impl(id, a, twin, opts, cache));
            } else if (jordan_kind(kind)) {
                for (const auto& id : jordan_checks)
                    report.add(verify_impl(id, a, kind, opts, cache));
            }
            // The ordinary kind is covered by the kind-independent checks.
        }
    }
    // Deterministic order and de-duplication regardless of execution order.
    std::stable_sort(report.results.begin(), report.results.end(),
                     [](const CheckResult& x, const CheckResult& y) {
                         return std::tie(x.check, x.algebra, x.kind) <
                                std::tie(y.check, y.algebra, y.kind);
                     });
    std::vector<CheckResult> unique;
    for (auto& r : report.results)
        if (unique.empty() || std::tie(unique.back().check, unique.back().algebra,
                                       unique.back().kind) != std::tie(r.check, r.algebra, r.kind))
            unique.push_back(std::move(r));
    report.results = std::move(unique);
    report.passed = report.failed = report.skipped = 0;
    for (const auto& r : report.results) switch (r.status) {
            case CheckStatus::Pass: ++report.passed; break;
            case CheckStatus::Fail: ++report.failed; break;
            case CheckStatus::Skipped: ++report.skipped; break;
        }
    return report;
}

}  // namespace pqderiv
