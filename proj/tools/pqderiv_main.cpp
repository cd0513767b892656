#include "pqderiv/constructors.hpp"
#include "pqderiv/polynomial.hpp"
#include "pqderiv/verifier.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace pqderiv;
using nlohmann::json;

namespace {

DerivationKind parse_kind(const std::string& s) {
    if (s == "ordinary") return DerivationKind::ordinary();
    if (s == "left") return DerivationKind::left();
    if (s == "right") return DerivationKind::right();
    if (s == "jordan_left") return DerivationKind::jordan_left();
    if (s == "jordan_right") return DerivationKind::jordan_right();
    std::string body = s;
    bool jordan = false;
    if (body.rfind("jordan:", 0) == 0) {
        jordan = true;
        body = body.substr(7);
    }
    const auto comma = body.find(',');
    if (comma == std::string::npos)
        throw InvalidKind("cannot parse kind '" + s + "' (expected p,q or a named alias)");
    const long p = std::stol(body.substr(0, comma));
    const long q = std::stol(body.substr(comma + 1));
    DerivationKind k = jordan ? DerivationKind::jordan_pq(p, q) : DerivationKind::pq(p, q);
    k.validate();
    return k;
}

struct AlgebraSource {
    std::string builtin_name;
    int size = 0;
    std::string file;
    std::string cayley;

    void add_options(CLI::App* cmd) {
        auto* b = cmd->add_option("--builtin", builtin_name, "built-in algebra or group name");
        cmd->add_option("--size", size, "size parameter for parametric builtins");
        auto* f = cmd->add_option("--file", file, "algebra JSON file");
        auto* c = cmd->add_option("--cayley", cayley, "Cayley-table JSON file (group algebra)");
        b->excludes(f)->excludes(c);
        f->excludes(c);
    }

    Algebra resolve() const {
        const int given = (!builtin_name.empty()) + (!file.empty()) + (!cayley.empty());
        if (given != 1)
            throw std::invalid_argument("exactly one algebra source (--builtin/--file/--cayley) required");
        if (!file.empty()) return load_algebra(file);
        if (!cayley.empty()) return group_algebra(load_cayley(cayley));
        if (size > 0) return builtin(builtin_name, size);
        return resolve_algebra(builtin_name);
    }
};

void emit(const json& j, const std::string& text, const std::string& format,
          const std::string& output) {
    const std::string payload = format == "json" ? j.dump(2) + "\n" : text;
    if (output.empty())
        std::cout << payload;
    else
        write_file_atomic(output, payload);
}

json subspace_json(const Subspace& s) {
    json basis = json::array();
    for (const auto& v : s.basis()) basis.push_back(element_to_json(v));
    return json{{"ambient_dim", s.ambient()}, {"dim", s.dim()}, {"basis", basis}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for (p,q)-derivations of finite-dimensional algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", output;
    std::uint64_t seed = 0;
    unsigned leibniz_max = 4;
    int factor_cap = 12;
    if (const char* env = std::getenv("PQDERIV_SEED")) seed = std::strtoull(env, nullptr, 10);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output, "write the report to a file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized searches (default from PQDERIV_SEED)");
    app.add_option("--leibniz-max", leibniz_max, "max n for iterated-Leibniz checks");
    app.add_option("--factor-cap", factor_cap, "polynomial factoring degree cap");

    AlgebraSource src;
    std::string kind_str;
    long p = -1, q = -1;
    bool jordan = false;

    auto* derive = app.add_subcommand("derive", "solve a derivation space");
    src.add_options(derive);
    derive->add_option("--kind", kind_str, "kind: p,q | jordan:p,q | left | right | ordinary");
    derive->add_option("--p", p, "p weight");
    derive->add_option("--q", q, "q weight");
    derive->add_flag("--jordan", jordan, "impose the identity on squares only");

    auto* rad_cmd = app.add_subcommand("radical", "Jacobson radical with nilpotency certificate");
    src.add_options(rad_cmd);

    auto* prim = app.add_subcommand("primitive", "primitive ideals via Wedderburn blocks");
    src.add_options(prim);

    auto* eigen = app.add_subcommand("eigen", "rational eigenpairs of a solved basis map");
    src.add_options(eigen);
    std::size_t map_index = 0;
    eigen->add_option("--kind", kind_str, "derivation kind");
    eigen->add_option("--p", p, "p weight");
    eigen->add_option("--q", q, "q weight");
    eigen->add_flag("--jordan", jordan, "Jordan kind");
    eigen->add_option("--map-index", map_index, "index into the solved basis");

    auto* verify_cmd = app.add_subcommand("verify", "run one catalog check");
    src.add_options(verify_cmd);
    std::string check_id;
    verify_cmd->add_option("--check", check_id, "catalog check id")->required();
    verify_cmd->add_option("--kind", kind_str, "derivation kind");
    verify_cmd->add_option("--p", p, "p weight");
    verify_cmd->add_option("--q", q, "q weight");
    verify_cmd->add_flag("--jordan", jordan, "Jordan kind");

    auto* suite = app.add_subcommand("suite", "run the whole check catalog");
    bool all_builtins = false;
    std::vector<std::string> kind_strs{"0,1", "1,0", "1,2", "2,1", "1,3"};
    std::vector<std::string> sources;
    suite->add_flag("--all-builtins", all_builtins, "use the built-in catalog");
    suite->add_option("--algebra", sources, "algebra sources (names or files)");
    suite->add_option("--kinds", kind_strs, "kinds to test");

    auto* show = app.add_subcommand("show", "algebra summary");
    src.add_options(show);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto make_kind = [&]() -> DerivationKind {
            if (!kind_str.empty()) return parse_kind(kind_str);
            if (p >= 0 && q >= 0) {
                DerivationKind k = jordan ? DerivationKind::jordan_pq(p, q)
                                          : DerivationKind::pq(p, q);
                k.validate();
                return k;
            }
            throw InvalidKind("no kind given: use --kind or --p/--q");
        };
        VerifyOptions opts{seed, leibniz_max, factor_cap};

        if (*derive) {
            const Algebra a = src.resolve();
            const DerivationKind kind = make_kind();
            const DerivationSpace space = solve_space(a, kind);
            json maps = json::array();
            std::ostringstream os;
            os << a.name() << " " << kind.str() << ": derivation space dim " << space.dim() << "\n";
            for (std::size_t i = 0; i < space.dim(); ++i) {
                maps.push_back(linear_map_to_json(space.basis[i]));
                os << "basis map " << i << ":\n";
                for (std::size_t r = 0; r < a.dim(); ++r) {
                    os << " ";
                    for (std::size_t c = 0; c < a.dim(); ++c)
                        os << " " << to_string(space.basis[i].at(r, c));
                    os << "\n";
                }
            }
            emit(json{{"algebra", a.name()}, {"kind", kind.str()}, {"dim", space.dim()},
                      {"basis", maps}},
                 os.str(), format, output);
        } else if (*rad_cmd) {
            const Algebra a = src.resolve();
            const Nilradical nil = nilradical(a);
            std::ostringstream os;
            os << a.name() << ": radical dim " << nil.ideal.space.dim()
               << ", nilpotency exponent " << nil.nilpotency_exponent << "\n";
            for (const auto& v : nil.ideal.space.basis())
                os << "  " << a.describe_element(v) << "\n";
            emit(json{{"algebra", a.name()}, {"radical", subspace_json(nil.ideal.space)},
                      {"nilpotency_exponent", nil.nilpotency_exponent}},
                 os.str(), format, output);
        } else if (*prim) {
            const Algebra a = src.resolve();
            const BlockDecomposition bd = primitive_ideals(a, factor_cap, seed);
            json blocks = json::array(), ideals = json::array();
            std::ostringstream os;
            os << a.name() << ": " << bd.primitive_ideals.size() << " primitive ideal(s)\n";
            for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
                blocks.push_back({{"idempotent", element_to_json(bd.blocks[i].first)},
                                  {"block_dim", bd.blocks[i].second}});
                ideals.push_back(subspace_json(bd.primitive_ideals[i].space));
                os << "  block dim " << bd.blocks[i].second << ", primitive ideal dim "
                   << bd.primitive_ideals[i].space.dim() << "\n";
            }
            emit(json{{"algebra", a.name()}, {"blocks", blocks}, {"primitive_ideals", ideals}},
                 os.str(), format, output);
        } else if (*eigen) {
            const Algebra a = src.resolve();
            const DerivationKind kind = make_kind();
            const DerivationSpace space = solve_space(a, kind);
            if (map_index >= space.dim())
                throw std::invalid_argument("--map-index " + std::to_string(map_index) +
                                            " out of range (space dim " +
                                            std::to_string(space.dim()) + ")");
            json pairs = json::array();
            std::ostringstream os;
            os << a.name() << " " << kind.str() << " basis map " << map_index << " eigenpairs:\n";
            for (const auto& [lambda, es] : rational_eigenpairs(space.basis[map_index])) {
                pairs.push_back({{"lambda", to_string(lambda)}, {"eigenspace", subspace_json(es)}});
                os << "  lambda = " << to_string(lambda) << ", eigenspace dim " << es.dim() << "\n";
            }
            emit(json{{"algebra", a.name()}, {"kind", kind.str()}, {"map_index", map_index},
                      {"eigenpairs", pairs}},
                 os.str(), format, output);
        } else if (*verify_cmd) {
            const Algebra a = src.resolve();
            DerivationKind kind = DerivationKind::ordinary();
            if (!kind_str.empty() || (p >= 0 && q >= 0)) kind = make_kind();
            const CheckResult r = verify(check_id, a, kind, opts);
            VerificationReport rep;
            rep.version = kArtifactVersion;
            rep.add(r);
            emit(rep.to_json(), rep.text(), format, output);
            return r.status == CheckStatus::Fail ? 1 : 0;
        } else if (*suite) {
            std::vector<Algebra> algebras;
            if (all_builtins) algebras = default_catalog();
            for (const auto& s : sources) algebras.push_back(resolve_algebra(s));
            std::vector<DerivationKind> kinds;
            for (const auto& s : kind_strs) kinds.push_back(parse_kind(s));
            const VerificationReport rep = run_suite(algebras, kinds, opts);
            emit(rep.to_json(), rep.text(), format, output);
            return rep.failed != 0 ? 1 : 0;
        } else if (*show) {
            const Algebra a = src.resolve();
            const auto unit = find_unit(a);
            const auto rid = find_right_identity(a);
            const Subspace z = center(a);
            const bool sp = is_semiprime(a);
            std::ostringstream os;
            os << a.name() << ": dim " << a.dim() << ", unital: " << (unit ? "yes" : "no")
               << ", right identity: " << (rid ? a.describe_element(*rid) : "none")
               << ", center dim " << z.dim() << ", semiprime: " << (sp ? "yes" : "no") << "\n";
            for (const auto& [k, v] : a.metadata()) os << "  " << k << ": " << v << "\n";
            emit(json{{"name", a.name()},
                      {"dim", a.dim()},
                      {"unital", static_cast<bool>(unit)},
                      {"right_identity", rid ? element_to_json(*rid) : json(nullptr)},
                      {"center_dim", z.dim()},
                      {"semiprime", sp},
                      {"metadata", a.metadata()}},
                 os.str(), format, output);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
