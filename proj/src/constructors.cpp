#include "pqderiv/constructors.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace pqderiv {

using nlohmann::json;

void CayleyTable::validate() const {
    if (order == 0) throw NotAGroup("empty Cayley table");
    if (table.size() != order) throw NotAGroup("table row count != order");
    for (std::size_t i = 0; i < order; ++i) {
        if (table[i].size() != order) throw NotAGroup("table column count != order");
        for (std::size_t j = 0; j < order; ++j)
            if (table[i][j] >= order) throw NotAGroup("table entry out of range");
    }
    if (identity >= order) throw NotAGroup("identity index out of range");
    auto witness = [this](const char* what, std::size_t i, std::size_t j, std::size_t k) {
        std::ostringstream os;
        os << name << ": " << what << " at (" << i << "," << j << "," << k << ")";
        return NotAGroup(os.str());
    };
    for (std::size_t i = 0; i < order; ++i) {
        std::vector<bool> seen_row(order, false), seen_col(order, false);
        for (std::size_t j = 0; j < order; ++j) {
            if (seen_row[table[i][j]]) throw witness("row is not a permutation", i, j, 0);
            seen_row[table[i][j]] = true;
            if (seen_col[table[j][i]]) throw witness("column is not a permutation", j, i, 0);
            seen_col[table[j][i]] = true;
        }
        if (table[identity][i] != i || table[i][identity] != i)
            throw witness("identity fails", identity, i, i);
    }
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j)
            for (std::size_t k = 0; k < order; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw witness("associativity fails", i, j, k);
}

namespace {

Algebra matrix_units_algebra(const std::string& name, int n,
                             bool (*keep)(std::size_t r, std::size_t c)) {
    if (n < 1) throw UnknownBuiltin("size parameter must be >= 1 for " + name);
    struct Unit { std::size_t r, c; };
    std::vector<Unit> units;
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c)
            if (keep(r, c)) {
                units.push_back({r, c});
                labels.push_back("e" + std::to_string(r + 1) + std::to_string(c + 1));
            }
    if (units.empty()) throw UnknownBuiltin(name + " has dimension 0 at this size");
    const std::size_t dim = units.size();
    std::vector<Rat> c(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (units[i].c != units[j].r) continue;
            for (std::size_t k = 0; k < dim; ++k)
                if (units[k].r == units[i].r && units[k].c == units[j].c)
                    c[(i * dim + j) * dim + k] = 1;
        }
    return Algebra(name, std::move(labels), std::move(c));
}

}  // namespace

Algebra builtin(const std::string& name, int param) {
    std::string base = name;
    // Accept "name(param)".
    if (auto open = name.find('('); open != std::string::npos && name.back() == ')') {
        base = name.substr(0, open);
        param = std::stoi(name.substr(open + 1, name.size() - open - 2));
    }
    if (base == "full_matrix")
        return matrix_units_algebra("full_matrix(" + std::to_string(param) + ")", param,
                                    [](std::size_t, std::size_t) { return true; });
    if (base == "upper_triangular")
        return matrix_units_algebra("upper_triangular(" + std::to_string(param) + ")", param,
                                    [](std::size_t r, std::size_t c) { return r <= c; });
    if (base == "strictly_upper_triangular")
        return matrix_units_algebra("strictly_upper_triangular(" + std::to_string(param) + ")",
                                    param, [](std::size_t r, std::size_t c) { return r < c; });
    if (base == "truncated_polynomial") {
        if (param < 2) throw UnknownBuiltin("truncated_polynomial needs k >= 2");
        const std::size_t dim = static_cast<std::size_t>(param) - 1;  // t, ..., t^(k-1)
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= dim; ++i) labels.push_back("t^" + std::to_string(i));
        std::vector<Rat> c(dim * dim * dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (i + j + 2 <= dim) c[(i * dim + j) * dim + (i + j + 1)] = 1;
        return Algebra("truncated_polynomial(" + std::to_string(param) + ")", std::move(labels),
                       std::move(c));
    }
    if (base == "paper_example") {
        // span{a, a^2} with a*a = a^2 and all other products zero.
        std::vector<Rat> c(8);
        c[(0 * 2 + 0) * 2 + 1] = 1;
        return Algebra("paper_example", {"a", "a^2"}, std::move(c));
    }
    if (base == "annihilator_model") {
        // span{e, r}: e*e = e, r*e = r, e*r = r*r = 0.
        // Right identity e; right annihilator span{r}.
        std::vector<Rat> c(8);
        c[(0 * 2 + 0) * 2 + 0] = 1;
        c[(1 * 2 + 0) * 2 + 1] = 1;
        return Algebra("annihilator_model", {"e", "r"}, std::move(c));
    }
    throw UnknownBuiltin("unknown builtin algebra '" + name + "'");
}

Algebra group_algebra(const CayleyTable& t) {
    t.validate();
    const std::size_t n = t.order;
    std::vector<std::string> labels = t.labels;
    if (labels.size() != n) {
        labels.clear();
        for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    }
    std::vector<Rat> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[(i * n + j) * n + t.table[i][j]] = 1;
    std::map<std::string, std::string> meta{
        {"stand_in", "finite group algebra Q[G]; desk-scale model of the group algebras of a "
                     "locally compact group"}};
    return Algebra("Q[" + (t.name.empty() ? "G" : t.name) + "]", std::move(labels), std::move(c),
                   std::move(meta));
}

namespace {

CayleyTable cyclic_table(std::size_t n, const std::string& name) {
    CayleyTable t;
    t.order = n;
    t.identity = 0;
    t.name = name;
    t.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.table[i][j] = (i + j) % n;
    return t;
}

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& a, const Perm& b) {  // (a after b)(x) = a[b[x]]
    Perm r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

CayleyTable permutation_group_table(const std::vector<Perm>& generators, const std::string& name) {
    const std::size_t deg = generators.front().size();
    Perm id(deg);
    for (std::size_t i = 0; i < deg; ++i) id[i] = i;
    std::vector<Perm> elems{id};
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (const auto& g : generators) {
                Perm p = compose(elems[i], g);
                if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
                    elems.push_back(std::move(p));
                    grew = true;
                }
            }
    }
    std::sort(elems.begin(), elems.end());
    CayleyTable t;
    t.order = elems.size();
    t.name = name;
    t.table.assign(t.order, std::vector<std::size_t>(t.order));
    for (std::size_t i = 0; i < t.order; ++i) {
        if (elems[i] == id) t.identity = i;
        for (std::size_t j = 0; j < t.order; ++j) {
            const Perm p = compose(elems[i], elems[j]);
            t.table[i][j] =
                std::find(elems.begin(), elems.end(), p) - elems.begin();
        }
    }
    return t;
}

CayleyTable quaternion_table() {
    // Elements 0..7 = 1, -1, i, -i, j, -j, k, -k.
    auto enc = [](int sign, int unit) { return static_cast<std::size_t>(2 * unit + (sign < 0)); };
    auto mul_units = [](int a, int b, int& sign) -> int {
        // units: 0 = 1, 1 = i, 2 = j, 3 = k
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign *= sgn[a][b];
        return prod[a][b];
    };
    CayleyTable t;
    t.order = 8;
    t.identity = 0;
    t.name = "Q8";
    t.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    t.table.assign(8, std::vector<std::size_t>(8));
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) {
            int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
            const int unit = mul_units(static_cast<int>(x / 2), static_cast<int>(y / 2), sign);
            t.table[x][y] = enc(sign, unit);
        }
    return t;
}

}  // namespace

CayleyTable bundled_group(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == "c2") return cyclic_table(2, "C2");
    if (n == "c3") return cyclic_table(3, "C3");
    if (n == "c4") return cyclic_table(4, "C4");
    if (n == "c2xc2") {
        CayleyTable t;
        t.order = 4;
        t.identity = 0;
        t.name = "C2xC2";
        t.table.assign(4, std::vector<std::size_t>(4));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) t.table[i][j] = i ^ j;
        return t;
    }
    if (n == "s3")
        return permutation_group_table({{1, 0, 2}, {1, 2, 0}}, "S3");
    if (n == "d4")
        return permutation_group_table({{1, 2, 3, 0}, {1, 0, 3, 2}}, "D4");
    if (n == "q8") return quaternion_table();
    throw UnknownBuiltin("unknown bundled group '" + name + "'");
}

std::vector<std::string> bundled_group_names() {
    return {"c2", "c3", "c4", "c2xc2", "s3", "q8", "d4"};
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    if (a.dim() < 1 || b.dim() < 1)
        throw std::invalid_argument("direct_sum needs both summands of dimension >= 1");
    const std::size_t n = a.dim(), m = b.dim(), dim = n + m;
    std::vector<std::string> labels;
    for (const auto& l : a.basis_labels()) labels.push_back("l:" + l);
    for (const auto& l : b.basis_labels()) labels.push_back("r:" + l);
    std::vector<Rat> c(dim * dim * dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[(i * dim + j) * dim + k] = a.sc(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                c[((n + i) * dim + (n + j)) * dim + (n + k)] = b.sc(i, j, k);
    return Algebra(a.name() + "+" + b.name(), std::move(labels), std::move(c));
}

std::vector<Algebra> default_catalog() {
    std::vector<Algebra> cat;
    cat.push_back(builtin("full_matrix", 2));
    cat.push_back(builtin("full_matrix", 3));
    cat.push_back(builtin("upper_triangular", 2));
    cat.push_back(builtin("strictly_upper_triangular", 3));
    cat.push_back(builtin("paper_example"));
    cat.push_back(builtin("annihilator_model"));
    cat.push_back(builtin("truncated_polynomial", 4));
    for (const auto& g : bundled_group_names()) cat.push_back(group_algebra(bundled_group(g)));
    cat.push_back(direct_sum(group_algebra(bundled_group("c2")), builtin("paper_example")));
    cat.push_back(direct_sum(builtin("paper_example"), builtin("paper_example")));
    return cat;
}

Algebra resolve_algebra(const std::string& source) {
    if (std::filesystem::exists(source)) return load_algebra(source);
    for (auto& a : default_catalog())
        if (a.name() == source) return a;
    try {
        return builtin(source);
    } catch (const UnknownBuiltin&) {
    }
    try {
        return group_algebra(bundled_group(source));
    } catch (const UnknownBuiltin&) {
    }
    throw UnknownBuiltin("cannot resolve algebra source '" + source + "'");
}

json algebra_to_json(const Algebra& a) {
    json structure = json::array();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.sc(i, j, k) != 0)
                    structure.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", to_string(a.sc(i, j, k))}});
    json j{{"name", a.name()}, {"dim", n}, {"basis", a.basis_labels()}, {"structure", structure}};
    if (!a.metadata().empty()) j["metadata"] = a.metadata();
    return j;
}

Algebra algebra_from_json(const json& j) {
    try {
        const std::size_t n = j.at("dim").get<std::size_t>();
        auto labels = j.at("basis").get<std::vector<std::string>>();
        if (labels.size() != n) throw ParseError("basis label count does not match dim");
        std::vector<Rat> c(n * n * n);
        for (const auto& e : j.at("structure")) {
            const std::size_t i = e.at("i").get<std::size_t>();
            const std::size_t jj = e.at("j").get<std::size_t>();
            const std::size_t k = e.at("k").get<std::size_t>();
            if (i >= n || jj >= n || k >= n) throw ParseError("structure index out of range");
            c[(i * n + jj) * n + k] = parse_rational(e.at("c").get<std::string>());
        }
        std::map<std::string, std::string> meta;
        if (j.contains("metadata")) meta = j.at("metadata").get<std::map<std::string, std::string>>();
        return Algebra(j.at("name").get<std::string>(), std::move(labels), std::move(c),
                       std::move(meta));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed algebra file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid algebra file: ") + e.what());
    }
}

json cayley_to_json(const CayleyTable& t) {
    json j{{"order", t.order}, {"identity", t.identity}, {"table", t.table}};
    if (!t.name.empty()) j["name"] = t.name;
    if (!t.labels.empty()) j["labels"] = t.labels;
    return j;
}

CayleyTable cayley_from_json(const json& j) {
    try {
        CayleyTable t;
        t.order = j.at("order").get<std::size_t>();
        t.identity = j.at("identity").get<std::size_t>();
        t.table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
        if (j.contains("name")) t.name = j.at("name").get<std::string>();
        if (j.contains("labels")) t.labels = j.at("labels").get<std::vector<std::string>>();
        t.validate();
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed Cayley file: ") + e.what());
    }
}

namespace {

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("parse error in '" + path.string() + "': " + e.what());
    }
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        out << contents;
    }
    std::filesystem::rename(tmp, path);
}

Algebra load_algebra(const std::filesystem::path& path) {
    return algebra_from_json(read_json_file(path));
}

void save_algebra(const std::filesystem::path& path, const Algebra& a) {
    write_file_atomic(path, algebra_to_json(a).dump(2) + "\n");
}

CayleyTable load_cayley(const std::filesystem::path& path) {
    return cayley_from_json(read_json_file(path));
}

void save_cayley(const std::filesystem::path& path, const CayleyTable& t) {
    write_file_atomic(path, cayley_to_json(t).dump(2) + "\n");
}

}  // namespace pqderiv
