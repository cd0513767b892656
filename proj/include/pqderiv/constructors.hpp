#pragma once

#include "pqderiv/algebra.hpp"

#include <json.hpp>

#include <filesystem>

namespace pqderiv {

struct UnknownBuiltin : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Multiplication table of a finite group: table[i][j] is the index of the
/// product, with an explicit two-sided identity index. Validated as a Latin
/// square with associativity.
struct CayleyTable {
    std::size_t order = 0;
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::string> labels;  // optional element names
    std::string name;

    void validate() const;  // throws NotAGroup with the failing witness
};

/// Named constructions: full_matrix(n), upper_triangular(n),
/// strictly_upper_triangular(n), truncated_polynomial(k), paper_example,
/// annihilator_model. Also accepts "name(param)" in one string.
Algebra builtin(const std::string& name, int param = 0);

/// Group algebra Q[G] from a Cayley table: c[i][j][k] = 1 iff table[i][j] = k.
Algebra group_algebra(const CayleyTable& t);

/// Bundled tables: c2, c3, c4, c2xc2, s3, q8, d4.
CayleyTable bundled_group(const std::string& name);
std::vector<std::string> bundled_group_names();

Algebra direct_sum(const Algebra& a, const Algebra& b);

/// The default verification catalog: named families, bundled group algebras,
/// and mixed direct sums.
std::vector<Algebra> default_catalog();

/// Resolve an algebra by catalog name, builtin spec, group name, or file path.
Algebra resolve_algebra(const std::string& source);

nlohmann::json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const nlohmann::json& j);
nlohmann::json cayley_to_json(const CayleyTable& t);
CayleyTable cayley_from_json(const nlohmann::json& j);

Algebra load_algebra(const std::filesystem::path& path);
void save_algebra(const std::filesystem::path& path, const Algebra& a);
CayleyTable load_cayley(const std::filesystem::path& path);
void save_cayley(const std::filesystem::path& path, const CayleyTable& t);

/// Whole-file atomic write (temp file + rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace pqderiv
