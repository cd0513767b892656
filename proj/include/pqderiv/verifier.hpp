#pragma once

#include "pqderiv/structure.hpp"

#include <json.hpp>

#include <cstdint>

namespace pqderiv {

struct UnknownCheck : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

/// Outcome of one theorem check. A fail always carries a witness; a skip
/// always carries the failed hypothesis in details.
struct CheckResult {
    std::string check;
    std::string algebra;
    std::string kind;  // empty for kind-independent checks
    CheckStatus status = CheckStatus::Pass;
    nlohmann::json witness;  // null unless status == Fail
    std::string details;

    static CheckResult pass(std::string check, std::string algebra, std::string kind,
                            std::string details);
    static CheckResult fail(std::string check, std::string algebra, std::string kind,
                            nlohmann::json witness, std::string details);
    static CheckResult skipped(std::string check, std::string algebra, std::string kind,
                               std::string reason);
};

struct VerificationReport {
    std::string version;
    std::vector<CheckResult> results;
    std::size_t passed = 0, failed = 0, skipped = 0;

    void add(CheckResult r);
    nlohmann::json to_json() const;
    std::string text() const;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    unsigned leibniz_max_n = 4;
    int factor_degree_cap = 12;
};

/// All catalog check identifiers, in canonical order.
const std::vector<std::string>& check_catalog();

/// Execute one catalog check on one algebra for one kind.
CheckResult verify(const std::string& check_id, const Algebra& a, const DerivationKind& kind,
                   const VerifyOptions& opts = {});

/// Run every applicable check over the algebra/kind cross product; product
/// kinds additionally drive their Jordan twins for the Jordan checks.
VerificationReport run_suite(const std::vector<Algebra>& algebras,
                             const std::vector<DerivationKind>& kinds,
                             const VerifyOptions& opts = {});

nlohmann::json linear_map_to_json(const LinearMap& d);
nlohmann::json element_to_json(const Element& x);

inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace pqderiv
