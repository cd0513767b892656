#pragma once

#include "pqderiv/algebra.hpp"

#include <utility>

namespace pqderiv {

struct InvalidKind : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IotaNotInIdeal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Variant { Ordinary, PQ, JordanPQ, Left, Right, JordanLeft, JordanRight };

/// Which defining identity a map must satisfy: (p+q) d(xy) = 2p d(x)y + 2q x d(y)
/// for the product kinds, or the same weights imposed on squares for the Jordan
/// kinds. Left is the (0,1) case, Right the (1,0) case; Ordinary is its own kind.
struct DerivationKind {
    Variant variant = Variant::Ordinary;
    long p = 0, q = 0;  // meaningful for PQ / JordanPQ only

    static DerivationKind ordinary() { return {Variant::Ordinary, 0, 0}; }
    static DerivationKind pq(long p, long q);
    static DerivationKind jordan_pq(long p, long q);
    static DerivationKind left() { return {Variant::Left, 0, 0}; }
    static DerivationKind right() { return {Variant::Right, 0, 0}; }
    static DerivationKind jordan_left() { return {Variant::JordanLeft, 0, 0}; }
    static DerivationKind jordan_right() { return {Variant::JordanRight, 0, 0}; }

    void validate() const;  // throws InvalidKind
    bool is_jordan() const {
        return variant == Variant::JordanPQ || variant == Variant::JordanLeft ||
               variant == Variant::JordanRight;
    }
    /// Effective (p, q) weights; Ordinary resolves to (1, 1).
    std::pair<long, long> weights() const;
    std::string str() const;

    bool operator==(const DerivationKind& o) const = default;
};

/// Exact square matrix acting on algebra coordinates.
using LinearMap = Matrix;

/// Canonical null-space basis of the defining linear system; every basis map
/// is re-verified against the independent identity oracle.
struct DerivationSpace {
    DerivationKind kind;
    std::size_t algebra_dim = 0;
    std::vector<LinearMap> basis;

    std::size_t dim() const { return basis.size(); }
    /// Membership of a map in the solved space, via the flattened subspace.
    bool contains(const LinearMap& d) const;
};

/// Linear conditions on the n^2 unknowns of d from all ordered basis pairs
/// (product kinds) or the symmetrized linearization on unordered pairs
/// (Jordan kinds). Unknowns are flattened row-major.
Matrix assemble_constraints(const Algebra& a, const DerivationKind& kind);

DerivationSpace solve_space(const Algebra& a, const DerivationKind& kind);

/// Independent oracle: evaluates the defining identity directly through
/// multiply() on all basis pairs, never through the assembled system.
bool check_identity(const Algebra& a, const LinearMap& d, const DerivationKind& kind);

/// Lemma-style iterated Leibniz expansion: lhs = d^n(a1 a2),
/// rhs = (2^n/(p+q)^n) sum_k C(n,k) p^(n-k) q^k d^(n-k)(a1) d^k(a2).
std::pair<Element, Element> leibniz_iterate(const Algebra& a, const LinearMap& d,
                                            const Element& a1, const Element& a2, unsigned n,
                                            long p, long q);

/// n! (2/(p+q))^((n^2+n-2)/2) q^((n^2-n)/2) p^(n-1), with 0^0 = 1.
Rat lemma1_coefficient(unsigned n, long p, long q);

/// Whether d^n(iota^n) - lemma1_coefficient(n,p,q) d(iota)^n lies in I.
bool lemma1_membership(const Algebra& a, const LinearMap& d, const Ideal& ideal,
                       const Element& iota, unsigned n, long p, long q);

struct CompositionInfo {
    LinearMap composition;
    bool is_ordinary_derivation = false;
    Subspace range;
};

CompositionInfo compose_and_classify(const Algebra& a, const LinearMap& d1, const LinearMap& d2);

/// All rational eigenvalues with exact eigenspaces; lambda = 0 reports the kernel.
std::vector<std::pair<Rat, Subspace>> rational_eigenpairs(const LinearMap& d);

}  // namespace pqderiv
