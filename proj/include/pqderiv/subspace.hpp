#pragma once

#include "pqderiv/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace pqderiv {

/// A subspace of Q^n held as the unique reduced-row-echelon basis, so equal
/// subspaces compare equal componentwise.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool is_zero() const { return basis_.empty(); }

    /// Residual of v after eliminating all pivot coordinates against the basis.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const = default;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;          // RREF rows, pivot columns strictly increasing
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

}  // namespace pqderiv
