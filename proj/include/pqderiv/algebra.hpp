#pragma once

#include "pqderiv/subspace.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pqderiv {

struct NotAnIdeal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Coordinates of an algebra element relative to the algebra basis.
using Element = Vec;

/// A finite-dimensional associative algebra over Q, given by structure
/// constants c[i][j][k] (product of basis i and basis j expanded in basis k).
/// Associativity is validated eagerly; invalid constants are a hard error.
class Algebra {
public:
    Algebra(std::string name, std::vector<std::string> basis_labels, std::vector<Rat> structure,
            std::map<std::string, std::string> metadata = {});

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<Rat>& structure() const { return c_; }
    const std::map<std::string, std::string>& metadata() const { return metadata_; }

    const Rat& sc(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    Element zero() const { return Element(dim_); }
    Element basis_element(std::size_t i) const;
    std::string describe_element(const Element& x) const;

private:
    std::string name_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Rat> c_;
    std::map<std::string, std::string> metadata_;
};

/// Two-sided ideal of an algebra, carried as a canonical subspace. Closure
/// under multiplication by every basis element is verified at construction.
struct Ideal {
    Subspace space;
};

bool is_ideal(const Algebra& a, const Subspace& s);
Ideal make_ideal(const Algebra& a, const Subspace& s);  // throws NotAnIdeal

Element multiply(const Algebra& a, const Element& x, const Element& y);
/// Left-nested power x^n, n >= 1.
Element element_power(const Algebra& a, const Element& x, unsigned n);

/// Left and right regular representation matrices of x.
Matrix left_rep(const Algebra& a, const Element& x);
Matrix right_rep(const Algebra& a, const Element& x);

/// Exact solution space of L_x = R_x.
Subspace center(const Algebra& a);

struct Unitization {
    Algebra algebra;        // dim n+1, unit is the last basis vector
    std::size_t unit_index;
};

Unitization unitization(const Algebra& a);
Element embed_in_unitization(const Unitization& u, const Element& x);

/// E with x*E = x for all x, canonical under the elimination order, if any.
std::optional<Element> find_right_identity(const Algebra& a);
/// Two-sided identity, if any.
std::optional<Element> find_unit(const Algebra& a);

/// b with a*b = b*a = a + b, verified exactly before returning.
std::optional<Element> quasi_inverse(const Algebra& a, const Element& x);

/// Smallest n <= cap with x^n = 0, if any.
std::optional<unsigned> nilpotency_index(const Algebra& a, const Element& x, unsigned cap);

/// {gamma : x*gamma = 0 for all x}, returned with its two-sided closure verified.
Ideal right_annihilator(const Algebra& a);

}  // namespace pqderiv
