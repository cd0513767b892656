#pragma once

#include "pqderiv/matrix.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace pqderiv {

struct DegreeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Univariate polynomial over Q, coefficients lowest degree first, trimmed.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& c);
    static Poly x();

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const Rat& leading() const;

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly monic() const;
    /// Integer-coefficient scalar multiple with content 1 and positive leading
    /// coefficient.
    Poly primitive() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;
    /// (quotient, remainder) with deg(remainder) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    std::string str(const std::string& var = "x") const;

    bool operator==(const Poly& o) const = default;

private:
    std::vector<Rat> c_;
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd
/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b);

/// Monic char poly det(xI - m) via the division-free Faddeev-LeVerrier
/// recurrence (only divisions by integers occur).
Poly char_poly(const Matrix& m);

/// All rational roots with multiplicities, via the rational-root theorem on
/// the primitive integer form.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& p);

/// Factor into irreducibles over Q: squarefree decomposition, rational-root
/// stripping, then exhaustive Kronecker search for higher-degree factors.
/// Factors are primitive integer polynomials; the product matches the input
/// up to a rational unit. Throws DegreeCapExceeded when deg(p) > degree_cap.
std::vector<std::pair<Poly, int>> factor_polynomial(const Poly& p, int degree_cap = 12);

/// Yun squarefree decomposition: list of (squarefree part, multiplicity).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// p evaluated at a matrix argument.
Matrix poly_at_matrix(const Poly& p, const Matrix& m);

}  // namespace pqderiv
