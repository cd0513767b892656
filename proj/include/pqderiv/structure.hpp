#pragma once

#include "pqderiv/derivation.hpp"

#include <cstdint>

namespace pqderiv {

struct SeparatingElementNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A/I with a multiplicative projection and a linear section.
struct QuotientAlgebra {
    Algebra quotient;
    Ideal ideal;
    Matrix projection;  // dim(A/I) x dim(A)
    Matrix section;     // dim(A) x dim(A/I), projection * section = identity
};

/// Jacobson radical by the char-0 trace-form criterion on the unitization,
/// verified nilpotent and maximal before returning.
Ideal radical(const Algebra& a);

struct Nilradical {
    Ideal ideal;
    unsigned nilpotency_exponent = 1;  // smallest m with Ideal^m = 0
};

/// Equals the radical at finite dimension over char 0, returned with an
/// explicit nilpotency certificate.
Nilradical nilradical(const Algebra& a);

/// Smallest two-sided ideal containing the generators.
Ideal ideal_closure(const Algebra& a, const std::vector<Element>& generators);

QuotientAlgebra quotient(const Algebra& a, const Ideal& ideal);

bool is_semiprime(const Algebra& a);

/// Wedderburn data of A/rad: primitive central idempotents with block
/// dimensions, and the primitive ideals of A as preimages of the
/// block-complement kernels.
struct BlockDecomposition {
    std::vector<std::pair<Element, std::size_t>> blocks;  // idempotent of A/rad, block dim
    std::vector<Ideal> primitive_ideals;
};

BlockDecomposition primitive_ideals(const Algebra& a, int degree_cap = 12,
                                    std::uint64_t seed = 0, int max_retries = 32);

/// d(I) subseteq I, checked on a basis of I.
bool check_ideal_invariance(const Algebra& a, const LinearMap& d, const Ideal& ideal);

}  // namespace pqderiv
