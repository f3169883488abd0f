#pragma once

// Closed-form divisibility exponents: the symplectic bound for abelian
// varieties of dimension g, its endomorphism-field refinement, and the
// Minkowski exponents for GL(n) over Q and over abelian fields K.

#include <cstdint>
#include <stdexcept>

#include "mink/arith.hpp"
#include "mink/cyclofield.hpp"

namespace mink {

// Requested exponent has no closed form here (p = 2 with 2-adic class
// OTHER); callers should fall back to the empirical engine.
struct NoClosedFormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// r(g,p) = sum_{i>=0} floor(2g / ((p-1) p^i)).
int r_silverberg(int g, std::int64_t p);

// 2 * prod_{p <= 2g+1} p^{r(g,p)}  (primes with p-1 > 2g contribute 0).
FactoredInteger silverberg_product(int g);

// Odd prime with p-1 a power of two (3, 5, 17, 257, 65537).
bool is_fermat_prime(std::int64_t p);

// r'(g,p): r-g-1 at p=2, max{0, r-1} at Fermat primes, r otherwise.
int r_prime(int g, std::int64_t p);

// prod_{p <= 2g+1} p^{r'(g,p)}.
FactoredInteger endofield_product(int g);

// Minkowski exponent of GL(n) over Q:
//   p > 2: sum_{i>=0} floor(n / (p^i (p-1)))
//   p = 2: n + 2*floor(n/2) + floor(n/4) + floor(n/8) + ...
int r_gl_q(int n, std::int64_t p);

// Minkowski exponent of GL(n) over K, via (m,t) = cyclo_mt(K,p) for odd p
// and the 2-adic class for p = 2.  Throws NoClosedFormError for class OTHER.
int r_gl_k(int n, const FieldSpec& K, std::int64_t p);

// Optimal divisibility bound for finite subgroups of Sp(2g, Q):
// 2-exponent r_gl_k(g, Q(i), 2), odd exponents r_gl_q(2g, p).
FactoredInteger sp_subgroup_product(int g);

}  // namespace mink
