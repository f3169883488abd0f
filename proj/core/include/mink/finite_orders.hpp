#pragma once

// Exact orders of classical groups over finite fields, in factored form,
// plus a valuation-only fast path that never materializes q^i +- 1 (those
// blow past word size long before the sweeps are done with them).

#include <cstdint>
#include <string>

#include "mink/arith.hpp"
#include "mink/cyclofield.hpp"

namespace mink {

enum class Family { GL, SL, Sp, GU };

std::string to_string(Family f);
Family parse_family(const std::string& name);  // "gl" | "sl" | "sp" | "gu"

// A classical group series: rank is n for GL/SL/GU and g for Sp(2g).
struct ClassicalFamily {
    Family family;
    int rank;
    bool operator==(const ClassicalFamily&) const = default;
};

std::string to_string(const ClassicalFamily& G);

// |G(F_q)| exactly factored:
//   GL(n,q) = q^{n(n-1)/2} prod_{i=1}^{n} (q^i - 1)
//   SL(n,q) = GL(n,q) / (q - 1)
//   Sp(2g,q) = q^{g^2} prod_{i=1}^{g} (q^{2i} - 1)
//   GU(n,q) = q^{n(n-1)/2} prod_{i=1}^{n} (q^i - (-1)^i)
// q must be a prime power and every q^i must fit in 64 bits.
FactoredInteger order_classical(const ClassicalFamily& G, std::int64_t q);

// Order of the Weil restriction of GL(n)/K at an unramified rational prime
// l: with f = residue_degree(K,l) and s = degree(K)/f, the point count is
// |GL(n, F_{l^f})|^s (one factor per prime above l).
FactoredInteger order_res_gl(int n, const FieldSpec& K, std::int64_t l);

// v_p(|G(F_{l^f})|) for prime l, computed modulo a saturating power of p,
// so l^f may be astronomically large.  Handles l = p via the q-power part.
int vp_order_classical(const ClassicalFamily& G, std::int64_t l, int f, std::int64_t p);

}  // namespace mink
