#pragma once

// The empirical engine: recover divisibility exponents as stabilized minima
// of v_p(|G(F_q)|) over residue fields of K, giving ground truth wherever
// no closed form exists (and a cross-check everywhere else).

#include <cstdint>
#include <utility>
#include <vector>

#include "mink/arith.hpp"
#include "mink/cyclofield.hpp"
#include "mink/finite_orders.hpp"

namespace mink {

inline constexpr int kDefaultBudget = 500;
inline constexpr int kDefaultWindow = 50;

struct EmpiricalResult {
    int exponent = 0;     // running minimum at the end of the sweep
    int primes_used = 0;  // admissible primes actually sampled
    bool stable = false;  // minimum unchanged over the final `window` samples
    int window = 0;
    bool operator==(const EmpiricalResult&) const = default;
};

// Sweeps the first `budget` rational primes l ascending, skipping l = p and
// l | conductor(K); for each, takes v_p of |G| over the residue field
// F_{l^f} (f = residue degree of l in K) and keeps the running minimum.
// Every congruence class of l mod conductor recurs infinitely often, so a
// window-stable minimum is the cofinite gcd exponent.  The result is an
// upper bound for the true exponent by construction.
EmpiricalResult empirical_exponent(const ClassicalFamily& G, const FieldSpec& K,
                                   std::int64_t p, int budget = kDefaultBudget,
                                   int window = kDefaultWindow);

// Identical sweep; named separately for its use on connected groups, where
// the stabilized minimum is the p-divisibility guaranteed in every
// reduction (the running minimum realizes the sup and inf forms at once,
// since dropping finitely many primes cannot change which classes recur).
EmpiricalResult empirical_delta(const ClassicalFamily& G, const FieldSpec& K,
                                std::int64_t p, int budget = kDefaultBudget,
                                int window = kDefaultWindow);

struct EmpiricalBound {
    FactoredInteger bound;  // prod p^exponent, zero exponents omitted
    std::vector<std::pair<std::int64_t, EmpiricalResult>> components;  // per p
    bool all_stable = true;
};

// One sweep per prime p <= p_max, run concurrently; the assembly order is
// fixed, so the result is schedule-independent.
EmpiricalBound empirical_bound(const ClassicalFamily& G, const FieldSpec& K,
                               std::int64_t p_max, int budget = kDefaultBudget,
                               int window = kDefaultWindow);

}  // namespace mink
