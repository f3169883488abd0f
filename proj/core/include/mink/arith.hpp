#pragma once

// Exact small-integer number theory: sieves, valuations, trial-division
// factoring, and the FactoredInteger type used as the common currency for
// every bound in the library (group orders routinely overflow word size,
// their factorizations never do).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mink {

// Thrown when trial division would need a divisor above the configured
// budget.  Factoring either returns a complete, certified factorization or
// fails loudly; it never guesses.
struct FactorBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kTrialDivisionBudget = 10'000'000;

// All primes <= bound, ascending.  Plain Eratosthenes; bound is desk scale.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

// Deterministic primality by trial division.  Exact for all int64 inputs,
// intended for desk-scale arguments.
bool is_prime(std::int64_t x);

// p-adic valuation of x (x >= 1, p >= 2).
int vp(std::int64_t x, std::int64_t p);

// v_p(n!) = sum_{i>=1} floor(n/p^i)  (Legendre's formula), n >= 0.
int legendre(std::int64_t n, std::int64_t p);

// A positive integer stored as its prime factorization.  Empty map is 1.
// Every key is certified prime and every exponent is >= 1; the canonical
// rendering is e.g. "2^4*3^2*5" (exponent 1 omitted, "1" for the empty
// product).
class FactoredInteger {
  public:
    FactoredInteger() = default;  // the integer 1

    // Validates: keys prime, exponents >= 1.
    static FactoredInteger from_map(std::map<std::int64_t, int> factors);

    static FactoredInteger one() { return FactoredInteger{}; }

    const std::map<std::int64_t, int>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int exponent_of(std::int64_t p) const;

    // Multiplies in p^e (p prime, e >= 0).
    void mul_prime_power(std::int64_t p, int e);

    // Exponentwise scaling: this^s, s >= 0.
    FactoredInteger pow(int s) const;

    // The plain integer value; throws std::overflow_error past int64 range.
    std::int64_t value() const;

    std::string to_string() const;

    bool operator==(const FactoredInteger&) const = default;

  private:
    struct Unchecked {};
    FactoredInteger(Unchecked, std::map<std::int64_t, int> factors)
        : factors_(std::move(factors)) {}

    friend FactoredInteger factor(std::int64_t, std::int64_t);
    friend FactoredInteger fact_mul(const FactoredInteger&, const FactoredInteger&);
    friend FactoredInteger fact_gcd(const FactoredInteger&, const FactoredInteger&);
    friend FactoredInteger fact_div(const FactoredInteger&, const FactoredInteger&);

    std::map<std::int64_t, int> factors_;
};

// Complete factorization of x >= 1 by trial division.  Throws
// FactorBudgetError if a divisor beyond `budget` would be required.
FactoredInteger factor(std::int64_t x, std::int64_t budget = kTrialDivisionBudget);

FactoredInteger fact_mul(const FactoredInteger& a, const FactoredInteger& b);
FactoredInteger fact_gcd(const FactoredInteger& a, const FactoredInteger& b);

// Exact quotient a/b; throws std::domain_error if b does not divide a.
FactoredInteger fact_div(const FactoredInteger& a, const FactoredInteger& b);

}  // namespace mink
