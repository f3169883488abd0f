#include "mink/bounds.hpp"

#include <cassert>

namespace mink {

namespace {

void require_prime(std::int64_t p, const char* who) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be prime");
}

void require_positive(int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": argument must be >= 1");
}

}  // namespace

int r_silverberg(int g, std::int64_t p) {
    require_positive(g, "r_silverberg");
    require_prime(p, "r_silverberg");
    int r = 0;
    for (std::int64_t d = p - 1; d <= 2 * g; d *= p) r += static_cast<int>(2 * g / d);
    return r;
}

FactoredInteger silverberg_product(int g) {
    require_positive(g, "silverberg_product");
    FactoredInteger out;
    out.mul_prime_power(2, 1);
    for (std::int64_t p : primes_up_to(2 * g + 1)) out.mul_prime_power(p, r_silverberg(g, p));
    return out;
}

bool is_fermat_prime(std::int64_t p) {
    if (p == 2 || !is_prime(p)) return false;
    std::int64_t q = p - 1;
    while (q % 2 == 0) q /= 2;
    return q == 1;
}

int r_prime(int g, std::int64_t p) {
    const int r = r_silverberg(g, p);
    if (p == 2) {
        assert(r >= g + 1);  // r(g,2) = 3g + v2(g!) so no clamp is needed
        return r - g - 1;
    }
    if (is_fermat_prime(p)) return r > 0 ? r - 1 : 0;
    return r;
}

FactoredInteger endofield_product(int g) {
    require_positive(g, "endofield_product");
    FactoredInteger out;
    for (std::int64_t p : primes_up_to(2 * g + 1)) out.mul_prime_power(p, r_prime(g, p));
    return out;
}

int r_gl_q(int n, std::int64_t p) {
    require_positive(n, "r_gl_q");
    require_prime(p, "r_gl_q");
    if (p == 2) {
        int r = n + 2 * (n / 2);
        for (int d = 4; d <= n; d *= 2) r += n / d;
        return r;
    }
    int r = 0;
    for (std::int64_t d = p - 1; d <= n; d *= p) r += static_cast<int>(n / d);
    return r;
}

int r_gl_k(int n, const FieldSpec& K, std::int64_t p) {
    require_positive(n, "r_gl_k");
    require_prime(p, "r_gl_k");
    if (p > 2) {
        const CycloLocalData loc = cyclo_mt(K, p);
        int r = loc.m * static_cast<int>(n / loc.t);
        for (std::int64_t d = p * loc.t; d <= n; d *= p) r += static_cast<int>(n / d);
        return r;
    }
    switch (two_adic_class(K)) {
        case TwoAdicClass::Rational:
        case TwoAdicClass::SqrtMinus2:
            return r_gl_q(n, 2);
        case TwoAdicClass::Sqrt2:
            return r_gl_q(n, 2) + n / 2;
        case TwoAdicClass::ContainsI: {
            int r = cyclo_mt(K, 2).m * n;
            for (int d = 2; d <= n; d *= 2) r += n / d;
            return r;
        }
        case TwoAdicClass::Other:
            break;
    }
    throw NoClosedFormError("r_gl_k: no closed form at p=2 for " + K.to_string() +
                            " (2-adic class OTHER); use the empirical engine");
}

FactoredInteger sp_subgroup_product(int g) {
    require_positive(g, "sp_subgroup_product");
    FactoredInteger out;
    out.mul_prime_power(2, r_gl_k(g, FieldSpec::parse("Q(i)"), 2));
    for (std::int64_t p : primes_up_to(2 * g + 1))
        if (p > 2) out.mul_prime_power(p, r_gl_q(2 * g, p));
    return out;
}

}  // namespace mink
