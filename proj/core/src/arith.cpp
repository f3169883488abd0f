#include "mink/arith.hpp"

#include <limits>

namespace mink {

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::int64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

int vp(std::int64_t x, std::int64_t p) {
    if (x < 1) throw std::invalid_argument("vp: x must be positive");
    if (p < 2) throw std::invalid_argument("vp: p must be >= 2");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

int legendre(std::int64_t n, std::int64_t p) {
    if (n < 0) throw std::invalid_argument("legendre: n must be >= 0");
    if (p < 2) throw std::invalid_argument("legendre: p must be >= 2");
    int sum = 0;
    while (n > 0) {
        n /= p;
        sum += static_cast<int>(n);
    }
    return sum;
}

FactoredInteger FactoredInteger::from_map(std::map<std::int64_t, int> factors) {
    for (const auto& [p, e] : factors) {
        if (!is_prime(p))
            throw std::invalid_argument("FactoredInteger: key " + std::to_string(p) +
                                        " is not prime");
        if (e < 1)
            throw std::invalid_argument("FactoredInteger: exponent of " + std::to_string(p) +
                                        " must be >= 1");
    }
    FactoredInteger f;
    f.factors_ = std::move(factors);
    return f;
}

int FactoredInteger::exponent_of(std::int64_t p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
}

void FactoredInteger::mul_prime_power(std::int64_t p, int e) {
    if (e < 0) throw std::invalid_argument("mul_prime_power: negative exponent");
    if (e == 0) return;
    if (!is_prime(p)) throw std::invalid_argument("mul_prime_power: p must be prime");
    factors_[p] += e;
}

FactoredInteger FactoredInteger::pow(int s) const {
    if (s < 0) throw std::invalid_argument("pow: negative exponent");
    FactoredInteger out;
    if (s == 0) return out;
    for (const auto& [p, e] : factors_) out.factors_[p] = e * s;
    return out;
}

std::int64_t FactoredInteger::value() const {
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    std::int64_t acc = 1;
    for (const auto& [p, e] : factors_) {
        for (int i = 0; i < e; ++i) {
            if (acc > kMax / p) throw std::overflow_error("FactoredInteger::value overflows");
            acc *= p;
        }
    }
    return acc;
}

std::string FactoredInteger::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : factors_) {
        if (!out.empty()) out += '*';
        out += std::to_string(p);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

FactoredInteger factor(std::int64_t x, std::int64_t budget) {
    if (x < 1) throw std::invalid_argument("factor: x must be positive");
    std::map<std::int64_t, int> fs;
    for (std::int64_t d = 2; d * d <= x; d += (d == 2 ? 1 : 2)) {
        if (d > budget)
            throw FactorBudgetError("factor: trial divisor " + std::to_string(d) +
                                    " exceeds budget " + std::to_string(budget));
        while (x % d == 0) {
            x /= d;
            ++fs[d];
        }
    }
    if (x > 1) ++fs[x];  // certified prime: no divisor up to sqrt
    return FactoredInteger{FactoredInteger::Unchecked{}, std::move(fs)};
}

FactoredInteger fact_mul(const FactoredInteger& a, const FactoredInteger& b) {
    std::map<std::int64_t, int> fs = a.factors();
    for (const auto& [p, e] : b.factors()) fs[p] += e;
    return FactoredInteger{FactoredInteger::Unchecked{}, std::move(fs)};
}

FactoredInteger fact_gcd(const FactoredInteger& a, const FactoredInteger& b) {
    std::map<std::int64_t, int> fs;
    for (const auto& [p, e] : a.factors()) {
        int eb = b.exponent_of(p);
        if (eb > 0) fs[p] = std::min(e, eb);
    }
    return FactoredInteger{FactoredInteger::Unchecked{}, std::move(fs)};
}

FactoredInteger fact_div(const FactoredInteger& a, const FactoredInteger& b) {
    std::map<std::int64_t, int> fs = a.factors();
    for (const auto& [p, e] : b.factors()) {
        auto it = fs.find(p);
        if (it == fs.end() || it->second < e)
            throw std::domain_error("fact_div: not an exact divisor");
        it->second -= e;
        if (it->second == 0) fs.erase(it);
    }
    return FactoredInteger{FactoredInteger::Unchecked{}, std::move(fs)};
}

}  // namespace mink
