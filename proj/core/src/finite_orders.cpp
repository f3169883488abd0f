#include "mink/finite_orders.hpp"

#include <limits>
#include <map>
#include <tuple>

namespace mink {

namespace {

std::int64_t checked_pow(std::int64_t q, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / q)
            throw std::overflow_error("order_classical: q^i exceeds 64 bits");
        r *= q;
    }
    return r;
}

// factor(q^i - sign), memoized per thread: a sweep revisits the same terms
// for every prime p it handles.
const FactoredInteger& factored_term(std::int64_t q, int i, int sign) {
    thread_local std::map<std::tuple<std::int64_t, int, int>, FactoredInteger> memo;
    const auto key = std::make_tuple(q, i, sign);
    auto it = memo.find(key);
    if (it == memo.end())
        it = memo.emplace(key, factor(checked_pow(q, i) - sign)).first;
    return it->second;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * base % mod);
        base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

// Largest power p^E <= 2^62.
std::int64_t saturating_modulus(std::int64_t p) {
    const std::int64_t cap = std::int64_t{1} << 62;
    std::int64_t m = p;
    while (m <= cap / p) m *= p;
    return m;
}

// v_p(l^k - 1) if minus, else v_p(l^k + 1), for l prime to p.  Exact as
// long as the true valuation stays below the ~62-bit saturating modulus,
// which no group-order valuation in these sweeps approaches.
int vp_term(std::int64_t l, std::int64_t k, std::int64_t p, bool minus) {
    const std::int64_t M = saturating_modulus(p);
    const std::int64_t r = powmod(l, k, M);
    if (minus) {
        if (r == 1) throw std::overflow_error("vp_term: valuation saturates the modulus");
        return vp(r - 1, p);
    }
    if (r == M - 1) throw std::overflow_error("vp_term: valuation saturates the modulus");
    return vp(r + 1, p);
}

long long q_power_exponent(const ClassicalFamily& G) {
    const long long n = G.rank;
    return G.family == Family::Sp ? n * n : n * (n - 1) / 2;
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::SL: return "sl";
        case Family::Sp: return "sp";
        case Family::GU: return "gu";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "gl") return Family::GL;
    if (name == "sl") return Family::SL;
    if (name == "sp") return Family::Sp;
    if (name == "gu") return Family::GU;
    throw std::invalid_argument("parse_family: unknown family '" + name + "'");
}

std::string to_string(const ClassicalFamily& G) {
    return to_string(G.family) + ":" + std::to_string(G.rank);
}

FactoredInteger order_classical(const ClassicalFamily& G, std::int64_t q) {
    if (G.rank < 1) throw std::invalid_argument("order_classical: rank must be >= 1");
    if (q < 2) throw std::invalid_argument("order_classical: q must be >= 2");
    const auto qf = factor(q).factors();
    if (qf.size() != 1) throw std::invalid_argument("order_classical: q must be a prime power");
    const std::int64_t l = qf.begin()->first;
    const int f = qf.begin()->second;
    const int n = G.rank;

    FactoredInteger out;
    out.mul_prime_power(l, static_cast<int>(f * q_power_exponent(G)));
    switch (G.family) {
        case Family::GL:
            for (int i = 1; i <= n; ++i) out = fact_mul(out, factored_term(q, i, +1));
            break;
        case Family::SL:
            for (int i = 2; i <= n; ++i) out = fact_mul(out, factored_term(q, i, +1));
            break;
        case Family::Sp:
            for (int i = 1; i <= n; ++i) out = fact_mul(out, factored_term(q, 2 * i, +1));
            break;
        case Family::GU:
            for (int i = 1; i <= n; ++i)
                out = fact_mul(out, factored_term(q, i, i % 2 ? -1 : +1));
            break;
    }
    return out;
}

FactoredInteger order_res_gl(int n, const FieldSpec& K, std::int64_t l) {
    const int f = residue_degree(K, l);  // rejects ramified l
    const int s = static_cast<int>(K.degree()) / f;
    return order_classical({Family::GL, n}, checked_pow(l, f)).pow(s);
}

int vp_order_classical(const ClassicalFamily& G, std::int64_t l, int f, std::int64_t p) {
    if (G.rank < 1) throw std::invalid_argument("vp_order_classical: rank must be >= 1");
    if (f < 1) throw std::invalid_argument("vp_order_classical: f must be >= 1");
    if (!is_prime(l) || !is_prime(p))
        throw std::invalid_argument("vp_order_classical: l and p must be prime");

    // l = p: all cyclotomic-style terms are prime to p, leaving the q-power.
    if (l == p) return static_cast<int>(f * q_power_exponent(G));

    const int n = G.rank;
    int v = 0;
    switch (G.family) {
        case Family::GL:
            for (int i = 1; i <= n; ++i) v += vp_term(l, static_cast<std::int64_t>(f) * i, p, true);
            break;
        case Family::SL:
            for (int i = 2; i <= n; ++i) v += vp_term(l, static_cast<std::int64_t>(f) * i, p, true);
            break;
        case Family::Sp:
            for (int i = 1; i <= n; ++i)
                v += vp_term(l, 2 * static_cast<std::int64_t>(f) * i, p, true);
            break;
        case Family::GU:
            for (int i = 1; i <= n; ++i)
                v += vp_term(l, static_cast<std::int64_t>(f) * i, p, i % 2 == 0);
            break;
    }
    return v;
}

}  // namespace mink
