#include "mink/gcd_engine.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace mink {

namespace {

// The first `count` rational primes: sieve to the usual n-th prime
// overestimate, doubling on shortfall.
std::vector<std::int64_t> first_primes(int count) {
    const double c = std::max(count, 6);
    std::int64_t bound =
        static_cast<std::int64_t>(1.2 * c * (std::log(c) + std::log(std::log(c)))) + 16;
    for (;;) {
        std::vector<std::int64_t> ps = primes_up_to(bound);
        if (static_cast<int>(ps.size()) >= count) {
            ps.resize(static_cast<std::size_t>(count));
            return ps;
        }
        bound *= 2;
    }
}

}  // namespace

EmpiricalResult empirical_exponent(const ClassicalFamily& G, const FieldSpec& K,
                                   std::int64_t p, int budget, int window) {
    if (!is_prime(p)) throw std::invalid_argument("empirical_exponent: p must be prime");
    if (window < 1 || budget < window)
        throw std::invalid_argument("empirical_exponent: need budget >= window >= 1");

    const std::int64_t conductor = K.conductor();
    EmpiricalResult out;
    out.window = window;
    int min_v = std::numeric_limits<int>::max();
    int streak = 0;  // trailing samples that did not lower the minimum
    for (std::int64_t l : first_primes(budget)) {
        if (l == p || conductor % l == 0) continue;
        const int v = vp_order_classical(G, l, residue_degree(K, l), p);
        ++out.primes_used;
        if (v < min_v) {
            min_v = v;
            streak = 0;
        } else {
            ++streak;
        }
    }
    if (out.primes_used == 0)
        throw std::runtime_error("empirical_exponent: no admissible prime within budget");
    out.exponent = min_v;
    out.stable = streak >= window;
    return out;
}

EmpiricalResult empirical_delta(const ClassicalFamily& G, const FieldSpec& K,
                                std::int64_t p, int budget, int window) {
    return empirical_exponent(G, K, p, budget, window);
}

EmpiricalBound empirical_bound(const ClassicalFamily& G, const FieldSpec& K,
                               std::int64_t p_max, int budget, int window) {
    if (p_max < 2) throw std::invalid_argument("empirical_bound: p_max must be >= 2");
    const std::vector<std::int64_t> ps = primes_up_to(p_max);

    std::vector<std::future<EmpiricalResult>> jobs;
    jobs.reserve(ps.size());
    for (std::int64_t p : ps)
        jobs.push_back(std::async(std::launch::async, [&G, &K, p, budget, window] {
            return empirical_exponent(G, K, p, budget, window);
        }));

    EmpiricalBound out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const EmpiricalResult r = jobs[i].get();
        out.components.emplace_back(ps[i], r);
        out.all_stable = out.all_stable && r.stable;
        out.bound.mul_prime_power(ps[i], r.exponent);
    }
    return out;
}

}  // namespace mink
