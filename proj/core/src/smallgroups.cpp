#include "mink/smallgroups.hpp"

#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace mink {

namespace {

void require_wreath_args(std::int64_t p, int m, int k, const char* who) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be prime");
    if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
    if (k < 0) throw std::invalid_argument(std::string(who) + ": k must be >= 0");
}

// Block permutation matrix sending block j to block perm[j], blocks of size b.
RatMatrix block_permutation(const std::vector<std::size_t>& perm, std::size_t b) {
    const std::size_t k = perm.size();
    RatMatrix m(k * b);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t r = 0; r < b; ++r) m.at(perm[j] * b + r, j * b + r) = Rational(1);
    return m;
}

void append_sym_generators(MatrixGroupGens& gens, std::size_t k, std::size_t b) {
    if (k < 2) return;
    std::vector<std::size_t> swap01(k);
    for (std::size_t j = 0; j < k; ++j) swap01[j] = j;
    std::swap(swap01[0], swap01[1]);
    gens.generators.push_back(block_permutation(swap01, b));
    if (k == 2) return;
    std::vector<std::size_t> cycle(k);
    for (std::size_t j = 0; j < k; ++j) cycle[j] = (j + 1) % k;
    gens.generators.push_back(block_permutation(cycle, b));
}

}  // namespace

int wreath_sylow_exponent(std::int64_t p, int m, int k) {
    require_wreath_args(p, m, k, "wreath_sylow_exponent");
    return m * k + legendre(k, p);
}

FactoredInteger wreath_order(std::int64_t p, int m, int k) {
    require_wreath_args(p, m, k, "wreath_order");
    if (k < 1) throw std::invalid_argument("wreath_order: k must be >= 1");
    FactoredInteger out;
    out.mul_prime_power(p, m * k);
    for (std::int64_t q : primes_up_to(k)) out.mul_prime_power(q, legendre(k, q));
    return out;
}

int scalar_quotient_exponent(std::int64_t p, int m, int k) {
    require_wreath_args(p, m, k, "scalar_quotient_exponent");
    if (k < 1) throw std::invalid_argument("scalar_quotient_exponent: k must be >= 1");
    return m * k + legendre(k, p) - m;
}

MatrixGroupGens cp_wreath_generators(std::int64_t p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("cp_wreath_generators: p must be prime");
    if (k < 1) throw std::invalid_argument("cp_wreath_generators: k must be >= 1");
    const std::size_t b = static_cast<std::size_t>(p - 1);
    MatrixGroupGens gens;
    gens.dimension = static_cast<std::size_t>(k) * b;

    // Companion matrix of 1 + x + ... + x^{p-1} in the first block.
    RatMatrix cyc = RatMatrix::identity(gens.dimension);
    for (std::size_t r = 0; r < b; ++r) {
        for (std::size_t c = 0; c < b; ++c) cyc.at(r, c) = Rational(0);
        cyc.at(r, b - 1) = Rational(-1);
        if (r > 0) cyc.at(r, r - 1) = Rational(1);
    }
    gens.generators.push_back(cyc);

    append_sym_generators(gens, static_cast<std::size_t>(k), b);
    return gens;
}

MatrixGroupGens c4_wreath_generators(int k) {
    if (k < 1) throw std::invalid_argument("c4_wreath_generators: k must be >= 1");
    MatrixGroupGens gens;
    gens.dimension = 2 * static_cast<std::size_t>(k);

    RatMatrix rot = RatMatrix::identity(gens.dimension);
    rot.at(0, 0) = Rational(0);
    rot.at(0, 1) = Rational(-1);
    rot.at(1, 0) = Rational(1);
    rot.at(1, 1) = Rational(0);
    gens.generators.push_back(rot);

    append_sym_generators(gens, static_cast<std::size_t>(k), 2);
    return gens;
}

std::optional<FactoredInteger> closure_order(const MatrixGroupGens& G, int cap) {
    if (cap < 1) throw std::invalid_argument("closure_order: cap must be >= 1");
    if (G.generators.empty())
        throw std::invalid_argument("closure_order: no generators");
    for (const RatMatrix& g : G.generators) {
        if (g.dim() != G.dimension)
            throw std::invalid_argument("closure_order: generator dimension mismatch");
        if (!g.invertible())
            throw std::invalid_argument("closure_order: singular generator");
    }

    std::unordered_set<RatMatrix, RatMatrixHash> seen;
    std::queue<RatMatrix> frontier;
    seen.insert(RatMatrix::identity(G.dimension));
    frontier.push(RatMatrix::identity(G.dimension));
    while (!frontier.empty()) {
        const RatMatrix x = std::move(frontier.front());
        frontier.pop();
        for (const RatMatrix& g : G.generators) {
            RatMatrix y(0);
            try {
                y = x * g;
            } catch (const std::overflow_error&) {
                // Entries outgrew 64 bits: the closure cannot be completed,
                // which gets the same verdict as hitting the cap.
                return std::nullopt;
            }
            if (!seen.insert(y).second) continue;
            if (static_cast<int>(seen.size()) >= cap) return std::nullopt;
            frontier.push(std::move(y));
        }
    }
    return factor(static_cast<std::int64_t>(seen.size()));
}

std::optional<FactoredInteger> projective_wreath_order(std::int64_t p, int m, int k, int cap) {
    require_wreath_args(p, m, k, "projective_wreath_order");
    if (k < 1) throw std::invalid_argument("projective_wreath_order: k must be >= 1");
    if (cap < 1) throw std::invalid_argument("projective_wreath_order: cap must be >= 1");

    std::int64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;

    // A monomial matrix over the p^m-th roots of unity is a pair
    // (permutation, exponent vector); multiplication is
    // (s,e)*(t,f) = (s.t, f + e.t).  Scalars are the constant vectors at the
    // identity permutation, so normalizing e by its first entry (subtract
    // e[0] from all) picks one representative per scalar class.
    using Elem = std::pair<std::vector<int>, std::vector<int>>;
    const auto normalize = [&](Elem x) {
        const int e0 = x.second[0];
        for (int& e : x.second) e = ((e - e0) % pm + pm) % pm;
        return x;
    };
    const auto mul = [&](const Elem& a, const Elem& b) {
        Elem out;
        out.first.resize(static_cast<std::size_t>(k));
        out.second.resize(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            out.first[j] = a.first[b.first[j]];
            out.second[j] = (b.second[j] + a.second[b.first[j]]) % static_cast<int>(pm);
        }
        return normalize(out);
    };

    std::vector<Elem> gens;
    Elem id;
    for (int j = 0; j < k; ++j) {
        id.first.push_back(j);
        id.second.push_back(0);
    }
    Elem zeta = id;
    zeta.second[0] = 1 % static_cast<int>(pm);
    gens.push_back(normalize(zeta));
    if (k >= 2) {
        Elem swap01 = id;
        std::swap(swap01.first[0], swap01.first[1]);
        gens.push_back(swap01);
        if (k >= 3) {
            Elem cycle = id;
            for (int j = 0; j < k; ++j) cycle.first[j] = (j + 1) % k;
            gens.push_back(cycle);
        }
    }

    std::set<Elem> seen{id};
    std::queue<Elem> frontier;
    frontier.push(id);
    while (!frontier.empty()) {
        const Elem x = std::move(frontier.front());
        frontier.pop();
        for (const Elem& g : gens) {
            Elem y = mul(x, g);
            if (!seen.insert(y).second) continue;
            if (static_cast<int>(seen.size()) >= cap) return std::nullopt;
            frontier.push(std::move(y));
        }
    }
    return factor(static_cast<std::int64_t>(seen.size()));
}

bool is_symplectic(const RatMatrix& M, int g) {
    if (g < 1 || M.dim() != 2 * static_cast<std::size_t>(g))
        throw std::invalid_argument("is_symplectic: M must be 2g x 2g");
    RatMatrix J(M.dim());
    for (int i = 0; i < g; ++i) {
        J.at(2 * static_cast<std::size_t>(i), 2 * static_cast<std::size_t>(i) + 1) = Rational(1);
        J.at(2 * static_cast<std::size_t>(i) + 1, 2 * static_cast<std::size_t>(i)) = Rational(-1);
    }
    return M.transpose() * J * M == J;
}

}  // namespace mink
