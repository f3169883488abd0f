#include "mink/cyclofield.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mink/arith.hpp"

namespace mink {

namespace {

constexpr std::int64_t kMaxConductor = 1'000'000;

// Subgroup of (Z/n)^x generated by `gens` (n >= 2), fully enumerated, sorted.
std::vector<std::int64_t> close_subgroup(std::int64_t n, std::vector<std::int64_t> gens) {
    std::set<std::int64_t> seen{1};
    std::vector<std::int64_t> frontier{1};
    for (auto& g : gens) {
        g %= n;
        if (g < 0) g += n;
        if (std::gcd(g, n) != 1)
            throw std::invalid_argument("field spec: generator " + std::to_string(g) +
                                        " is not a unit mod " + std::to_string(n));
    }
    while (!frontier.empty()) {
        std::vector<std::int64_t> next;
        for (std::int64_t x : frontier)
            for (std::int64_t g : gens) {
                std::int64_t y = static_cast<std::int64_t>(
                    (static_cast<__int128>(x) * g) % n);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
    std::vector<std::int64_t> u;
    for (std::int64_t x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1) u.push_back(x);
    if (n == 1) u.push_back(0);
    return u;
}

bool contains(const std::vector<std::int64_t>& sorted, std::int64_t x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Image of H under reduction (Z/n)^x -> (Z/m)^x, m | n.
std::vector<std::int64_t> image_mod(const std::vector<std::int64_t>& H, std::int64_t m) {
    std::set<std::int64_t> img;
    for (std::int64_t h : H) img.insert(h % m);
    return {img.begin(), img.end()};
}

std::vector<std::int64_t> divisors_ascending(std::int64_t n) {
    std::vector<std::int64_t> ds;
    for (std::int64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    std::int64_t result = n;
    const FactoredInteger f = factor(n);
    for (const auto& [p, e] : f.factors()) result = result / p * (p - 1);
    return result;
}

std::string to_string(TwoAdicClass c) {
    switch (c) {
        case TwoAdicClass::Rational: return "RATIONAL";
        case TwoAdicClass::ContainsI: return "CONTAINS_I";
        case TwoAdicClass::Sqrt2: return "SQRT2";
        case TwoAdicClass::SqrtMinus2: return "SQRTMINUS2";
        case TwoAdicClass::Other: return "OTHER";
    }
    return "?";
}

FieldSpec FieldSpec::from_generators(std::int64_t conductor,
                                     const std::vector<std::int64_t>& gens) {
    if (conductor < 1) throw std::invalid_argument("field spec: conductor must be >= 1");
    if (conductor > kMaxConductor)
        throw std::invalid_argument("field spec: conductor too large");
    if (conductor == 1) return FieldSpec{1, {0}};

    std::vector<std::int64_t> H = close_subgroup(conductor, gens);

    // Reduce to the minimal conductor: the least divisor f of N such that the
    // kernel of (Z/N)^x -> (Z/f)^x is contained in H; then replace H by its
    // image mod f.  This makes (N, H) canonical per field, so that equality,
    // ramification tests, and 2-adic classification are exact.
    const std::vector<std::int64_t> units = units_mod(conductor);
    for (std::int64_t f : divisors_ascending(conductor)) {
        bool kernel_inside = true;
        for (std::int64_t x : units) {
            if (x % f == 1 % f && !contains(H, x)) {
                kernel_inside = false;
                break;
            }
        }
        if (kernel_inside) {
            if (f == 1) return FieldSpec{1, {0}};
            return FieldSpec{f, image_mod(H, f)};
        }
    }
    return FieldSpec{conductor, std::move(H)};  // unreachable: f = N always works
}

std::int64_t FieldSpec::degree() const {
    if (conductor_ == 1) return 1;
    return euler_phi(conductor_) / static_cast<std::int64_t>(subgroup_.size());
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "Q(i)") return from_generators(4, {});
    if (text == "Q(sqrt2)") return from_generators(8, {7});
    if (text == "Q(sqrt-2)") return from_generators(8, {3});

    auto parse_int = [](const std::string& s) -> std::int64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("field spec: bad integer '" + s + "'");
        return std::stoll(s);
    };

    if (text.rfind("Q(zeta_", 0) == 0 && text.back() == ')')
        return from_generators(parse_int(text.substr(7, text.size() - 8)), {});

    if (text.rfind("cyclo:", 0) == 0) {
        std::string rest = text.substr(6);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("field spec: expected cyclo:N:g1,g2,...");
        std::int64_t n = parse_int(rest.substr(0, colon));
        std::vector<std::int64_t> gens;
        std::string list = rest.substr(colon + 1);
        if (list.empty())
            throw std::invalid_argument("field spec: cyclo literal needs generators");
        std::size_t pos = 0;
        while (pos < list.size()) {
            auto comma = list.find(',', pos);
            if (comma == std::string::npos) comma = list.size();
            gens.push_back(parse_int(list.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return from_generators(n, gens);
    }

    throw std::invalid_argument("field spec: unrecognized '" + text + "'");
}

std::string FieldSpec::to_string() const {
    if (degree() == 1) return "Q";
    if (conductor_ == 4 && subgroup_ == std::vector<std::int64_t>{1}) return "Q(i)";
    if (conductor_ == 8 && subgroup_ == std::vector<std::int64_t>{1, 7}) return "Q(sqrt2)";
    if (conductor_ == 8 && subgroup_ == std::vector<std::int64_t>{1, 3}) return "Q(sqrt-2)";
    if (subgroup_ == std::vector<std::int64_t>{1})
        return "Q(zeta_" + std::to_string(conductor_) + ")";
    std::string out = "cyclo:" + std::to_string(conductor_) + ":";
    for (std::size_t i = 0; i < subgroup_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(subgroup_[i]);
    }
    return out;
}

CycloLocalData cyclo_mt(const FieldSpec& K, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("cyclo_mt: p must be prime");
    const int a = K.conductor() == 1 ? 0 : vp(K.conductor(), p);
    if (a == 0) {
        // K meets the p-power cyclotomic tower trivially.
        return {p, 1, p == 2 ? 1 : p - 1};
    }

    // [K meet Q(mu_{p^j}) : Q] = phi(p^j) / |H mod p^j| for j <= a, and the
    // chain is constant beyond j = a.
    std::vector<std::int64_t> degs(static_cast<std::size_t>(a) + 1, 1);
    std::int64_t pj = 1;
    for (int j = 1; j <= a; ++j) {
        pj *= p;
        degs[static_cast<std::size_t>(j)] =
            euler_phi(pj) / static_cast<std::int64_t>(image_mod(K.subgroup(), pj).size());
    }
    const std::int64_t final_deg = degs[static_cast<std::size_t>(a)];
    int m = a;
    for (int j = 1; j <= a; ++j)
        if (degs[static_cast<std::size_t>(j)] == final_deg) {
            m = j;
            break;
        }
    std::int64_t pm = 1;
    for (int j = 0; j < m; ++j) pm *= p;
    return {p, m, euler_phi(pm) / final_deg};
}

TwoAdicClass two_adic_class(const FieldSpec& K) {
    const int a = K.conductor() == 1 ? 0 : vp(K.conductor(), 2);
    if (a == 0) return TwoAdicClass::Rational;
    std::int64_t two_a = 1;
    for (int j = 0; j < a; ++j) two_a *= 2;

    const std::vector<std::int64_t> J = image_mod(K.subgroup(), two_a);
    if (static_cast<std::int64_t>(J.size()) == euler_phi(two_a)) return TwoAdicClass::Rational;

    // i is fixed by exactly the units congruent to 1 mod 4.
    if (std::all_of(J.begin(), J.end(), [](std::int64_t x) { return x % 4 == 1; }))
        return TwoAdicClass::ContainsI;

    if (a >= 3) {
        // The 2-adic part equals Q(sqrt2) (resp. Q(sqrt-2)) exactly when J is
        // the full preimage of {1,7} (resp. {1,3}) mod 8.  Deeper fields in
        // the tower have no closed-form exponent here and fall through.
        auto preimage_is = [&](std::int64_t r1, std::int64_t r2) {
            std::vector<std::int64_t> pre;
            for (std::int64_t x : units_mod(two_a))
                if (x % 8 == r1 || x % 8 == r2) pre.push_back(x);
            return J == pre;
        };
        if (preimage_is(1, 7)) return TwoAdicClass::Sqrt2;
        if (preimage_is(1, 3)) return TwoAdicClass::SqrtMinus2;
    }
    return TwoAdicClass::Other;
}

int residue_degree(const FieldSpec& K, std::int64_t l) {
    if (!is_prime(l)) throw std::invalid_argument("residue_degree: l must be prime");
    const std::int64_t n = K.conductor();
    if (n == 1) return 1;
    if (n % l == 0)
        throw RamifiedPrimeError("residue_degree: " + std::to_string(l) +
                                 " ramifies (divides conductor " + std::to_string(n) + ")");
    std::int64_t c = l % n;
    int f = 1;
    while (!contains(K.subgroup(), c)) {
        c = static_cast<std::int64_t>((static_cast<__int128>(c) * (l % n)) % n);
        ++f;
    }
    return f;
}

}  // namespace mink
