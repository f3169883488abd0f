#pragma once

// Exact rationals on 64-bit numerator/denominator, always reduced with a
// positive denominator, so equal values are representationally equal (the
// matrix closure hashes rely on that).  Intermediates run through 128 bits
// and narrow with an overflow check.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace mink {

namespace detail {

inline std::int64_t narrow128(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(what);
    return static_cast<std::int64_t>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

class Rational {
  public:
    Rational() = default;  // zero
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) {
            nn = -nn;
            dd = -dd;
        }
        const __int128 g = nn == 0 ? dd : detail::gcd128(nn, dd);
        num_ = detail::narrow128(nn / g, "Rational: numerator overflow");
        den_ = detail::narrow128(dd / g, "Rational: denominator overflow");
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return reduced(static_cast<__int128>(a.num_) * b.den_ +
                           static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduced(static_cast<__int128>(a.num_) * b.num_,
                       static_cast<__int128>(a.den_) * b.den_);
    }

    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    bool operator==(const Rational&) const = default;

    std::string to_string() const {
        std::string out = std::to_string(num_);
        if (den_ != 1) out += "/" + std::to_string(den_);
        return out;
    }

  private:
    static Rational reduced(__int128 n, __int128 d) {
        const __int128 g = n == 0 ? d : detail::gcd128(n, d);
        Rational r;
        r.num_ = detail::narrow128(n / g, "Rational: numerator overflow");
        r.den_ = detail::narrow128(d / g, "Rational: denominator overflow");
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace mink
