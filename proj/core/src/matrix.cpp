#include "mink/matrix.hpp"

#include <cctype>
#include <stdexcept>

namespace mink {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(text.substr(pos));
            return parts;
        }
        parts.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
}

std::int64_t parse_int(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i == s.size()) throw std::invalid_argument("matrix: bad integer '" + s + "'");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("matrix: bad integer '" + s + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

Rational parse_entry(std::string s) {
    std::erase(s, ' ');
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace

RatMatrix RatMatrix::identity(std::size_t dim) {
    RatMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::parse(const std::string& text) {
    const std::vector<std::string> rows = split(text, ';');
    const std::size_t dim = rows.size();
    RatMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const std::vector<std::string> entries = split(rows[r], ',');
        if (entries.size() != dim)
            throw std::invalid_argument("matrix: row " + std::to_string(r + 1) + " has " +
                                        std::to_string(entries.size()) + " entries, expected " +
                                        std::to_string(dim) + " (matrix must be square)");
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = parse_entry(entries[c]);
    }
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool RatMatrix::invertible() const {
    RatMatrix w = *this;
    for (std::size_t col = 0; col < dim_; ++col) {
        std::size_t pivot = col;
        while (pivot < dim_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == dim_) return false;
        if (pivot != col)
            for (std::size_t c = 0; c < dim_; ++c) std::swap(w.at(pivot, c), w.at(col, c));
        const Rational inv = w.at(col, col).inverse();
        for (std::size_t r = col + 1; r < dim_; ++r) {
            const Rational scale = w.at(r, col) * inv;
            if (scale.is_zero()) continue;
            for (std::size_t c = col; c < dim_; ++c)
                w.at(r, c) = w.at(r, c) - scale * w.at(col, c);
        }
    }
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix: dimension mismatch in product");
    RatMatrix out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
        for (std::size_t k = 0; k < a.dim_; ++k) {
            const Rational& l = a.at(r, k);
            if (l.is_zero()) continue;
            for (std::size_t c = 0; c < a.dim_; ++c)
                out.at(r, c) = out.at(r, c) + l * b.at(k, c);
        }
    return out;
}

std::string RatMatrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < dim_; ++r) {
        if (r) out += ';';
        for (std::size_t c = 0; c < dim_; ++c) {
            if (c) out += ',';
            out += at(r, c).to_string();
        }
    }
    return out;
}

std::size_t RatMatrixHash::operator()(const RatMatrix& m) const {
    std::size_t h = 1469598103934665603ull;
    const auto mix = [&h](std::int64_t v) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    };
    mix(static_cast<std::int64_t>(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) {
            mix(m.at(r, c).num());
            mix(m.at(r, c).den());
        }
    return h;
}

}  // namespace mink
