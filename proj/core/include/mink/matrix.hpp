#pragma once

// Dense square matrices with exact rational entries: just enough linear
// algebra for group closures and symplectic-form checks.  Text grammar (CLI
// and tests): rows separated by ';', entries by ',', entries as 'a' or
// 'a/b' — e.g. "0,-1;1,0".

#include <cstddef>
#include <string>
#include <vector>

#include "mink/rational.hpp"

namespace mink {

class RatMatrix {
  public:
    explicit RatMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static RatMatrix identity(std::size_t dim);
    static RatMatrix parse(const std::string& text);

    std::size_t dim() const { return dim_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    RatMatrix transpose() const;
    bool invertible() const;  // exact Gaussian elimination

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    bool operator==(const RatMatrix&) const = default;

    std::string to_string() const;  // same grammar parse() accepts

  private:
    std::size_t dim_;
    std::vector<Rational> a_;
};

// FNV over the (already canonical) numerator/denominator pairs.
struct RatMatrixHash {
    std::size_t operator()(const RatMatrix& m) const;
};

}  // namespace mink
