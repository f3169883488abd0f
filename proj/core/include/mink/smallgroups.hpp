#pragma once

// Wreath-product witnesses C_{p^m} wr S_k: Sylow exponent accounting,
// explicit rational matrix generators, exact breadth-first group closure,
// and the scalar-quotient bookkeeping that links the witnesses to the
// refined exponents.

#include <cstdint>
#include <optional>
#include <vector>

#include "mink/arith.hpp"
#include "mink/matrix.hpp"

namespace mink {

inline constexpr int kDefaultClosureCap = 20000;

struct MatrixGroupGens {
    std::size_t dimension = 1;
    std::vector<RatMatrix> generators;
};

// v_p(|C_{p^m} wr S_k|) = m*k + v_p(k!).
int wreath_sylow_exponent(std::int64_t p, int m, int k);

// |C_{p^m} wr S_k| = p^{mk} * k!  in factored form.
FactoredInteger wreath_order(std::int64_t p, int m, int k);

// v_p of the image of C_{p^m} wr S_k modulo its diagonal scalar subgroup
// (order p^m): m*k + v_p(k!) - m.
int scalar_quotient_exponent(std::int64_t p, int m, int k);

// C_p wr S_k inside GL(k(p-1), Q): one block is the companion matrix of the
// p-th cyclotomic polynomial, plus block permutations generating S_k.
MatrixGroupGens cp_wreath_generators(std::int64_t p, int k);

// C_4 wr S_k inside GL(2k, Q): one 90-degree rotation block plus S_k block
// permutations.
MatrixGroupGens c4_wreath_generators(int k);

// Breadth-first closure under right multiplication with exact arithmetic;
// nullopt once the element count reaches `cap` (the group may be infinite
// or merely large — the caller decides).  Rejects singular generators.
std::optional<FactoredInteger> closure_order(const MatrixGroupGens& G,
                                             int cap = kDefaultClosureCap);

// Order of C_{p^m} wr S_k modulo scalars, by closure over scalar-equivalence
// classes of monomial matrices with p^m-th root-of-unity entries (each class
// normalized by its first nonzero entry) — an independent check of
// scalar_quotient_exponent, expected value p^{m(k-1)} * k!.
std::optional<FactoredInteger> projective_wreath_order(std::int64_t p, int m, int k,
                                                       int cap = kDefaultClosureCap);

// M^T J M = J for J block diagonal in g copies of [[0,1],[-1,0]].
bool is_symplectic(const RatMatrix& M, int g);

}  // namespace mink
