#include "doctest.h"
#include "mink/bounds.hpp"
#include "mink/gcd_engine.hpp"

using namespace mink;

namespace {
const ClassicalFamily kGl1{Family::GL, 1};
const ClassicalFamily kGl2{Family::GL, 2};
const ClassicalFamily kSp1{Family::Sp, 1};
}  // namespace

TEST_CASE("empirical_exponent reference sweeps") {
    const auto q = FieldSpec::rationals();
    const auto qi = FieldSpec::parse("Q(i)");

    const auto sp = empirical_exponent(kSp1, q, 2, 50, 10);
    CHECK(sp.exponent == 3);
    CHECK(sp.stable);
    CHECK(sp.primes_used == 49);  // 50 primes, l = 2 skipped
    CHECK(sp.window == 10);

    const auto gi = empirical_exponent(kGl1, qi, 2, 100, 20);
    CHECK(gi.exponent == 2);
    CHECK(gi.stable);
    CHECK(gi.primes_used == 99);

    // l = 2 contributes v_3(|GL(1,F_2)|) = 0 right away.
    const auto g3 = empirical_exponent(kGl1, q, 3, 50, 10);
    CHECK(g3.exponent == 0);
    CHECK(g3.stable);
    CHECK(g3.primes_used == 49);
}

TEST_CASE("empirical_exponent stability accounting") {
    // Budget == window can never accumulate a full stable streak.
    const auto r = empirical_exponent(kGl1, FieldSpec::rationals(), 2, 10, 10);
    CHECK(r.exponent == 1);
    CHECK_FALSE(r.stable);
    // Doubling the budget does not move a stabilized minimum.
    const auto a = empirical_exponent(kGl2, FieldSpec::parse("Q(i)"), 2, 100, 20);
    const auto b = empirical_exponent(kGl2, FieldSpec::parse("Q(i)"), 2, 200, 20);
    CHECK(a.stable);
    CHECK(b.stable);
    CHECK(a.exponent == b.exponent);
    CHECK(a.exponent == r_gl_k(2, FieldSpec::parse("Q(i)"), 2));
}

TEST_CASE("empirical_exponent validation") {
    const auto q = FieldSpec::rationals();
    CHECK_THROWS_AS((void)empirical_exponent(kGl1, q, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)empirical_exponent(kGl1, q, 3, 10, 20), std::invalid_argument);
    CHECK_THROWS_AS((void)empirical_exponent(kGl1, q, 3, 10, 0), std::invalid_argument);
    // Budget 1 at p=2 over Q: the only candidate (l=2) is skipped.
    CHECK_THROWS_AS((void)empirical_exponent(kGl1, q, 2, 1, 1), std::runtime_error);
}

TEST_CASE("empirical_exponent other families") {
    const auto q = FieldSpec::rationals();
    const auto sl = empirical_exponent({Family::SL, 1}, q, 3, 50, 10);
    CHECK(sl.exponent == 0);  // |SL(1,q)| = 1
    CHECK(sl.stable);
    const auto gu = empirical_exponent({Family::GU, 1}, q, 2, 50, 10);
    CHECK(gu.exponent == 1);  // min v_2(l+1) = 1 at l = 1 mod 4
    CHECK(gu.stable);
}

TEST_CASE("empirical_delta reference values") {
    CHECK(empirical_delta(kGl1, FieldSpec::parse("Q(zeta_3)"), 3).exponent == 1);
    CHECK(empirical_delta(kGl1, FieldSpec::parse("Q(i)"), 2).exponent == 2);
    CHECK(empirical_delta(kGl1, FieldSpec::rationals(), 2).exponent == 1);
}

TEST_CASE("empirical_bound assembly") {
    const auto q = FieldSpec::rationals();

    const auto sp = empirical_bound(kSp1, q, 7, 200, 20);
    CHECK(sp.bound.to_string() == "2^3*3");
    CHECK(sp.all_stable);
    CHECK(sp.components.size() == 4);  // p = 2, 3, 5, 7
    CHECK(sp.components[0].first == 2);
    CHECK(sp.components[0].second.exponent == 3);
    CHECK(sp.components[2].second.exponent == 0);

    const auto gl2 = empirical_bound(kGl2, q, 7, 200, 20);
    CHECK(gl2.bound == FactoredInteger::from_map({{2, 4}, {3, 1}}));

    const auto gl1 = empirical_bound(kGl1, q, 5, 200, 20);
    CHECK(gl1.bound.to_string() == "2");
}
