#include "doctest.h"
#include "mink/bounds.hpp"
#include "mink/smallgroups.hpp"

#include <unordered_set>

using namespace mink;

TEST_CASE("Rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK_THROWS_AS((void)Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS((void)Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS((void)(Rational(1, 3037000500) * Rational(1, 3037000500)),
                    std::overflow_error);
}

TEST_CASE("RatMatrix parse and arithmetic") {
    const auto rot = RatMatrix::parse("0,-1;1,0");
    CHECK(rot.dim() == 2);
    CHECK(rot.at(0, 1) == Rational(-1));
    CHECK(rot.to_string() == "0,-1;1,0");
    CHECK(RatMatrix::parse(" 1/2 , 0 ; 0 , 2 ").at(0, 0) == Rational(1, 2));
    CHECK(rot * rot == RatMatrix::parse("-1,0;0,-1"));
    CHECK(RatMatrix::identity(3) * RatMatrix::identity(3) == RatMatrix::identity(3));
    CHECK(rot.transpose() == RatMatrix::parse("0,1;-1,0"));
    CHECK(rot.invertible());
    CHECK_FALSE(RatMatrix::parse("1,2;2,4").invertible());
    CHECK_THROWS_AS((void)RatMatrix::parse("1,2;3"), std::invalid_argument);
    CHECK_THROWS_AS((void)RatMatrix::parse("a,b;c,d"), std::invalid_argument);
    CHECK_THROWS_AS((void)RatMatrix::parse(""), std::invalid_argument);

    std::unordered_set<RatMatrix, RatMatrixHash> seen;
    seen.insert(RatMatrix::identity(2));
    seen.insert(rot);
    seen.insert(rot * rot);
    seen.insert(rot);  // duplicate
    CHECK(seen.size() == 3);
}

TEST_CASE("wreath exponent bookkeeping") {
    CHECK(wreath_sylow_exponent(2, 1, 2) == 3);
    CHECK(wreath_sylow_exponent(2, 2, 3) == 7);
    CHECK(wreath_sylow_exponent(3, 1, 3) == 4);
    CHECK(wreath_sylow_exponent(5, 1, 1) == 1);
    CHECK(wreath_sylow_exponent(3, 1, 0) == 0);
    CHECK(wreath_order(2, 1, 2).to_string() == "2^3");
    CHECK(wreath_order(3, 1, 2).to_string() == "2*3^2");
    CHECK(wreath_order(2, 2, 2).to_string() == "2^5");
    CHECK(wreath_order(5, 1, 1).to_string() == "5");
    for (int k = 1; k <= 10; ++k)
        CHECK(wreath_order(3, 2, k).exponent_of(3) == wreath_sylow_exponent(3, 2, k));
    CHECK(scalar_quotient_exponent(2, 2, 2) == 3);
    for (int g = 1; g <= 10; ++g)
        CHECK(scalar_quotient_exponent(2, 2, g) + 1 == r_prime(g, 2));
}

TEST_CASE("closure_order on wreath generators") {
    CHECK(closure_order(cp_wreath_generators(2, 1)).value().to_string() == "2");
    CHECK(closure_order(cp_wreath_generators(3, 1)).value().to_string() == "3");
    CHECK(closure_order(cp_wreath_generators(2, 2)).value() == wreath_order(2, 1, 2));
    CHECK(closure_order(cp_wreath_generators(3, 2)).value() == wreath_order(3, 1, 2));
    CHECK(closure_order(c4_wreath_generators(1)).value().to_string() == "2^2");
    CHECK(closure_order(c4_wreath_generators(2)).value() == wreath_order(2, 2, 2));
    const auto c32 = closure_order(cp_wreath_generators(3, 2)).value();
    CHECK(c32.exponent_of(3) == wreath_sylow_exponent(3, 1, 2));
}

TEST_CASE("closure_order caps and validation") {
    MatrixGroupGens doubling;
    doubling.dimension = 1;
    doubling.generators.push_back(RatMatrix::parse("2"));
    CHECK(closure_order(doubling, 100) == std::nullopt);

    MatrixGroupGens trivial;
    trivial.dimension = 2;
    trivial.generators.push_back(RatMatrix::identity(2));
    CHECK(closure_order(trivial).value().is_one());

    MatrixGroupGens singular;
    singular.dimension = 2;
    singular.generators.push_back(RatMatrix::parse("1,0;0,0"));
    CHECK_THROWS_AS((void)closure_order(singular), std::invalid_argument);

    MatrixGroupGens mixed;
    mixed.dimension = 2;
    mixed.generators.push_back(RatMatrix::identity(2));
    mixed.generators.push_back(RatMatrix::parse("-1"));
    CHECK_THROWS_AS((void)closure_order(mixed), std::invalid_argument);

    CHECK_THROWS_AS((void)closure_order(MatrixGroupGens{}), std::invalid_argument);
}

TEST_CASE("projective_wreath_order") {
    CHECK(projective_wreath_order(2, 2, 1).value().is_one());
    CHECK(projective_wreath_order(2, 2, 2).value().to_string() == "2^3");
    CHECK(projective_wreath_order(3, 1, 2).value().to_string() == "2*3");
    CHECK(projective_wreath_order(2, 1, 3).value().to_string() == "2^3*3");
    CHECK(projective_wreath_order(2, 2, 5, 10) == std::nullopt);
    for (int k = 1; k <= 3; ++k) {
        const auto got = projective_wreath_order(2, 2, k).value();
        CHECK(got.exponent_of(2) == scalar_quotient_exponent(2, 2, k));
    }
}

TEST_CASE("is_symplectic") {
    CHECK(is_symplectic(RatMatrix::parse("0,-1;1,0"), 1));
    CHECK(is_symplectic(RatMatrix::identity(4), 2));
    CHECK(is_symplectic(RatMatrix::parse("2,0;0,1/2"), 1));
    CHECK_FALSE(is_symplectic(RatMatrix::parse("2,0;0,1"), 1));
    for (const RatMatrix& g : c4_wreath_generators(2).generators)
        CHECK(is_symplectic(g, 2));
    for (const RatMatrix& g : c4_wreath_generators(3).generators)
        CHECK(is_symplectic(g, 3));
}
