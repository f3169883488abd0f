#include "doctest.h"
#include "mink/cyclofield.hpp"

using namespace mink;

TEST_CASE("FieldSpec presets") {
    const auto q = FieldSpec::parse("Q");
    CHECK(q.conductor() == 1);
    CHECK(q.degree() == 1);
    CHECK(q.to_string() == "Q");
    CHECK(q == FieldSpec::rationals());

    const auto qi = FieldSpec::parse("Q(i)");
    CHECK(qi.conductor() == 4);
    CHECK(qi.subgroup() == std::vector<std::int64_t>{1});
    CHECK(qi.degree() == 2);
    CHECK(qi.to_string() == "Q(i)");

    const auto s2 = FieldSpec::parse("Q(sqrt2)");
    CHECK(s2.conductor() == 8);
    CHECK(s2.subgroup() == std::vector<std::int64_t>{1, 7});
    const auto sm2 = FieldSpec::parse("Q(sqrt-2)");
    CHECK(sm2.conductor() == 8);
    CHECK(sm2.subgroup() == std::vector<std::int64_t>{1, 3});

    const auto z5 = FieldSpec::parse("Q(zeta_5)");
    CHECK(z5.conductor() == 5);
    CHECK(z5.degree() == 4);
    CHECK(FieldSpec::parse("Q(zeta_9)").degree() == 6);
}

TEST_CASE("FieldSpec conductor normalization") {
    // Full unit subgroups collapse to Q.
    CHECK(FieldSpec::parse("cyclo:12:5,7") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("cyclo:8:3,5") == FieldSpec::rationals());
    CHECK(FieldSpec::from_generators(12, {5, 7}) == FieldSpec::rationals());
    // Q(i) presented with conductor 12.
    CHECK(FieldSpec::parse("cyclo:12:5") == FieldSpec::parse("Q(i)"));
    // Genuinely conductor 12.
    const auto k12 = FieldSpec::parse("cyclo:12:11");
    CHECK(k12.conductor() == 12);
    CHECK(k12.subgroup() == std::vector<std::int64_t>{1, 11});
    CHECK(FieldSpec::parse("cyclo:4:1") == FieldSpec::parse("Q(i)"));
}

TEST_CASE("FieldSpec round trip") {
    for (const char* s : {"Q", "Q(i)", "Q(sqrt2)", "Q(sqrt-2)", "Q(zeta_7)", "cyclo:12:11",
                          "cyclo:16:1,7", "cyclo:9:8"}) {
        const auto K = FieldSpec::parse(s);
        CHECK(FieldSpec::parse(K.to_string()) == K);
    }
}

TEST_CASE("FieldSpec parse errors") {
    CHECK_THROWS_AS((void)FieldSpec::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS((void)FieldSpec::parse("cyclo:0:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)FieldSpec::parse("cyclo:4:2"), std::invalid_argument);
    CHECK_THROWS_AS((void)FieldSpec::parse("cyclo:4:"), std::invalid_argument);
    CHECK_THROWS_AS((void)FieldSpec::parse("cyclo:2000000:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)FieldSpec::from_generators(4, {2}), std::invalid_argument);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(100) == 40);
}

TEST_CASE("cyclo_mt") {
    const auto mt = [](const char* field, std::int64_t p) {
        return cyclo_mt(FieldSpec::parse(field), p);
    };
    CHECK(mt("Q", 3) == CycloLocalData{3, 1, 2});
    CHECK(mt("Q", 2) == CycloLocalData{2, 1, 1});
    CHECK(mt("Q(zeta_3)", 3) == CycloLocalData{3, 1, 1});
    CHECK(mt("Q(zeta_9)", 3) == CycloLocalData{3, 2, 1});
    CHECK(mt("cyclo:9:8", 3) == CycloLocalData{3, 2, 2});
    CHECK(mt("Q(i)", 2) == CycloLocalData{2, 2, 1});
    CHECK(mt("Q(sqrt2)", 2) == CycloLocalData{2, 3, 2});
    CHECK(mt("Q(zeta_5)", 3) == CycloLocalData{3, 1, 2});
    CHECK(mt("Q(zeta_5)", 5) == CycloLocalData{5, 1, 1});
    CHECK(mt("Q(zeta_7)", 7) == CycloLocalData{7, 1, 1});
}

TEST_CASE("two_adic_class") {
    const auto cls = [](const char* field) {
        return two_adic_class(FieldSpec::parse(field));
    };
    CHECK(cls("Q") == TwoAdicClass::Rational);
    CHECK(cls("Q(zeta_3)") == TwoAdicClass::Rational);
    CHECK(cls("Q(zeta_5)") == TwoAdicClass::Rational);
    CHECK(cls("Q(i)") == TwoAdicClass::ContainsI);
    CHECK(cls("Q(zeta_8)") == TwoAdicClass::ContainsI);
    CHECK(cls("Q(sqrt2)") == TwoAdicClass::Sqrt2);
    CHECK(cls("Q(sqrt-2)") == TwoAdicClass::SqrtMinus2);
    CHECK(cls("cyclo:16:1,7") == TwoAdicClass::Other);
    CHECK(cls("cyclo:16:1,15") == TwoAdicClass::Other);

    CHECK(to_string(TwoAdicClass::Rational) == "RATIONAL");
    CHECK(to_string(TwoAdicClass::ContainsI) == "CONTAINS_I");
    CHECK(to_string(TwoAdicClass::Sqrt2) == "SQRT2");
    CHECK(to_string(TwoAdicClass::SqrtMinus2) == "SQRTMINUS2");
    CHECK(to_string(TwoAdicClass::Other) == "OTHER");
}

TEST_CASE("residue_degree") {
    const auto qi = FieldSpec::parse("Q(i)");
    CHECK(residue_degree(FieldSpec::rationals(), 7) == 1);
    CHECK(residue_degree(qi, 5) == 1);   // 5 = 1 mod 4
    CHECK(residue_degree(qi, 3) == 2);   // 3 inert
    CHECK(residue_degree(FieldSpec::parse("Q(zeta_5)"), 2) == 4);
    CHECK(residue_degree(FieldSpec::parse("Q(zeta_9)"), 2) == 6);
    CHECK(residue_degree(FieldSpec::parse("cyclo:9:8"), 2) == 3);
    CHECK(residue_degree(FieldSpec::parse("Q(sqrt2)"), 7) == 1);   // 7 = 7 in H
    CHECK(residue_degree(FieldSpec::parse("Q(sqrt2)"), 3) == 2);
    CHECK_THROWS_AS((void)residue_degree(qi, 2), RamifiedPrimeError);
    CHECK_THROWS_AS((void)residue_degree(FieldSpec::parse("Q(zeta_9)"), 3),
                    RamifiedPrimeError);
}
