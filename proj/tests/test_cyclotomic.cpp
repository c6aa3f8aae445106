#include "doctest.h"
#include "nforge/cyclotomic.hpp"
#include "nforge/errors.hpp"

#include <numeric>
#include <random>

using namespace nforge;

namespace {

Cyc random_element(std::mt19937& rng, unsigned M) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Cyc x = Cyc::zero(M);
    for (long k = 0; k < static_cast<long>(M); ++k)
        if (int c = coef(rng)) x += Cyc(c) * Cyc::root(M, k);
    return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials, low degree first") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<mpz_class>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    for (unsigned M : {1u, 5u, 12u, 48u, 96u}) CHECK(cyclotomic_polynomial(M).size() == euler_phi(M) + 1);
}

TEST_CASE("roots of unity") {
    CHECK(Cyc::root(4, 1).pow(2) == Cyc::root(4, 2));
    CHECK(Cyc::root(4, 2) == Cyc(-1));
    CHECK(Cyc::root(8, 4) == Cyc(-1));
    CHECK(Cyc::root(8, 0).is_one());
    CHECK(Cyc::root(8, -1) == Cyc::root(8, 7));
    CHECK(Cyc::root(24, 6) == Cyc::root(4, 1));
}

TEST_CASE("field operations") {
    CHECK((Cyc::root(8, 1) * Cyc::root(8, 7)).is_one());
    CHECK(Cyc::root(3, 1) + Cyc::root(3, 2) == Cyc(-1));
    CHECK(Cyc::root(12, 1).inv() == Cyc::root(12, 11));
    const Cyc x = Cyc::root(12, 1) + Cyc(3);
    CHECK((x * x.inv()).is_one());
    CHECK_THROWS_AS(Cyc::zero(8).inv(), DivisionByZero);
    CHECK((Cyc::root(4, 1) + Cyc::root(3, 1)).order() == 12);
}

TEST_CASE("mixed orders promote and demote") {
    const Cyc i = Cyc::root(4, 1).promoted(24);
    CHECK(i.order() == 24);
    REQUIRE(i.demoted(4).has_value());
    CHECK(*i.demoted(4) == Cyc::root(4, 1));
    CHECK_FALSE(Cyc::root(8, 1).promoted(24).demoted(12).has_value());
}

TEST_CASE("monomial exponents") {
    CHECK(Cyc(-1).promoted(8).monomial_exponent() == 4);
    CHECK_FALSE((Cyc::root(8, 1) + Cyc(1)).monomial_exponent().has_value());
    CHECK(Cyc::one(8).monomial_exponent() == 0);
    CHECK(Cyc::root(48, 17).monomial_exponent() == 17);
}

TEST_CASE("multiplicative orders") {
    CHECK(Cyc::root(12, 2).multiplicative_order() == 6u);
    CHECK(Cyc(-1).multiplicative_order() == 2u);
    CHECK_FALSE(Cyc(2).multiplicative_order().has_value());
    for (unsigned M = 1; M <= 48; ++M)
        for (long k = 0; k < static_cast<long>(M); ++k)
            CHECK(Cyc::root(M, k).multiplicative_order() == M / std::gcd<unsigned long>(M, k));
}

TEST_CASE("as_root_of_unity") {
    const auto r = as_root_of_unity(Cyc::root(12, 9));
    REQUIRE(r);
    CHECK(r->multiplicative_order() == 4);
    CHECK(r->to_cyc() == Cyc::root(4, 3));
    CHECK_FALSE(as_root_of_unity(Cyc(2)).has_value());
    CHECK(RootOfUnity::make(8, 4) == RootOfUnity::minus_one());
    CHECK(RootOfUnity::make(6, 1).multiplicative_order() == 6);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    for (unsigned M : {5u, 8u, 12u, 24u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Cyc a = random_element(rng, M), b = random_element(rng, M), c = random_element(rng, M);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}
