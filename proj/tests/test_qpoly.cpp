#include <doctest.h>

#include <gmpxx.h>

#include "jlq/qpoly.hpp"

using namespace jlq;

namespace {

struct Rng {
    gmp_randclass state{gmp_randinit_default};
    Rng() { state.seed(20240517ul); }
    unsigned long below(unsigned long bound) {
        return BigInt(state.get_z_range(BigInt(bound))).get_ui();
    }
    BigInt integer(unsigned bits) {
        BigInt v = state.get_z_bits(bits);
        if (below(2)) v = -v;
        return v;
    }
    IntPoly poly(unsigned max_deg, unsigned bits) {
        std::vector<BigInt> cs(1 + below(max_deg + 1));
        for (auto& c : cs) c = integer(bits);
        return IntPoly(std::move(cs));
    }
    LaurentPoly laurent(unsigned max_deg, unsigned bits) {
        return LaurentPoly(poly(max_deg, bits), static_cast<long>(below(9)) - 4);
    }
    RatPoly rational(unsigned max_deg, unsigned bits) {
        BigInt den = state.get_z_bits(bits / 4);
        if (den == 0) den = 1;
        return RatPoly(poly(max_deg, bits), den);
    }
};

}  // namespace

TEST_CASE("basic arithmetic") {
    const IntPoly one_plus_q = IntPoly::parse("1,1");
    CHECK((one_plus_q * one_plus_q).to_string() == "1,2,1");
    CHECK((one_plus_q - one_plus_q).is_zero());

    // q^{-1} (q + q^2) = 1 + q
    const LaurentPoly shifted =
        LaurentPoly::monomial(1, -1) * LaurentPoly::from(IntPoly::parse("0,1,1"));
    CHECK(shifted.body() == one_plus_q);
    CHECK(shifted.offset() == 0);
    CHECK(shifted.finalize() == one_plus_q);
}

TEST_CASE("q analogue") {
    CHECK(q_analogue(0).is_zero());
    CHECK(q_analogue(1).to_string() == "1");
    CHECK(q_analogue(3).to_string() == "1,1,1");
    for (unsigned n = 0; n <= 12; ++n) CHECK(q_analogue(n).evaluate(1) == n);
}

TEST_CASE("finalize") {
    CHECK(LaurentPoly(IntPoly::parse("1,1"), 0).finalize().to_string() == "1,1");
    // q^{-2} (3q^2 + 2q^3 + q^4) = 3 + 2q + q^2
    const LaurentPoly l =
        LaurentPoly::monomial(1, -2) * LaurentPoly::from(IntPoly::parse("0,0,3,2,1"));
    CHECK(l.finalize().to_string() == "3,2,1");
    CHECK_THROWS_AS(LaurentPoly(IntPoly::parse("1"), -1).finalize(), NegativePowerResidue);
    CHECK(LaurentPoly().finalize().is_zero());
}

TEST_CASE("content split") {
    const auto [delta, reduced] = IntPoly::parse("2,2,2").content_split();
    CHECK(delta == 2);
    CHECK(reduced.to_string() == "1,1,1");

    const IntPoly j321 = IntPoly::parse("10,30,35,35,30,20,12,6,2");
    CHECK(j321.content_split().first == 1);  // coefficients 2 and 35 coprime

    const auto [d6, r6] = IntPoly::parse("6").content_split();
    CHECK(d6 == 6);
    CHECK(r6.to_string() == "1");

    CHECK_THROWS_AS(IntPoly().content_split(), std::invalid_argument);
}

TEST_CASE("rational reduction to integers") {
    CHECK(RatPoly(IntPoly::parse("4,4"), 4).to_int().to_string() == "1,1");
    CHECK_THROWS_AS(RatPoly(IntPoly::parse("3"), 2).to_int(), InexactDivision);
}

TEST_CASE("accumulating the weight-4 sum reproduces the weight-5 polynomial") {
    // sum over the five partitions of 4 of J q^{n(lambda)} / m(lambda)!,
    // scaled by 4: the parts are hand-traceable and frozen here.
    RatPoly acc;
    acc += RatPoly(IntPoly::parse("6,6,3,1"), 1);                  // (4)
    acc += RatPoly(IntPoly::parse("3,3,2,1").shifted_up(1), 1);    // (3,1), n=1
    acc += RatPoly(IntPoly::parse("3,2,1").shifted_up(2), 2);      // (2,2), n=2, m!=2
    acc += RatPoly(IntPoly::parse("2,2,2").shifted_up(3), 2);      // (2,1,1), n=3, m!=2
    acc += RatPoly(IntPoly::parse("6").shifted_up(6), 24);         // (1,1,1,1), n=6, m!=24
    const IntPoly j5 = (BigRat(4) * acc).to_int();
    CHECK(j5.to_string() == "24,36,30,20,10,4,1");
}

TEST_CASE("ring axioms on random operands (256-bit coefficients)") {
    Rng rng;
    for (int iter = 0; iter < 40; ++iter) {
        const IntPoly a = rng.poly(9, 256), b = rng.poly(9, 256), c = rng.poly(9, 256);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());

        const LaurentPoly la = rng.laurent(7, 256), lb = rng.laurent(7, 256),
                          lc = rng.laurent(7, 256);
        CHECK((la + lb) + lc == la + (lb + lc));
        CHECK(la * (lb + lc) == la * lb + la * lc);
        CHECK((la - la).is_zero());

        const RatPoly ra = rng.rational(7, 256), rb = rng.rational(7, 256),
                      rc = rng.rational(7, 256);
        CHECK((ra + rb) + rc == ra + (rb + rc));
        CHECK(ra * (rb + rc) == ra * rb + ra * rc);
        CHECK((ra - ra).is_zero());
    }
}

TEST_CASE("degree and order are additive under multiplication") {
    Rng rng;
    for (int iter = 0; iter < 40; ++iter) {
        IntPoly a = rng.poly(8, 64).shifted_up(rng.below(4));
        IntPoly b = rng.poly(8, 64).shifted_up(rng.below(4));
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
        CHECK((a * b).order() == a.order() + b.order());
    }
}

TEST_CASE("shift round trip") {
    Rng rng;
    for (int iter = 0; iter < 20; ++iter) {
        const LaurentPoly l = LaurentPoly::from(rng.poly(8, 64));
        const long k = static_cast<long>(rng.below(7));
        CHECK(l.shifted(k).shifted(-k).finalize() == l.finalize());
    }
}

TEST_CASE("content invariants on random polynomials") {
    Rng rng;
    for (int iter = 0; iter < 30; ++iter) {
        IntPoly p = BigInt(1 + rng.below(12)) * rng.poly(8, 96);
        if (p.is_zero()) continue;
        const auto [delta, reduced] = p.content_split();
        CHECK(delta > 0);
        for (const auto& c : p.coeffs())
            CHECK(mpz_divisible_p(c.get_mpz_t(), delta.get_mpz_t()));
        CHECK(reduced.content_split().first == 1);
        CHECK(delta * reduced == p);
    }
}

TEST_CASE("polynomial text round trip") {
    const IntPoly p = IntPoly::parse("6,6,3,1");
    CHECK(p.to_string() == "6,6,3,1");
    CHECK(IntPoly::parse(p.to_string()) == p);
    CHECK(IntPoly::parse("0").is_zero());
    CHECK(IntPoly::parse("-2,0,1").to_string() == "-2,0,1");
    CHECK(IntPoly::parse("1,0").to_string() == "1");  // trailing zeros trimmed
    CHECK_THROWS_AS(IntPoly::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::parse("x"), std::invalid_argument);
}

TEST_CASE("exact quotient") {
    const IntPoly one_minus_q = IntPoly::parse("1,-1");
    const IntPoly product = one_minus_q * IntPoly::parse("2,1,5");
    CHECK(product.exact_quotient(one_minus_q).to_string() == "2,1,5");
    CHECK_THROWS_AS(IntPoly::parse("1,1").exact_quotient(one_minus_q), InexactDivision);
}
