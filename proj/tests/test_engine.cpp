#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "jlq/engine.hpp"

using namespace jlq;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

LevelCache& shared_cache(unsigned through) {
    static LevelCache cache;
    cache.ensure_through(through);
    return cache;
}

const std::map<std::string, std::string> kGoldenTable{
    {"1", "1"},
    {"2", "1"},
    {"1,1", "1"},
    {"3", "2,1"},
    {"2,1", "1,1"},
    {"1,1,1", "2"},
    {"4", "6,6,3,1"},
    {"3,1", "3,3,2,1"},
    {"2,2", "3,2,1"},
    {"2,1,1", "2,2,2"},
    {"1,1,1,1", "6"},
};

}  // namespace

TEST_CASE("golden table |lambda| <= 4") {
    auto& cache = shared_cache(4);
    for (const auto& [partition_text, poly_text] : kGoldenTable) {
        const Partition lam = Partition::parse(partition_text);
        CHECK(cache.level(lam.weight())->at(lam).to_string() == poly_text);
    }
}

TEST_CASE("level 1 is the base case") {
    auto& cache = shared_cache(1);
    auto level = cache.level(1);
    REQUIRE(level->size() == 1);
    CHECK(level->partition(0) == P({1}));
    CHECK(level->poly(0).to_string() == "1");
}

TEST_CASE("weight-5 and weight-6 values frozen from hand traces") {
    auto& cache = shared_cache(6);
    CHECK(cache.level(5)->at(P({5})).to_string() == "24,36,30,20,10,4,1");
    CHECK(cache.level(5)->at(P({3, 2})).to_string() == "6,10,10,6,3,1");
    CHECK(cache.level(5)->at(P({2, 2, 1})).to_string() == "4,8,6,4,2");
    CHECK(cache.level(6)->at(P({3, 2, 1})).to_string() == "10,30,35,35,30,20,12,6,2");
}

TEST_CASE("compute_jn from a complete previous level") {
    auto& cache = shared_cache(4);
    CHECK(compute_jn(3, *cache.level(2)).to_string() == "2,1");
    CHECK(compute_jn(4, *cache.level(3)).to_string() == "6,6,3,1");
    CHECK(compute_jn(5, *cache.level(4)).to_string() == "24,36,30,20,10,4,1");
}

TEST_CASE("levels are complete and ordered like the enumeration") {
    auto& cache = shared_cache(8);
    for (unsigned n = 1; n <= 8; ++n) {
        auto level = cache.level(n);
        const auto expected = all_partitions_of(n);
        REQUIRE(level->size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(level->partition(i) == expected[i]);
    }
}

TEST_CASE("structural invariants of every J with |lambda| <= 10") {
    auto& cache = shared_cache(10);
    for (unsigned n = 1; n <= 10; ++n) {
        auto level = cache.level(n);
        for (std::size_t i = 0; i < level->size(); ++i) {
            const Partition& lam = level->partition(i);
            const IntPoly& j = level->poly(i);
            REQUIRE(!j.is_zero());
            CHECK(j.order() == 0);
            const long expect_deg = static_cast<long>(binomial(n - 1, 2).get_ui()) +
                                    static_cast<long>(lam.length()) - 1 -
                                    static_cast<long>(lam.n_statistic());
            CHECK(static_cast<long>(j.degree()) == expect_deg);
            CHECK(j.leading() == factorial(lam.length() - 1));
            CHECK(j.coeff(0) * lam.conjugate_factorial() ==
                  factorial(n - 1) * lam.multiplicity_factorial());
        }
    }
}

TEST_CASE("one-column families, n <= 12") {
    auto& cache = shared_cache(12);
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(cache.level(n)->at(Partition(std::vector<unsigned>(n, 1))) ==
              IntPoly::constant(factorial(n - 1)));
        if (n >= 2) {
            std::vector<unsigned> parts(n - 1, 1);
            parts[0] = 2;
            CHECK(cache.level(n)->at(Partition(parts)) ==
                  factorial(n - 2) * q_analogue(n - 1));
        }
    }
}

TEST_CASE("tree counts at q = 1, n <= 9") {
    auto& cache = shared_cache(9);
    for (unsigned n = 2; n <= 9; ++n) {
        BigInt expect(1);
        for (unsigned k = 0; k + 2 < n; ++k) expect *= n;
        CHECK(cache.level(n)->at(P({n})).evaluate(1) == expect);
    }
}

TEST_CASE("aggregated J_n^(r)") {
    auto& cache = shared_cache(6);
    CHECK(jnr_aggregate(3, 2, *cache.level(3)).to_string() == "1,1");
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(jnr_aggregate(n, n, *cache.level(n)) == IntPoly::constant(1));
    CHECK(jnr_aggregate(4, 1, *cache.level(4)) == cache.level(4)->at(P({4})));
}

TEST_CASE("recursive J_n^(r)") {
    JnrTable table;
    CHECK(table.at(3, 2).to_string() == "1,1");
    CHECK(table.at(4, 1).to_string() == "6,6,3,1");
    for (unsigned n = 2; n <= 10; ++n) CHECK(table.at(n, n - 1) == q_analogue(n - 1));
    CHECK_THROWS_AS(table.at(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(table.at(3, 0), std::invalid_argument);
}

TEST_CASE("the two J_n^(r) routes agree bit-exactly, n <= 10") {
    auto& cache = shared_cache(10);
    JnrTable table;
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned r = 1; r <= n; ++r)
            CHECK(jnr_aggregate(n, r, *cache.level(n)) == table.at(n, r));
}

TEST_CASE("factored monomial packaging") {
    auto& cache = shared_cache(5);

    const FactoredMonomial fm5 = m_lambda_factored(P({5}), *cache.level(5));
    CHECK(fm5.one_minus_q_exponent == 4);
    CHECK(fm5.q_exponent == 0);
    CHECK(fm5.scalar_num == 1);
    CHECK(fm5.scalar_den == factorial(4));
    CHECK(fm5.j_part == cache.level(5)->at(P({5})));

    const FactoredMonomial fm1111 = m_lambda_factored(P({1, 1, 1, 1}), *cache.level(4));
    CHECK(fm1111.one_minus_q_exponent == 0);
    CHECK(fm1111.q_exponent == 6);
    CHECK(fm1111.j_part == IntPoly::constant(6));
    // expands to q^6 / 4!
    CHECK(fm1111.expand() == RatPoly(IntPoly::monomial(1, 6), factorial(4)));

    const FactoredMonomial fm21 = m_lambda_factored(P({2, 1}), *cache.level(3));
    CHECK(fm21.one_minus_q_exponent == 1);
    CHECK(fm21.q_exponent == 1);
    CHECK(fm21.scalar_den == 2);
    const RatPoly expect(IntPoly::parse("1,-1") * IntPoly::parse("1,1").shifted_up(1), 2);
    CHECK(fm21.expand() == expect);
}

TEST_CASE("direct in-level recurrence evaluation matches the level sweep") {
    auto& cache = shared_cache(6);
    const JlambdaContext ctx{
        [&](const Partition& p) -> const IntPoly& {
            return cache.level(p.weight())->at(p);
        },
        [&](const Partition& p) -> const IntPoly& {
            return cache.level(p.weight())->at(p);
        },
    };
    CHECK(compute_jlambda(P({2, 2}), ctx).to_string() == "3,2,1");
    CHECK(compute_jlambda(P({3, 2, 1}), ctx).to_string() == "10,30,35,35,30,20,12,6,2");
    // a case where merging the last part requires re-sorting
    CHECK(compute_jlambda(P({2, 2, 1}), ctx).to_string() == "4,8,6,4,2");
    CHECK(compute_jlambda(P({1, 1, 1}), ctx).to_string() == "2");
    CHECK_THROWS_AS(compute_jlambda(P({4}), ctx), std::invalid_argument);
}

TEST_CASE("negative-power residue surfaces corrupted inputs") {
    // (2,2) with a corrupted constant term in the same-weight dependency (4):
    // the low-order cancellation fails.
    const IntPoly corrupted_j4 = IntPoly::parse("7,6,3,1");
    const IntPoly one = IntPoly::constant(1);
    const JlambdaContext ctx{
        [&](const Partition&) -> const IntPoly& { return corrupted_j4; },
        [&](const Partition&) -> const IntPoly& { return one; },
    };
    CHECK_THROWS_AS(compute_jlambda(P({2, 2}), ctx), NegativePowerResidue);
}

TEST_CASE("inexact division surfaces corrupted level data") {
    auto& cache = shared_cache(3);
    std::vector<Partition> partitions = all_partitions_of(3);
    std::vector<IntPoly> polys{cache.level(3)->poly(0), cache.level(3)->poly(1),
                               IntPoly::constant(3)};  // 1^3 tampered from 2 to 3
    const LevelTable tampered(3, std::move(partitions), std::move(polys));
    CHECK_THROWS_AS(compute_jn(4, tampered), InexactDivision);
}

TEST_CASE("level lookup") {
    auto& cache = shared_cache(4);
    auto level = cache.level(4);
    CHECK(level->index_of(P({2, 2})).value() == 2);
    CHECK(!level->index_of(P({4, 1, 1})).has_value());  // wrong weight text
    CHECK_THROWS_AS(level->at(P({5, 1})), std::out_of_range);
    CHECK(cache.single_part(4).to_string() == "6,6,3,1");
    CHECK_THROWS_AS(cache.single_part(99), std::out_of_range);
}

TEST_CASE("threaded wavefront matches the sequential sweep") {
    LevelCache seq;
    seq.ensure_through(9);
    LevelCache par;
    par.set_threads(3);
    par.ensure_through(9);
    for (unsigned n = 1; n <= 9; ++n) {
        auto a = seq.level(n), b = par.level(n);
        REQUIRE(a->size() == b->size());
        for (std::size_t i = 0; i < a->size(); ++i) CHECK(a->poly(i) == b->poly(i));
    }
}
