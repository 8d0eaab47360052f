#include <doctest.h>

#include <vector>

#include "jlq/engine.hpp"
#include "jlq/verifier.hpp"

using namespace jlq;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

LevelCache& verifier_cache(unsigned through) {
    static LevelCache cache;
    cache.ensure_through(through);
    return cache;
}

bool all_pass(const std::vector<CheckResult>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

}  // namespace

TEST_CASE("sequence flags") {
    const SequenceFlags j4 = conjecture_checks(IntPoly::parse("6,6,3,1"));
    CHECK(j4.positive);
    CHECK(j4.log_concave);
    CHECK(j4.strictly_log_concave);
    CHECK(j4.unimodal);
    CHECK(j4.no_internal_zeros);

    const SequenceFlags flat = conjecture_checks(IntPoly::parse("2,2,2"));
    CHECK(flat.positive);
    CHECK(flat.log_concave);
    CHECK(!flat.strictly_log_concave);
    CHECK(flat.unimodal);

    const SequenceFlags gap = conjecture_checks(IntPoly::parse("1,0,1"));
    CHECK(!gap.positive);
    CHECK(!gap.no_internal_zeros);
    CHECK(!gap.log_concave);  // 0 >= 1 fails

    const SequenceFlags bumpy = conjecture_checks(IntPoly::parse("1,3,2,5"));
    CHECK(!bumpy.unimodal);
    CHECK(!bumpy.log_concave);

    const SequenceFlags single = conjecture_checks(IntPoly::parse("7"));
    CHECK(single.positive);
    CHECK(single.log_concave);
    CHECK(single.strictly_log_concave);
    CHECK(single.unimodal);

    // Leading zeros (an M-form numerator) do not disturb the flags.
    const SequenceFlags shifted = conjecture_checks(IntPoly::parse("6,6,3,1").shifted_up(4));
    CHECK(shifted.positive);
    CHECK(shifted.log_concave);
}

TEST_CASE("structure check on known values") {
    auto& cache = verifier_cache(6);
    CHECK(all_pass(structure_check(P({3, 2, 1}), cache.level(6)->at(P({3, 2, 1})))));
    CHECK(all_pass(structure_check(P({2, 2}), cache.level(4)->at(P({2, 2})))));
    CHECK(all_pass(structure_check(P({1, 1, 1, 1}), cache.level(4)->at(P({1, 1, 1, 1})))));

    // The displayed weight-6 polynomial: degree 8, leading 2, constant 10.
    const IntPoly& j321 = cache.level(6)->at(P({3, 2, 1}));
    CHECK(j321.degree() == 8);
    CHECK(j321.leading() == 2);
    CHECK(j321.coeff(0) == 10);

    // Tampering the constant term must produce a witnessed failure.
    const auto rows = structure_check(P({2, 2}), IntPoly::parse("4,2,1"));
    bool saw_failure = false;
    for (const auto& r : rows)
        if (!r.pass) {
            saw_failure = true;
            CHECK(!r.witness.empty());
        }
    CHECK(saw_failure);
}

TEST_CASE("pascal tails") {
    auto& cache = verifier_cache(6);

    // J_5 ends ...,10,4,1 with scale 1: top coefficients 1,4,10,20.
    const IntPoly& j5 = cache.level(5)->at(P({5}));
    CHECK(j5.coeff(j5.degree()) == 1);
    CHECK(j5.coeff(j5.degree() - 1) == 4);
    CHECK(j5.coeff(j5.degree() - 2) == 10);
    CHECK(j5.coeff(j5.degree() - 3) == 20);
    CHECK(pascal_tail_check(P({5}), j5).pass);

    CHECK(pascal_tail_check(P({3, 1}), cache.level(4)->at(P({3, 1}))).pass);
    CHECK(pascal_tail_check(P({3, 2, 1}), cache.level(6)->at(P({3, 2, 1}))).pass);

    // 1^n is excluded by contract.
    CHECK_THROWS_AS(pascal_tail_check(P({1, 1, 1}), IntPoly::parse("2")),
                    std::invalid_argument);

    // A corrupted top coefficient is caught.
    CHECK(!pascal_tail_check(P({3, 1}), IntPoly::parse("3,3,2,2")).pass);
}

TEST_CASE("pascal tails hold for every applicable partition, n <= 10") {
    auto& cache = verifier_cache(10);
    for (unsigned n = 2; n <= 10; ++n) {
        auto level = cache.level(n);
        for (std::size_t i = 0; i < level->size(); ++i) {
            const Partition& lam = level->partition(i);
            if (lam.length() == lam.weight()) continue;
            CHECK(pascal_tail_check(lam, level->poly(i)).pass);
        }
    }
}

TEST_CASE("jnr checks") {
    auto& cache = verifier_cache(5);
    CHECK(all_pass(jnr_checks(4, 1, jnr_aggregate(4, 1, *cache.level(4)))));
    CHECK(all_pass(jnr_checks(5, 5, jnr_aggregate(5, 5, *cache.level(5)))));

    const IntPoly j54 = jnr_aggregate(5, 4, *cache.level(5));
    CHECK(j54 == q_analogue(4));
    CHECK(all_pass(jnr_checks(5, 4, j54)));

    CHECK(!all_pass(jnr_checks(4, 1, IntPoly::parse("6,6,3,2"))));
}

TEST_CASE("m-space identity") {
    auto& cache = verifier_cache(10);
    CHECK(identity_314_check(2, 1, *cache.level(2), *cache.level(1)).pass);
    CHECK(identity_314_check(3, 1, *cache.level(3), *cache.level(2)).pass);
    CHECK(identity_314_check(4, 2, *cache.level(4), *cache.level(2)).pass);
    for (unsigned n = 2; n <= 10; ++n)
        for (unsigned r = 1; r + 1 <= n; ++r)
            CHECK(identity_314_check(n, r, *cache.level(n), *cache.level(n - r)).pass);
    CHECK_THROWS_AS(identity_314_check(3, 3, *cache.level(3), *cache.level(3)),
                    std::invalid_argument);
}

TEST_CASE("bell identity") {
    CHECK(bell_identity_check(7, 1).pass);
    CHECK(bell_identity_check(7, 7).pass);
    CHECK(bell_identity_check(4, 2).pass);  // 1 + 1/2 = C(3,1)/2!
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned r = 1; r <= n; ++r) CHECK(bell_identity_check(n, r).pass);
}

TEST_CASE("dominance statistic rows") {
    for (unsigned n = 2; n <= 10; ++n) CHECK(dominance_statistic_check(n).pass);
}

TEST_CASE("flag equivalence across the three formulations, n <= 10") {
    auto& cache = verifier_cache(10);
    for (unsigned n = 1; n <= 10; ++n) {
        auto level = cache.level(n);
        for (std::size_t i = 0; i < level->size(); ++i) {
            const IntPoly& j = level->poly(i);
            const SequenceFlags a = conjecture_checks(j);
            const SequenceFlags b =
                conjecture_checks(j.shifted_up(level->partition(i).n_statistic()));
            const SequenceFlags c = conjecture_checks(j.content_split().second);
            CHECK(a.positive == b.positive);
            CHECK(a.log_concave == b.log_concave);
            CHECK(a.unimodal == b.unimodal);
            CHECK(a.no_internal_zeros == b.no_internal_zeros);
            CHECK(a.positive == c.positive);
            CHECK(a.log_concave == c.log_concave);
            CHECK(a.unimodal == c.unimodal);
            CHECK(a.no_internal_zeros == c.no_internal_zeros);
        }
    }
}

TEST_CASE("full check run over small levels") {
    LevelCache cache;
    VerifyOptions options;
    options.max_n = 8;
    options.cross_route_max = 8;
    options.family_max = 8;
    options.dominance_pair_max = 8;
    const VerifyOutcome outcome = run_all_checks(cache, options);

    CHECK(outcome.theorem_failures == 0);
    CHECK(outcome.conjecture_failures == 0);
    CHECK(outcome.polynomials_checked == 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22);
    CHECK(outcome.max_degree == 21);  // C(7,2) at weight 8
    REQUIRE(outcome.levels.size() == 8);
    CHECK(outcome.levels.back().records == 22);

    std::size_t failing = 0;
    for (const auto& rec : outcome.records)
        if (!rec.pass) ++failing;
    CHECK(failing == outcome.finding_failures);  // only strictness findings may fail

    // J_{2,1,1} = 2+2q+2q^2 is the canonical non-strict case.
    bool found = false;
    for (const auto& rec : outcome.records)
        if (rec.subject == "2,1,1" && rec.check == "strictly_log_concave") {
            found = true;
            CHECK(rec.kind == CheckKind::Finding);
            CHECK(!rec.pass);
        }
    CHECK(found);
}

TEST_CASE("threaded verification matches sequential") {
    LevelCache cache;
    VerifyOptions seq;
    seq.max_n = 6;
    seq.cross_route_max = seq.family_max = seq.dominance_pair_max = 6;
    VerifyOptions par = seq;
    par.threads = 3;
    const VerifyOutcome a = run_all_checks(cache, seq);
    const VerifyOutcome b = run_all_checks(cache, par);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].subject == b.records[i].subject);
        CHECK(a.records[i].check == b.records[i].check);
        CHECK(a.records[i].pass == b.records[i].pass);
    }
}
