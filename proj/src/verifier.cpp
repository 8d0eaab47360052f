#include "jlq/verifier.hpp"

#include <algorithm>

#include "jlq/parallel.hpp"

namespace jlq {
namespace {

std::string subject_nr(unsigned n, unsigned r) {
    return "n=" + std::to_string(n) + ",r=" + std::to_string(r);
}

bool is_one_column(const Partition& lambda) {
    return lambda.length() == lambda.weight();  // 1^n
}

// J q^{n(lambda)} / m(lambda)! summed over a length class, as a RatPoly.
RatPoly class_sum(const LevelTable& level, unsigned length) {
    BigInt den(1);
    for (std::size_t i = 0; i < level.size(); ++i)
        if (level.partition(i).length() == length)
            den = lcm(den, level.partition(i).multiplicity_factorial());
    IntPoly acc;
    for (std::size_t i = 0; i < level.size(); ++i) {
        const Partition& lam = level.partition(i);
        if (lam.length() != length) continue;
        acc += (exact_div(den, lam.multiplicity_factorial()) * level.poly(i))
                   .shifted_up(lam.n_statistic());
    }
    return RatPoly(std::move(acc), den);
}

}  // namespace

SequenceFlags conjecture_checks(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("conjecture checks on zero polynomial");
    const std::size_t lo = p.order(), hi = p.degree();
    SequenceFlags f{true, true, true, true, true};
    for (std::size_t k = lo; k <= hi; ++k) {
        const BigInt& c = p.coeff(k);
        if (c <= 0) f.positive = false;
        if (c == 0 && k > lo && k < hi) f.no_internal_zeros = false;
    }
    for (std::size_t k = lo + 1; k < hi; ++k) {
        const BigInt square = p.coeff(k) * p.coeff(k);
        const BigInt sides = p.coeff(k - 1) * p.coeff(k + 1);
        if (square < sides) f.log_concave = false;
        if (square <= sides) f.strictly_log_concave = false;
    }
    bool descending = false;
    for (std::size_t k = lo + 1; k <= hi && f.unimodal; ++k) {
        if (p.coeff(k) > p.coeff(k - 1)) {
            if (descending) f.unimodal = false;
        } else if (p.coeff(k) < p.coeff(k - 1)) {
            descending = true;
        }
    }
    return f;
}

std::vector<CheckResult> structure_check(const Partition& lambda, const IntPoly& j) {
    std::vector<CheckResult> out;
    const std::string subject = lambda.to_string();
    auto add = [&](const char* name, bool pass, std::string witness) {
        out.push_back({subject, name, CheckKind::Theorem, pass, pass ? "" : std::move(witness)});
    };
    if (j.is_zero()) {
        add("order_zero", false, "polynomial is zero");
        return out;
    }
    const unsigned n = lambda.weight();
    const auto r = static_cast<unsigned>(lambda.length());

    add("order_zero", j.order() == 0, "order " + std::to_string(j.order()));

    const long expect_deg = static_cast<long>(binomial(n - 1, 2).get_ui()) + (long)r - 1 -
                            static_cast<long>(lambda.n_statistic());
    add("degree", static_cast<long>(j.degree()) == expect_deg,
        "degree " + std::to_string(j.degree()) + " expected " + std::to_string(expect_deg));

    const BigInt expect_lead = factorial(r - 1);
    add("leading_coefficient", j.leading() == expect_lead,
        j.leading().get_str() + " expected " + expect_lead.get_str());

    BigRat expect_const(factorial(n - 1) * lambda.multiplicity_factorial(),
                        lambda.conjugate_factorial());
    expect_const.canonicalize();
    const bool const_ok = expect_const.get_den() == 1 && j.coeff(0) == expect_const.get_num();
    add("constant_term", const_ok,
        j.coeff(0).get_str() + " expected " + expect_const.get_str());
    return out;
}

CheckResult pascal_tail_check(const Partition& lambda, const IntPoly& j) {
    const unsigned n = lambda.weight();
    const auto r = static_cast<unsigned>(lambda.length());
    if (n < 2 || is_one_column(lambda))
        throw std::invalid_argument("pascal tail needs |lambda| >= 2 and lambda != 1^n");
    CheckResult res{lambda.to_string(), "pascal_tail", CheckKind::Theorem, true, ""};
    const std::size_t deg = j.degree();
    if (deg + 1 < static_cast<std::size_t>(n - 1)) {
        res.pass = false;
        res.witness = "degree " + std::to_string(deg) + " shorter than tail";
        return res;
    }
    const BigInt scale = factorial(r - 1);
    for (unsigned i = 0; i + 1 <= n - 1; ++i) {
        const BigInt expect = scale * binomial(n - r - 1 + i, n - r - 1);
        if (j.coeff(deg - i) != expect) {
            res.pass = false;
            res.witness = "coefficient of q^" + std::to_string(deg - i) + " is " +
                          j.coeff(deg - i).get_str() + " expected " + expect.get_str();
            return res;
        }
    }
    if (r < n - 1) {
        // In this regime the tail must also be strictly log-concave.
        for (std::size_t k = deg - (n - 2) + 1; k < deg; ++k) {
            if (j.coeff(k) * j.coeff(k) <= j.coeff(k - 1) * j.coeff(k + 1)) {
                res.pass = false;
                res.witness = "tail not strictly log-concave at q^" + std::to_string(k);
                return res;
            }
        }
    }
    return res;
}

std::vector<CheckResult> jnr_checks(unsigned n, unsigned r, const IntPoly& jnr) {
    std::vector<CheckResult> out;
    const std::string subject = subject_nr(n, r);
    auto add = [&](const char* name, bool pass, std::string witness) {
        out.push_back({subject, name, CheckKind::Theorem, pass, pass ? "" : std::move(witness)});
    };
    if (jnr.is_zero()) {
        add("monic", false, "polynomial is zero");
        return out;
    }
    add("monic", jnr.leading() == 1, "leading " + jnr.leading().get_str());
    const BigInt expect_const = factorial(n - r);
    add("constant_term", jnr.coeff(0) == expect_const,
        jnr.coeff(0).get_str() + " expected " + expect_const.get_str());
    const auto expect_deg =
        static_cast<std::size_t>(BigInt(binomial(n - 1, 2) - binomial(r - 1, 2)).get_ui());
    add("degree", jnr.degree() == expect_deg,
        "degree " + std::to_string(jnr.degree()) + " expected " + std::to_string(expect_deg));
    if (r <= n - 1 && r >= 1) {
        bool tail_ok = true;
        std::string witness;
        for (unsigned i = 0; i + 1 <= n - 1 && tail_ok; ++i) {
            const BigInt expect = binomial(n - r - 1 + i, n - r - 1);
            if (jnr.coeff(expect_deg - i) != expect) {
                tail_ok = false;
                witness = "coefficient of q^" + std::to_string(expect_deg - i) + " is " +
                          jnr.coeff(expect_deg - i).get_str() + " expected " + expect.get_str();
            }
        }
        add("pascal_tail", tail_ok, std::move(witness));
    }
    const SequenceFlags flags = conjecture_checks(jnr);
    // Proved for this family, so failures here are defects, not findings.
    add("strictly_positive", flags.positive, "nonpositive coefficient");
    add("log_concave", flags.log_concave, "log-concavity violated");
    return out;
}

CheckResult identity_314_check(unsigned n, unsigned r, const LevelTable& level_n,
                               const LevelTable& level_nr) {
    if (r < 1 || r + 1 > n) throw std::invalid_argument("identity needs 1 <= r <= n-1");
    if (level_n.weight() != n || level_nr.weight() != n - r)
        throw std::invalid_argument("identity_314_check: wrong level weights");
    CheckResult res{subject_nr(n, r), "m_space_identity", CheckKind::Theorem, true, ""};

    // Left side: r! sum_{|lambda|=n, l=r} M_lambda / m(lambda)!.
    RatPoly lhs = BigRat(factorial(r), factorial(n - 1)) * class_sum(level_n, r);

    // Right side: q^{C(r,2)} sum_mu [r]_q^{l(mu)} M_mu / m(mu)!, grouped by
    // length so each power multiplies one class sum.
    const IntPoly rq = q_analogue(r);
    IntPoly power = rq;
    RatPoly rhs;
    for (unsigned l = 1; l <= n - r; ++l) {
        RatPoly cls = class_sum(level_nr, l);
        if (!cls.is_zero()) rhs += RatPoly::from(power) * cls;
        if (l < n - r) power = power * rq;
    }
    rhs = BigRat(BigInt(1), factorial(n - r - 1)) * rhs;
    const auto tri = static_cast<std::size_t>(binomial(r, 2).get_ui());
    rhs = RatPoly(rhs.numerator().shifted_up(tri), rhs.denominator());

    if (!(lhs == rhs)) {
        res.pass = false;
        res.witness = "lhs " + lhs.numerator().to_string() + "/" + lhs.denominator().get_str() +
                      " rhs " + rhs.numerator().to_string() + "/" + rhs.denominator().get_str();
    }
    return res;
}

CheckResult bell_identity_check(unsigned n, unsigned r) {
    if (r < 1 || r > n) throw std::invalid_argument("bell identity needs 1 <= r <= n");
    CheckResult res{subject_nr(n, r), "bell_identity", CheckKind::Theorem, true, ""};
    BigRat sum(0);
    for (const Partition& lam : PartitionRange(n)) {
        if (lam.length() != r) continue;
        BigRat term(1, lam.multiplicity_factorial());
        term.canonicalize();
        sum += term;
    }
    BigRat expect(binomial(n - 1, r - 1), factorial(r));
    expect.canonicalize();
    if (sum != expect) {
        res.pass = false;
        res.witness = sum.get_str() + " expected " + expect.get_str();
    }
    return res;
}

CheckResult dominance_statistic_check(unsigned n) {
    CheckResult res{"n=" + std::to_string(n), "dominance_statistic", CheckKind::Theorem, true,
                    ""};
    const std::vector<Partition> all = all_partitions_of(n);
    for (std::size_t i = 0; i < all.size() && res.pass; ++i) {
        for (std::size_t k = 0; k < all.size(); ++k) {
            if (i == k) continue;
            if (dominance_leq(all[k], all[i]) == Dominance::LessEqual &&
                all[k].n_statistic() <= all[i].n_statistic()) {
                res.pass = false;
                res.witness = all[k].to_string() + " < " + all[i].to_string() +
                              " but n-statistics " + std::to_string(all[k].n_statistic()) +
                              " <= " + std::to_string(all[i].n_statistic());
                break;
            }
        }
    }
    return res;
}

VerifyOutcome run_all_checks(LevelCache& cache, const VerifyOptions& options) {
    VerifyOutcome out;
    JnrTable recursive_route;

    for (unsigned n = 1; n <= options.max_n; ++n) {
        auto level = cache.level(n);
        out.levels.push_back({n, level->size(), level->max_degree()});
        out.polynomials_checked += level->size();
        out.max_degree = std::max(out.max_degree, level->max_degree());

        // Per-partition checks run wave-parallel into per-slot buffers so the
        // record order never depends on the thread count.
        std::vector<std::vector<CheckResult>> slots(level->size());
        parallel_for(0, level->size(), options.threads, [&](std::size_t i) {
            const Partition& lam = level->partition(i);
            const IntPoly& j = level->poly(i);
            auto& rows = slots[i];
            auto structure = structure_check(lam, j);
            rows.insert(rows.end(), structure.begin(), structure.end());
            if (n >= 2 && !is_one_column(lam)) rows.push_back(pascal_tail_check(lam, j));

            const SequenceFlags flags = conjecture_checks(j);
            const std::string subject = lam.to_string();
            auto conj = [&](const char* name, bool pass) {
                rows.push_back({subject, name, CheckKind::Conjecture, pass,
                                pass ? "" : "J = " + j.to_string()});
            };
            conj("strictly_positive", flags.positive);
            conj("log_concave", flags.log_concave);
            conj("unimodal", flags.unimodal);
            conj("no_internal_zeros", flags.no_internal_zeros);
            rows.push_back({subject, "strictly_log_concave", CheckKind::Finding,
                            flags.strictly_log_concave, ""});

            // The three formulations (J, M numerator, reduced J) must agree
            // on every conjecture flag.
            const IntPoly m_form = j.shifted_up(lam.n_statistic());
            const IntPoly reduced = j.content_split().second;
            const SequenceFlags mf = conjecture_checks(m_form);
            const SequenceFlags rf = conjecture_checks(reduced);
            const bool agree = mf.positive == flags.positive &&
                               mf.log_concave == flags.log_concave &&
                               mf.unimodal == flags.unimodal &&
                               mf.no_internal_zeros == flags.no_internal_zeros &&
                               rf.positive == flags.positive &&
                               rf.log_concave == flags.log_concave &&
                               rf.unimodal == flags.unimodal &&
                               rf.no_internal_zeros == flags.no_internal_zeros;
            rows.push_back({subject, "formulation_equivalence", CheckKind::Theorem, agree,
                            agree ? "" : "flags differ between J, M and reduced forms"});
        });
        for (auto& rows : slots)
            out.records.insert(out.records.end(), std::make_move_iterator(rows.begin()),
                               std::make_move_iterator(rows.end()));

        // Special one-column families.
        {
            std::vector<unsigned> ones(n, 1);
            const IntPoly& j_ones = level->at(Partition(ones));
            const bool ok = j_ones == IntPoly::constant(factorial(n - 1));
            out.records.push_back({"n=" + std::to_string(n), "one_column_family",
                                   CheckKind::Theorem, ok,
                                   ok ? "" : "J = " + j_ones.to_string()});
        }
        if (n >= 2) {
            std::vector<unsigned> parts(n - 1, 1);
            parts[0] = 2;
            const IntPoly& j_two = level->at(Partition(parts));
            const IntPoly expect = factorial(n - 2) * q_analogue(n - 1);
            const bool ok = j_two == expect;
            out.records.push_back({"n=" + std::to_string(n), "two_one_column_family",
                                   CheckKind::Theorem, ok,
                                   ok ? "" : "J = " + j_two.to_string()});
        }

        if (n <= options.family_max || n <= options.cross_route_max) {
            for (unsigned r = 1; r <= n; ++r) {
                const IntPoly aggregate = jnr_aggregate(n, r, *level);
                if (n <= options.family_max) {
                    auto rows = jnr_checks(n, r, aggregate);
                    out.records.insert(out.records.end(),
                                       std::make_move_iterator(rows.begin()),
                                       std::make_move_iterator(rows.end()));
                }
                if (n <= options.cross_route_max) {
                    const bool equal = aggregate == recursive_route.at(n, r);
                    out.records.push_back(
                        {subject_nr(n, r), "route_equality", CheckKind::Theorem, equal,
                         equal ? ""
                               : "aggregate " + aggregate.to_string() + " recursive " +
                                     recursive_route.at(n, r).to_string()});
                }
            }
        }
        if (n <= options.family_max) {
            for (unsigned r = 1; r + 1 <= n; ++r) {
                auto lower = cache.level(n - r);
                out.records.push_back(identity_314_check(n, r, *level, *lower));
            }
            for (unsigned r = 1; r <= n; ++r)
                out.records.push_back(bell_identity_check(n, r));
        }
        if (n <= options.dominance_pair_max)
            out.records.push_back(dominance_statistic_check(n));

        // Above the family caps no later check revisits this level.
        if (n > options.family_max) {
            level.reset();
            cache.release(n);
        }
    }

    for (const auto& rec : out.records) {
        if (rec.pass) continue;
        switch (rec.kind) {
            case CheckKind::Theorem: ++out.theorem_failures; break;
            case CheckKind::Conjecture: ++out.conjecture_failures; break;
            case CheckKind::Finding: ++out.finding_failures; break;
        }
    }
    return out;
}

}  // namespace jlq
