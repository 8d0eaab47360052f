#ifndef JLQ_VERIFIER_HPP
#define JLQ_VERIFIER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "jlq/engine.hpp"
#include "jlq/level_table.hpp"
#include "jlq/partition.hpp"
#include "jlq/qpoly.hpp"

namespace jlq {

// theorem: proved statements — any failure is a defect.
// conjecture: the open statements the campaign tests — failures are findings.
// finding: informational categories recorded either way (e.g. whether the
// full coefficient sequence is strictly log-concave).
enum class CheckKind { Theorem, Conjecture, Finding };

struct CheckResult {
    std::string subject;
    std::string check;
    CheckKind kind = CheckKind::Theorem;
    bool pass = true;
    std::string witness;  // failing results carry enough to reproduce by hand
};

struct SequenceFlags {
    bool positive;
    bool log_concave;
    bool strictly_log_concave;
    bool unimodal;
    bool no_internal_zeros;
};

// Coefficient-sequence predicates over the support window (order..degree),
// evaluated exactly. Interior indices only for the log-concavity pair
// inequalities; length <= 2 windows are vacuously (strictly) log-concave
// and a single coefficient is vacuously unimodal.
SequenceFlags conjecture_checks(const IntPoly& p);

// Order zero, degree, leading and constant coefficients of an engine J.
std::vector<CheckResult> structure_check(const Partition& lambda, const IntPoly& j);

// The top weight-1 coefficients of J against the Pascal-column formula,
// plus strict log-concavity of that tail when length < weight-1.
CheckResult pascal_tail_check(const Partition& lambda, const IntPoly& j);

// Monicity, constant term, degree, Pascal tail, strict positivity and
// log-concavity of a J_n^(r).
std::vector<CheckResult> jnr_checks(unsigned n, unsigned r, const IntPoly& jnr);

// The M-space linear identity between weight n, length r and weight n-r,
// checked in exact rational arithmetic. Requires 1 <= r <= n-1.
CheckResult identity_314_check(unsigned n, unsigned r, const LevelTable& level_n,
                               const LevelTable& level_nr);

// sum over |lambda| = n, l = r of 1/m(lambda)! equals C(n-1, r-1)/r!.
CheckResult bell_identity_check(unsigned n, unsigned r);

// Dominance-smaller partitions have strictly larger n-statistic (pairwise
// over one weight).
CheckResult dominance_statistic_check(unsigned n);

struct LevelSummary {
    unsigned n;
    std::size_t records;
    std::size_t max_degree;
};

struct VerifyOptions {
    unsigned max_n = 1;
    unsigned cross_route_max = 20;  // aggregate vs recursive J_n^(r)
    unsigned family_max = 25;       // jnr/identity/bell family checks
    unsigned dominance_pair_max = 12;   // pairwise dominance statistic
    unsigned threads = 1;
};

struct VerifyOutcome {
    std::vector<CheckResult> records;
    std::vector<LevelSummary> levels;
    std::size_t polynomials_checked = 0;
    std::size_t theorem_failures = 0;
    std::size_t conjecture_failures = 0;
    std::size_t finding_failures = 0;
    std::size_t max_degree = 0;
};

// Runs every check over levels 1..max_n (family-style checks capped by the
// options) and aggregates the result stream.
VerifyOutcome run_all_checks(LevelCache& cache, const VerifyOptions& options);

}  // namespace jlq

#endif
