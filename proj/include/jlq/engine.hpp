#ifndef JLQ_ENGINE_HPP
#define JLQ_ENGINE_HPP

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "jlq/level_table.hpp"
#include "jlq/partition.hpp"
#include "jlq/qpoly.hpp"

namespace jlq {

class CacheDir;  // level_io.hpp

// Lookup of J values needed by the weight-n recurrence: the already
// computed same-weight entries plus lower-weight tables.
struct JlambdaContext {
    // J of a same-weight partition (some lambda^(i), length one less).
    std::function<const IntPoly&(const Partition&)> same_weight;
    // J of a lower-weight partition (lambda-star or a single part).
    std::function<const IntPoly&(const Partition&)> lower_weight;
};

// J_n from the complete previous level: the weighted sum over all
// partitions of n-1, accumulated exactly in RatPoly and required to
// collapse to integer coefficients.
IntPoly compute_jn(unsigned n, const LevelTable& prev);

// J for a partition of length >= 2 via the in-level recurrence, evaluated
// in Laurent space; the negative powers must cancel and the result has
// order zero.
IntPoly compute_jlambda(const Partition& lambda, const JlambdaContext& ctx);

// J_n^(r) aggregated from a complete level: exact rational accumulation
// over the length-r partitions, then the q^{-C(r,2)} shift and the
// integrality checkpoint.
IntPoly jnr_aggregate(unsigned n, unsigned r, const LevelTable& level);

// Independent route for J_n^(r): the linear recurrence
//   J_n^(r) = sum_{j=1}^{n-r} [r]_q^j q^{C(j,2)} C(n-r,j) J_{n-r}^(j)
// grounded at J_m^(m) = 1, memoized over (n, r). Never touches level data.
class JnrTable {
  public:
    const IntPoly& at(unsigned n, unsigned r);

  private:
    std::map<std::pair<unsigned, unsigned>, IntPoly> memo_;
};

// The four factors of the specialized monomial symmetric function:
// (1-q)^{e1} * q^{e2} * (num/den) * j_part.
struct FactoredMonomial {
    unsigned long one_minus_q_exponent;
    unsigned long q_exponent;
    BigInt scalar_num;
    BigInt scalar_den;
    IntPoly j_part;

    // Multiply the factors out (exact rational coefficients).
    RatPoly expand() const;
};

FactoredMonomial m_lambda_factored(const Partition& lambda, const LevelTable& level);

// Level store driving the induction J_1 = 1 upward. Levels are computed
// strictly in weight order; within a level, entries of equal length form
// independent waves (every same-weight dependency has length one less).
//
// Memory policy: levels up to pin_limit stay resident once seen; above
// that only the frontier is kept and other levels are reloaded from the
// backing directory on demand (memory-only caches keep everything).
class LevelCache {
  public:
    static constexpr unsigned kDefaultPinLimit = 25;

    LevelCache();                                        // memory-only
    explicit LevelCache(CacheDir& dir, unsigned pin_limit = kDefaultPinLimit);
    ~LevelCache();

    unsigned threads() const { return threads_; }
    void set_threads(unsigned t) { threads_ = t ? t : 1; }

    // Compute (and persist, when disk-backed) all missing levels <= n.
    // progress, when set, is invoked after each level completes.
    void ensure_through(unsigned n,
                        const std::function<void(const LevelTable&)>& progress = nullptr);

    // Fetch one level; computes lower levels as needed.
    std::shared_ptr<const LevelTable> level(unsigned n);

    // J_n = J_(n) for every ensured weight (kept resident, they are tiny).
    const IntPoly& single_part(unsigned m) const;

    // Drop a level from memory when it sits above the pin limit (no-op for
    // pinned levels and memory-only caches). Disk-backed levels reload on
    // demand.
    void release(unsigned n);

  private:
    std::shared_ptr<const LevelTable> compute_level(unsigned n);
    std::shared_ptr<const LevelTable> fetch(unsigned n);
    void retain(unsigned n, std::shared_ptr<const LevelTable> table);

    CacheDir* disk_ = nullptr;
    unsigned pin_limit_;
    unsigned threads_ = 1;
    unsigned max_ensured_ = 0;
    std::map<unsigned, std::shared_ptr<const LevelTable>> resident_;
    std::vector<IntPoly> jn_;  // jn_[m-1] = J_m
};

}  // namespace jlq

#endif
