#include "jlq/engine.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "jlq/level_io.hpp"
#include "jlq/parallel.hpp"

namespace jlq {

IntPoly compute_jn(unsigned n, const LevelTable& prev) {
    if (n < 2) throw std::invalid_argument("compute_jn requires n >= 2");
    if (prev.weight() != n - 1) throw std::invalid_argument("previous level has wrong weight");
    // Common denominator = lcm of the multiplicity factorials, one
    // exactness check at the end.
    BigInt den(1);
    for (std::size_t i = 0; i < prev.size(); ++i)
        den = lcm(den, prev.partition(i).multiplicity_factorial());
    IntPoly acc;
    for (std::size_t i = 0; i < prev.size(); ++i) {
        const Partition& lam = prev.partition(i);
        const BigInt scale = exact_div(den, lam.multiplicity_factorial());
        acc += (scale * prev.poly(i)).shifted_up(lam.n_statistic());
    }
    return RatPoly(BigInt(n - 1) * acc, den).to_int();
}

IntPoly compute_jlambda(const Partition& lambda, const JlambdaContext& ctx) {
    const unsigned n = lambda.weight();
    const std::size_t r = lambda.length();
    if (r < 2) throw std::invalid_argument("compute_jlambda requires length >= 2");
    const unsigned last = lambda.part(r - 1);
    const unsigned long n_lambda = lambda.n_statistic();

    const Partition star = lambda.star();
    const Partition single(std::vector<unsigned>{last});
    const BigInt scalar = BigInt(n - 1) * binomial(n - 2, last - 1);
    LaurentPoly acc(scalar * (ctx.lower_weight(single) * ctx.lower_weight(star)),
                    -static_cast<long>((r - 1) * last));

    // Each merged partition enters at q^{n(lambda^(i)) - n(lambda)}. When no
    // re-sorting happens in derived(i) this is the usual q^{last*(i-r)}.
    LaurentPoly sum;
    for (std::size_t i = 1; i <= r - 1; ++i) {
        const Partition merged = lambda.derived(i);
        const long shift =
            static_cast<long>(merged.n_statistic()) - static_cast<long>(n_lambda);
        sum += LaurentPoly(ctx.same_weight(merged), shift);
    }
    static const IntPoly q_minus_one = IntPoly::parse("-1,1");
    acc += LaurentPoly::from(q_minus_one) * sum;

    IntPoly result = acc.finalize();
    assert(result.is_zero() || result.order() == 0);
    return result;
}

IntPoly jnr_aggregate(unsigned n, unsigned r, const LevelTable& level) {
    if (r < 1 || r > n) throw std::invalid_argument("jnr_aggregate requires 1 <= r <= n");
    if (level.weight() != n) throw std::invalid_argument("level has wrong weight");
    BigInt den(1);
    for (std::size_t i = 0; i < level.size(); ++i)
        if (level.partition(i).length() == r)
            den = lcm(den, level.partition(i).multiplicity_factorial());
    IntPoly acc;
    for (std::size_t i = 0; i < level.size(); ++i) {
        const Partition& lam = level.partition(i);
        if (lam.length() != r) continue;
        const BigInt scale = exact_div(den, lam.multiplicity_factorial());
        acc += (scale * level.poly(i)).shifted_up(lam.n_statistic());
    }
    const BigInt num_scale = factorial(r) * factorial(n - r);
    const long shift = -static_cast<long>(binomial(r, 2).get_ui());
    IntPoly shifted = LaurentPoly(num_scale * acc, shift).finalize();
    return RatPoly(std::move(shifted), den * factorial(n - 1)).to_int();
}

const IntPoly& JnrTable::at(unsigned n, unsigned r) {
    if (r < 1 || r > n) throw std::invalid_argument("JnrTable requires 1 <= r <= n");
    auto key = std::make_pair(n, r);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    IntPoly value;
    if (r == n) {
        value = IntPoly::constant(1);
    } else {
        const unsigned m = n - r;
        const IntPoly base = q_analogue(r);
        IntPoly power = base;  // [r]_q^j, built incrementally
        for (unsigned j = 1; j <= m; ++j) {
            const unsigned long tri = static_cast<unsigned long>(j) * (j - 1) / 2;
            value += (binomial(m, j) * (power * at(m, j))).shifted_up(tri);
            if (j < m) power = power * base;
        }
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

RatPoly FactoredMonomial::expand() const {
    static const IntPoly one_minus_q = IntPoly::parse("1,-1");
    IntPoly num = scalar_num * j_part;
    for (unsigned long k = 0; k < one_minus_q_exponent; ++k) num = num * one_minus_q;
    return RatPoly(num.shifted_up(q_exponent), scalar_den);
}

FactoredMonomial m_lambda_factored(const Partition& lambda, const LevelTable& level) {
    if (lambda.weight() != level.weight())
        throw std::invalid_argument("partition weight does not match level");
    return FactoredMonomial{
        lambda.weight() - lambda.length(),
        lambda.n_statistic(),
        BigInt(1),
        factorial(lambda.weight() - 1) * lambda.multiplicity_factorial(),
        level.at(lambda),
    };
}

LevelCache::LevelCache() : pin_limit_(std::numeric_limits<unsigned>::max()) {}

LevelCache::LevelCache(CacheDir& dir, unsigned pin_limit) : disk_(&dir), pin_limit_(pin_limit) {}

LevelCache::~LevelCache() = default;

void LevelCache::retain(unsigned n, std::shared_ptr<const LevelTable> table) {
    if (jn_.size() < n) jn_.resize(n);
    if (jn_[n - 1].is_zero()) jn_[n - 1] = table->poly(0);  // first entry is (n)
    resident_[n] = std::move(table);
    max_ensured_ = std::max(max_ensured_, n);
}

std::shared_ptr<const LevelTable> LevelCache::fetch(unsigned n) {
    if (n == 0) throw std::invalid_argument("levels start at weight 1");
    if (auto it = resident_.find(n); it != resident_.end()) return it->second;
    std::shared_ptr<const LevelTable> table;
    if (disk_ && disk_->has_level(n))
        table = std::make_shared<LevelTable>(disk_->load_level(n));
    else
        table = compute_level(n);
    retain(n, table);
    return table;
}

std::shared_ptr<const LevelTable> LevelCache::level(unsigned n) { return fetch(n); }

const IntPoly& LevelCache::single_part(unsigned m) const {
    if (m == 0 || m > jn_.size() || jn_[m - 1].is_zero())
        throw std::out_of_range("J_" + std::to_string(m) + " not ensured yet");
    return jn_[m - 1];
}

void LevelCache::release(unsigned n) {
    if (disk_ && n > pin_limit_) resident_.erase(n);
}

std::shared_ptr<const LevelTable> LevelCache::compute_level(unsigned n) {
    std::vector<Partition> partitions = all_partitions_of(n);
    std::vector<IntPoly> polys(partitions.size());

    if (n == 1) {
        polys[0] = IntPoly::constant(1);
    } else {
        auto prev = fetch(n - 1);
        try {
            polys[0] = compute_jn(n, *prev);
        } catch (const InexactDivision& e) {
            throw InexactDivision("J(" + partitions[0].to_string() + "): " + e.what());
        }

        // Phase one: the cross-weight product term of each entry. Grouping
        // by the star weight means each lower level is loaded exactly once
        // and released before the next, so the sweep holds only the
        // frontier (plus pinned small levels) in memory.
        std::vector<LaurentPoly> partials(partitions.size());
        std::map<unsigned, std::vector<std::size_t>> by_star_weight;
        for (std::size_t i = 0; i < partitions.size(); ++i) {
            if (partitions[i].length() < 2) continue;
            const unsigned last = partitions[i].part(partitions[i].length() - 1);
            by_star_weight[n - last].push_back(i);
            if (jn_.size() < last || jn_[last - 1].is_zero()) fetch(last);
        }
        for (const auto& [w, idxs] : by_star_weight) {
            auto star_level = w == n - 1 ? prev : fetch(w);
            parallel_for(0, idxs.size(), threads_, [&](std::size_t k) {
                const Partition& lam = partitions[idxs[k]];
                const std::size_t r = lam.length();
                const unsigned last = lam.part(r - 1);
                const BigInt scalar = BigInt(n - 1) * binomial(n - 2, last - 1);
                partials[idxs[k]] =
                    LaurentPoly(scalar * (single_part(last) * star_level->at(lam.star())),
                                -static_cast<long>((r - 1) * last));
            });
            if (w != n - 1) release(w);
        }

        // Phase two, wavefront by length: every same-weight dependency of a
        // length-r partition has length r-1, so the length classes schedule
        // the revlex-descending dependency order correctly.
        std::vector<std::vector<std::size_t>> by_length(n + 1);
        for (std::size_t i = 0; i < partitions.size(); ++i)
            by_length[partitions[i].length()].push_back(i);

        auto same_weight = [&](const Partition& p) -> const IntPoly& {
            auto it = std::lower_bound(partitions.begin(), partitions.end(), p,
                                       [](const Partition& a, const Partition& b) {
                                           return std::lexicographical_compare(
                                               b.parts().begin(), b.parts().end(),
                                               a.parts().begin(), a.parts().end());
                                       });
            assert(it != partitions.end() && *it == p);
            return polys[static_cast<std::size_t>(it - partitions.begin())];
        };
        static const IntPoly q_minus_one = IntPoly::parse("-1,1");
        for (std::size_t r = 2; r <= n; ++r) {
            const auto& wave = by_length[r];
            parallel_for(0, wave.size(), threads_, [&](std::size_t k) {
                const Partition& lam = partitions[wave[k]];
                try {
                    const unsigned long n_lambda = lam.n_statistic();
                    LaurentPoly sum;
                    for (std::size_t i = 1; i + 1 <= lam.length(); ++i) {
                        const Partition merged = lam.derived(i);
                        const long shift = static_cast<long>(merged.n_statistic()) -
                                           static_cast<long>(n_lambda);
                        sum += LaurentPoly(same_weight(merged), shift);
                    }
                    LaurentPoly acc = std::move(partials[wave[k]]);
                    acc += LaurentPoly::from(q_minus_one) * sum;
                    polys[wave[k]] = acc.finalize();
                    partials[wave[k]] = LaurentPoly();
                } catch (const NegativePowerResidue& e) {
                    throw NegativePowerResidue("J(" + lam.to_string() + "): " + e.what());
                } catch (const InexactDivision& e) {
                    throw InexactDivision("J(" + lam.to_string() + "): " + e.what());
                }
            });
        }
    }

    auto table = std::make_shared<LevelTable>(n, std::move(partitions), std::move(polys));
    if (disk_ && !disk_->has_level(n)) disk_->save_level(*table);
    return table;
}

void LevelCache::ensure_through(unsigned n,
                                const std::function<void(const LevelTable&)>& progress) {
    for (unsigned k = 1; k <= n; ++k) {
        if (resident_.count(k)) continue;
        if (disk_ && disk_->has_level(k)) {
            // Resume contract: never recompute cached levels, load lazily.
            max_ensured_ = std::max(max_ensured_, k);
            continue;
        }
        auto table = fetch(k);
        if (progress) progress(*table);
        // Keep pinned levels and the frontier; everything else can be
        // reloaded from disk on demand.
        if (disk_) {
            for (auto it = resident_.begin(); it != resident_.end();) {
                if (it->first > pin_limit_ && it->first + 1 < k)
                    it = resident_.erase(it);
                else
                    ++it;
            }
        }
    }
    max_ensured_ = std::max(max_ensured_, n);
}

}  // namespace jlq
