#ifndef JLQ_PARTITION_HPP
#define JLQ_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jlq/bigint.hpp"

namespace jlq {

// Integer partition: non-increasing positive parts. The empty partition is
// the unique partition of 0. Immutable after construction.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);  // must be non-increasing

    unsigned weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    std::span<const unsigned> parts() const { return parts_; }
    unsigned part(std::size_t i) const { return parts_[i]; }  // 0-based
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    // The statistic sum_i (i-1)*lambda_i; equals sum_i C(conjugate_i, 2).
    unsigned long n_statistic() const;

    // multiplicities()[v-1] = number of parts equal to v, for v = 1..max part.
    std::vector<unsigned> multiplicities() const;
    // Product of factorials of the multiplicities.
    BigInt multiplicity_factorial() const;
    // Product of factorials of the parts of the conjugate.
    BigInt conjugate_factorial() const;

    // Partition with the last part removed. Requires length >= 1.
    Partition star() const;
    // Merge the last part into part i (1-based, 1 <= i <= length-1) and
    // re-sort descending. Weight is preserved, length drops by one.
    Partition derived(std::size_t i) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    // Text form "3,2,1"; the empty partition renders as "".
    std::string to_string() const;
    static Partition parse(std::string_view text);

  private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

// Strict composition of n: positive terms, order significant.
struct Composition {
    std::vector<unsigned> terms;
    unsigned weight() const;
    // Sort descending: the partition lambda(u).
    Partition to_partition() const;
};

// Reverse lexicographic total order on partitions of equal weight:
// part sequences compared lexicographically, larger-first is greater,
// so (n) is maximal and 1^n minimal. Requires |a| = |b|.
std::strong_ordering revlex_cmp(const Partition& a, const Partition& b);

enum class Dominance { LessEqual, Greater, Incomparable };

// Dominance comparison via prefix sums (zero-padded). Requires |a| = |b|.
// Equal partitions report LessEqual.
Dominance dominance_leq(const Partition& a, const Partition& b);

// Enumerates all partitions of n in revlex-descending order: (n) first,
// 1^n last. Single-consumer forward iteration.
class PartitionRange {
  public:
    explicit PartitionRange(unsigned n) : n_(n) {}

    class iterator {
      public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;  // end
        explicit iterator(unsigned n);
        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& o) const { return done_ == o.done_; }

      private:
        Partition current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

  private:
    unsigned n_;
};

std::vector<Partition> all_partitions_of(unsigned n);

}  // namespace jlq

#endif
