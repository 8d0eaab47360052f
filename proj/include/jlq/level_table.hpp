#ifndef JLQ_LEVEL_TABLE_HPP
#define JLQ_LEVEL_TABLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "jlq/partition.hpp"
#include "jlq/qpoly.hpp"

namespace jlq {

// All J polynomials of one weight, keyed by partition in revlex-descending
// order (the enumeration order of PartitionRange). Immutable once built.
class LevelTable {
  public:
    LevelTable(unsigned n, std::vector<Partition> partitions, std::vector<IntPoly> polys);

    unsigned weight() const { return n_; }
    std::size_t size() const { return partitions_.size(); }
    const Partition& partition(std::size_t i) const { return partitions_[i]; }
    const IntPoly& poly(std::size_t i) const { return polys_[i]; }

    std::optional<std::size_t> index_of(const Partition& p) const;
    const IntPoly& at(const Partition& p) const;

    std::size_t max_degree() const;

  private:
    unsigned n_;
    std::vector<Partition> partitions_;
    std::vector<IntPoly> polys_;
};

}  // namespace jlq

#endif
