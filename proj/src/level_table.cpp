#include "jlq/level_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace jlq {

LevelTable::LevelTable(unsigned n, std::vector<Partition> partitions, std::vector<IntPoly> polys)
    : n_(n), partitions_(std::move(partitions)), polys_(std::move(polys)) {
    if (partitions_.size() != polys_.size())
        throw std::invalid_argument("level table: partition/polynomial count mismatch");
    for (const auto& p : partitions_)
        if (p.weight() != n_) throw std::invalid_argument("level table: wrong-weight partition");
}

std::optional<std::size_t> LevelTable::index_of(const Partition& p) const {
    // Entries are sorted revlex-descending, so binary search on the
    // lexicographic part order.
    auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p,
                               [](const Partition& a, const Partition& b) {
                                   return std::lexicographical_compare(
                                       b.parts().begin(), b.parts().end(), a.parts().begin(),
                                       a.parts().end());
                               });
    if (it == partitions_.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - partitions_.begin());
}

const IntPoly& LevelTable::at(const Partition& p) const {
    auto idx = index_of(p);
    if (!idx) throw std::out_of_range("partition " + p.to_string() + " not in level table");
    return polys_[*idx];
}

std::size_t LevelTable::max_degree() const {
    std::size_t d = 0;
    for (const auto& poly : polys_)
        if (!poly.is_zero()) d = std::max(d, poly.degree());
    return d;
}

}  // namespace jlq
