#include "jlq/partition.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jlq {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition part must be positive");
        if (i && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be non-increasing");
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (empty()) return {};
    std::vector<unsigned> c(parts_[0]);
    for (unsigned i = 0; i < parts_[0]; ++i) {
        unsigned count = 0;
        for (unsigned p : parts_)
            if (p >= i + 1) ++count;
        c[i] = count;
    }
    return Partition(std::move(c));
}

unsigned long Partition::n_statistic() const {
    unsigned long n = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) n += i * static_cast<unsigned long>(parts_[i]);
#ifndef NDEBUG
    unsigned long via_conjugate = 0;
    const Partition conj = conjugate();
    for (unsigned p : conj.parts())
        via_conjugate += static_cast<unsigned long>(p) * (p - 1) / 2;
    assert(n == via_conjugate);
#endif
    return n;
}

std::vector<unsigned> Partition::multiplicities() const {
    std::vector<unsigned> r(empty() ? 0 : parts_[0], 0);
    for (unsigned p : parts_) ++r[p - 1];
    return r;
}

BigInt Partition::multiplicity_factorial() const {
    BigInt m(1);
    for (unsigned r : multiplicities())
        if (r > 1) m *= factorial(r);
    return m;
}

BigInt Partition::conjugate_factorial() const {
    BigInt f(1);
    const Partition conj = conjugate();
    for (unsigned p : conj.parts()) f *= factorial(p);
    return f;
}

Partition Partition::star() const {
    if (empty()) throw std::logic_error("star of the empty partition");
    return Partition(std::vector<unsigned>(parts_.begin(), parts_.end() - 1));
}

Partition Partition::derived(std::size_t i) const {
    if (length() < 2) throw std::logic_error("derived partition requires length >= 2");
    if (i < 1 || i > length() - 1) throw std::out_of_range("derived index out of range");
    Composition u{std::vector<unsigned>(parts_.begin(), parts_.end() - 1)};
    u.terms[i - 1] += parts_.back();
    Partition d = u.to_partition();
    assert(d.weight() == weight() && d.length() == length() - 1);
    assert(revlex_cmp(*this, d) == std::strong_ordering::less);
    return d;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(std::string_view text) {
    if (text.empty()) return {};
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0)
            throw std::invalid_argument("bad partition syntax near '" + std::string(tok) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));  // rejects non-descending input
}

unsigned Composition::weight() const {
    return std::accumulate(terms.begin(), terms.end(), 0u);
}

Partition Composition::to_partition() const {
    std::vector<unsigned> sorted = terms;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return Partition(std::move(sorted));
}

std::strong_ordering revlex_cmp(const Partition& a, const Partition& b) {
    assert(a.weight() == b.weight());
    const auto pa = a.parts(), pb = b.parts();
    const std::size_t n = std::min(pa.size(), pb.size());
    for (std::size_t i = 0; i < n; ++i)
        if (pa[i] != pb[i]) return pa[i] <=> pb[i];
    // At equal weight one sequence cannot be a proper prefix of the other.
    assert(pa.size() == pb.size());
    return std::strong_ordering::equal;
}

Dominance dominance_leq(const Partition& a, const Partition& b) {
    assert(a.weight() == b.weight());
    bool a_le_b = true, b_le_a = true;
    unsigned long sa = 0, sb = 0;
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.length() ? a.part(i) : 0;
        sb += i < b.length() ? b.part(i) : 0;
        if (sa > sb) a_le_b = false;
        if (sb > sa) b_le_a = false;
    }
    if (a_le_b) return Dominance::LessEqual;
    if (b_le_a) return Dominance::Greater;
    return Dominance::Incomparable;
}

PartitionRange::iterator::iterator(unsigned n) : done_(false) {
    current_ = n ? Partition(std::vector<unsigned>{n}) : Partition();
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
    std::vector<unsigned> p(current_.parts().begin(), current_.parts().end());
    // Successor in descending lexicographic order: shrink the last part
    // greater than 1, then re-spread the freed units greedily.
    std::size_t j = p.size();
    while (j > 0 && p[j - 1] == 1) --j;
    if (j == 0) {
        done_ = true;
        current_ = Partition();
        return *this;
    }
    unsigned remainder = static_cast<unsigned>(p.size() - j) + p[j - 1];
    const unsigned h = p[j - 1] - 1;
    p.resize(j - 1);
    while (remainder >= h) {
        p.push_back(h);
        remainder -= h;
    }
    if (remainder) p.push_back(remainder);
    current_ = Partition(std::move(p));
    return *this;
}

std::vector<Partition> all_partitions_of(unsigned n) {
    std::vector<Partition> out;
    for (const Partition& p : PartitionRange(n)) out.push_back(p);
    return out;
}

}  // namespace jlq
