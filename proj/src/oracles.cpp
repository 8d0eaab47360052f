#include "jlq/oracles.hpp"

#include <algorithm>
#include <cassert>

#include "jlq/parallel.hpp"

namespace jlq {
namespace {

// Decode one Pruefer sequence (values 1..n) into a parent array rooted at
// vertex 1; parent[1] = 0.
void decode_pruefer(unsigned n, const unsigned* seq, unsigned len, unsigned* parent) {
    unsigned degree[16];
    std::pair<unsigned, unsigned> edges[16];
    for (unsigned v = 1; v <= n; ++v) degree[v] = 1;
    for (unsigned i = 0; i < len; ++i) ++degree[seq[i]];
    unsigned edge_count = 0;
    for (unsigned i = 0; i < len; ++i) {
        unsigned leaf = 0;
        for (unsigned v = 1; v <= n; ++v)
            if (degree[v] == 1) {
                leaf = v;
                break;
            }
        edges[edge_count++] = {leaf, seq[i]};
        degree[leaf] = 0;
        --degree[seq[i]];
    }
    unsigned u = 0, w = 0;
    for (unsigned v = 1; v <= n; ++v)
        if (degree[v] == 1) (u ? w : u) = v;
    edges[edge_count++] = {u, w};

    // Orient away from the root with a small BFS.
    unsigned adj_head[16];
    unsigned adj_next[32], adj_to[32];
    std::fill(adj_head, adj_head + n + 1, 0u);
    unsigned slot = 1;
    for (unsigned e = 0; e < edge_count; ++e) {
        for (auto [x, y] : {std::pair(edges[e].first, edges[e].second),
                            std::pair(edges[e].second, edges[e].first)}) {
            adj_to[slot] = y;
            adj_next[slot] = adj_head[x];
            adj_head[x] = slot++;
        }
    }
    unsigned queue[16];
    unsigned head = 0, tail = 0;
    parent[1] = 0;
    queue[tail++] = 1;
    bool seen[16] = {};
    seen[1] = true;
    while (head < tail) {
        unsigned v = queue[head++];
        for (unsigned s = adj_head[v]; s; s = adj_next[s]) {
            unsigned w2 = adj_to[s];
            if (!seen[w2]) {
                seen[w2] = true;
                parent[w2] = v;
                queue[tail++] = w2;
            }
        }
    }
}

unsigned inversion_count(unsigned n, const unsigned* parent) {
    unsigned inv = 0;
    for (unsigned v = 2; v <= n; ++v)
        for (unsigned a = parent[v]; a; a = parent[a])
            if (a > v) ++inv;
    return inv;
}

}  // namespace

IntPoly tree_inversion_poly(unsigned n, unsigned threads) {
    if (n < 2 || n > 9)
        throw ResourceGuard("tree_inversion_poly supports 2 <= n <= 9, got " +
                            std::to_string(n));
    const unsigned len = n - 2;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < len; ++i) total *= n;

    const std::size_t max_inv = static_cast<std::size_t>(n - 1) * (n - 2) / 2;
    const unsigned workers = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> counts(workers,
                                                   std::vector<std::uint64_t>(max_inv + 1, 0));

    // The Pruefer index space splits into independent ranges; merging the
    // per-range tallies is plain addition.
    parallel_for(0, workers, workers, [&](std::size_t w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        unsigned seq[16], parent[16];
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint64_t x = idx;
            for (unsigned i = 0; i < len; ++i) {
                seq[i] = static_cast<unsigned>(x % n) + 1;
                x /= n;
            }
            decode_pruefer(n, seq, len, parent);
            ++counts[w][inversion_count(n, parent)];
        }
    });

    std::vector<BigInt> coeffs(max_inv + 1, BigInt(0));
    for (const auto& local : counts)
        for (std::size_t k = 0; k <= max_inv; ++k) coeffs[k] += local[k];
    return IntPoly(std::move(coeffs));
}

std::uint64_t Multigraph::edge_instances() const {
    std::uint64_t total = 0;
    for (const auto& e : edges) total += e.multiplicity;
    return total;
}

Multigraph build_K(unsigned m, unsigned a, unsigned b) {
    // m = 0 (a single vertex, no edges) is allowed: it is the r = n case of
    // the contracted complete graph.
    if (a < 1 || b < 1) throw std::invalid_argument("build_K requires a, b >= 1");
    Multigraph g;
    g.vertex_count = m + 1;
    for (unsigned i = 1; i <= m; ++i) g.edges.push_back({0, i, a});
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = i + 1; j <= m; ++j) g.edges.push_back({i, j, b});
    return g;
}

IntPoly connected_spanning_sum(const Multigraph& g, unsigned threads) {
    const std::uint64_t instances = g.edge_instances();
    if (instances > 24)
        throw ResourceGuard("edge-instance count " + std::to_string(instances) +
                            " exceeds the 2^24 subset guard");
    for (const auto& e : g.edges)
        if (e.a == e.b) throw std::invalid_argument("loop edge in multigraph");

    std::vector<std::pair<unsigned, unsigned>> flat;  // one entry per instance
    for (const auto& e : g.edges)
        for (unsigned k = 0; k < e.multiplicity; ++k) flat.emplace_back(e.a, e.b);

    const unsigned e_count = static_cast<unsigned>(flat.size());
    const unsigned v = g.vertex_count;
    const std::size_t max_exp = e_count >= v - 1 ? e_count - (v - 1) : 0;
    const std::uint64_t masks = std::uint64_t(1) << e_count;

    const unsigned workers = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> counts(workers,
                                                   std::vector<std::uint64_t>(max_exp + 1, 0));
    parallel_for(0, workers, workers, [&](std::size_t w) {
        const std::uint64_t begin = masks * w / workers;
        const std::uint64_t end = masks * (w + 1) / workers;
        unsigned root[32];
        auto find = [&](unsigned x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            const unsigned picked = static_cast<unsigned>(__builtin_popcountll(mask));
            if (picked < v - 1) continue;
            for (unsigned i = 0; i < v; ++i) root[i] = i;
            unsigned components = v;
            for (unsigned i = 0; i < e_count; ++i) {
                if (!(mask >> i & 1)) continue;
                unsigned ra = find(flat[i].first), rb = find(flat[i].second);
                if (ra != rb) {
                    root[ra] = rb;
                    --components;
                }
            }
            if (components == 1) ++counts[w][picked - (v - 1)];
        }
    });

    std::vector<BigInt> coeffs(max_exp + 1, BigInt(0));
    for (const auto& local : counts)
        for (std::size_t k = 0; k <= max_exp; ++k) coeffs[k] += local[k];
    return IntPoly(std::move(coeffs));
}

IntPoly tutte_I(unsigned m, unsigned a, unsigned b, unsigned threads) {
    const IntPoly in_t = connected_spanning_sum(build_K(m, a, b), threads);
    // Substitute t = q - 1 (Horner).
    static const IntPoly q_minus_one = IntPoly::parse("-1,1");
    IntPoly result;
    for (std::size_t k = in_t.coeffs().size(); k-- > 0;)
        result = result * q_minus_one + IntPoly::constant(in_t.coeff(k));
    return result;
}

const RatPoly& Specialization::p(unsigned k) {
    if (k == 0) throw std::invalid_argument("power sums start at k = 1");
    while (p_.size() < k) {
        const unsigned m = static_cast<unsigned>(p_.size()) + 1;
        auto elementary = [](unsigned j) {
            return RatPoly(IntPoly::monomial(1, static_cast<std::size_t>(j) * (j - 1) / 2),
                           factorial(j));
        };
        // n e_n = sum_{i=1}^{n} (-1)^{i-1} e_{n-i} p_i, solved for p_n.
        RatPoly acc = BigRat(m) * elementary(m);
        for (unsigned i = 1; i < m; ++i) {
            const RatPoly term = elementary(m - i) * p_[i - 1];
            if (i % 2 == 1)
                acc -= term;
            else
                acc += term;
        }
        if (m % 2 == 0) acc = BigRat(-1) * acc;
        p_.push_back(std::move(acc));
    }
    return p_[k - 1];
}

const RatPoly& Specialization::augmented_monomial(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("augmented monomial of empty partition");
    if (lambda.weight() > weight_cap)
        throw ResourceGuard("augmented monomial weight " + std::to_string(lambda.weight()) +
                            " exceeds cap " + std::to_string(weight_cap));
    std::vector<unsigned> key(lambda.parts().begin(), lambda.parts().end());
    if (auto it = monomial_memo_.find(key); it != monomial_memo_.end()) return it->second;

    RatPoly value;
    if (lambda.length() == 1) {
        value = p(lambda.part(0));
    } else {
        const unsigned last = lambda.part(lambda.length() - 1);
        value = p(last) * augmented_monomial(lambda.star());
        for (std::size_t i = 1; i <= lambda.length() - 1; ++i)
            value -= augmented_monomial(lambda.derived(i));
    }
    return monomial_memo_.emplace(std::move(key), std::move(value)).first->second;
}

bool FactorizationReport::all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.pass; });
}

FactorizationReport verify_factorization(const Partition& lambda, const IntPoly& j,
                                         Specialization& spec) {
    FactorizationReport report;
    auto add = [&](std::string name, bool pass, std::string witness = "") {
        report.clauses.push_back({std::move(name), pass, std::move(witness)});
    };

    const unsigned n = lambda.weight();
    const auto r = static_cast<unsigned>(lambda.length());
    const RatPoly aug = spec.augmented_monomial(lambda);

    static const IntPoly one_minus_q = IntPoly::parse("1,-1");
    IntPoly m_num = aug.numerator();
    bool divisible = true;
    for (unsigned k = 0; k < n - r && divisible; ++k) {
        try {
            m_num = m_num.exact_quotient(one_minus_q);
        } catch (const InexactDivision&) {
            divisible = false;
        }
    }
    add("one_minus_q_divides", divisible,
        divisible ? "" : "augmented monomial not divisible by (1-q)^" + std::to_string(n - r));
    if (!divisible) return report;

    const RatPoly m_poly(m_num, aug.denominator());
    const std::size_t expect_deg = binomial(n - 1, 2).get_ui() + r - 1;
    const unsigned long expect_ord = lambda.n_statistic();
    const std::size_t deg = m_poly.numerator().degree();
    const std::size_t ord = m_poly.numerator().order();
    add("degree", deg == expect_deg,
        deg == expect_deg ? "" : "degree " + std::to_string(deg) + " != " +
                                     std::to_string(expect_deg));
    add("order", ord == expect_ord,
        ord == expect_ord ? "" : "order " + std::to_string(ord) + " != " +
                                     std::to_string(expect_ord));

    BigRat top(m_poly.numerator().leading(), m_poly.denominator());
    top.canonicalize();
    BigRat expect_top(factorial(r - 1), factorial(n - 1));
    expect_top.canonicalize();
    add("top_coefficient", top == expect_top,
        top == expect_top ? "" : top.get_str() + " != " + expect_top.get_str());

    BigRat bottom(m_poly.numerator().coeff(ord), m_poly.denominator());
    bottom.canonicalize();
    BigRat expect_bottom(lambda.multiplicity_factorial(), lambda.conjugate_factorial());
    expect_bottom.canonicalize();
    add("bottom_coefficient", bottom == expect_bottom,
        bottom == expect_bottom ? "" : bottom.get_str() + " != " + expect_bottom.get_str());

    // (n-1)! M q^{-n(lambda)} = J, compared without negative exponents.
    const IntPoly lhs = factorial(n - 1) * m_poly.numerator();
    const IntPoly rhs = m_poly.denominator() * j.shifted_up(expect_ord);
    add("j_bridge", lhs == rhs, lhs == rhs ? "" : "engine J does not match the specialization");
    return report;
}

}  // namespace jlq
