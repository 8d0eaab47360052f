#ifndef JLQ_ORACLES_HPP
#define JLQ_ORACLES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jlq/partition.hpp"
#include "jlq/qpoly.hpp"

namespace jlq {

// A resource guard was exceeded (tree count, edge-subset count, weight cap).
struct ResourceGuard : std::runtime_error {
    explicit ResourceGuard(const std::string& what) : std::runtime_error(what) {}
};

// Sum of q^{inv(T)} over all labeled trees on {1..n} rooted at 1, where an
// inversion is a pair (i, j), i > j >= 2, with i a proper ancestor of j.
// Enumerates the n^{n-2} Pruefer sequences; guard 2 <= n <= 9.
IntPoly tree_inversion_poly(unsigned n, unsigned threads = 1);

// Loopless multigraph on vertices 0..vertex_count-1.
struct Multigraph {
    struct Edge {
        unsigned a, b;
        unsigned multiplicity;
    };
    unsigned vertex_count = 0;
    std::vector<Edge> edges;

    std::uint64_t edge_instances() const;
};

// Complete multigraph on {0..m}: spokes (0,i) with multiplicity a, inner
// edges (i,j) with multiplicity b.
Multigraph build_K(unsigned m, unsigned a, unsigned b);

// Sum over connected spanning edge-instance subsets A of t^{|A|-(V-1)}.
// Subset enumeration; guard: at most 24 edge instances.
IntPoly connected_spanning_sum(const Multigraph& g, unsigned threads = 1);

// T(1, q) of build_K(m, a, b): substitutes t = q - 1 into the connected
// spanning sum.
IntPoly tutte_I(unsigned m, unsigned a, unsigned b, unsigned threads = 1);

// Specializations of symmetric functions from first principles, starting
// at e_n = q^{C(n,2)}/n! and never touching the J engine's data path.
class Specialization {
  public:
    // Power sum p_k via Newton's identities.
    const RatPoly& p(unsigned k);
    // Augmented monomial via the merge recurrence with base p_k.
    // Guard: weight <= weight_cap (default 10).
    const RatPoly& augmented_monomial(const Partition& lambda);

    unsigned weight_cap = 10;

  private:
    std::vector<RatPoly> p_;  // p_[k-1] = p_k
    std::map<std::vector<unsigned>, RatPoly> monomial_memo_;
};

struct FactorizationReport {
    struct Clause {
        std::string name;
        bool pass;
        std::string witness;
    };
    std::vector<Clause> clauses;
    bool all_pass() const;
};

// Checks the factorization of the specialized augmented monomial against
// an engine-produced J: exact (1-q)-power division, degree/order of the
// quotient, its extreme coefficients, and the J bridge itself.
FactorizationReport verify_factorization(const Partition& lambda, const IntPoly& j,
                                         Specialization& spec);

}  // namespace jlq

#endif
