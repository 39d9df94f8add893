#ifndef DERANGE_CAYLEY_HPP
#define DERANGE_CAYLEY_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "derange/permutation.hpp"

namespace derange {

// Lexicographic (Lehmer-code) rank of a permutation, in [0, n!).
std::uint64_t perm_rank(const Permutation& a);
Permutation perm_unrank(std::uint64_t r, int n);

enum class GraphFormat { dimacs, json, edges };

// Cayley graph of S_n with connection set D_{k,n}. Vertices are ranks.
// Adjacency is answered from connection-set membership; an explicit
// bitmatrix can be materialized for n <= 7.
class CayleyGraph {
public:
    static constexpr int kExplicitCap = 7;
    static constexpr int kImplicitCap = 8;

    CayleyGraph(int n, int k, bool build_explicit = false);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t vertex_count() const { return vcount_; }
    std::uint64_t degree() const { return conn_.size(); }
    std::uint64_t edge_count() const { return vcount_ * degree() / 2; }
    const std::vector<Permutation>& connection_set() const { return conn_; }

    bool in_connection_set(const Permutation& s) const;
    bool adjacent(const Permutation& u, const Permutation& v) const;
    bool adjacent_ranks(std::uint64_t ru, std::uint64_t rv) const;

    bool has_explicit_matrix() const { return !adj_.empty(); }
    // identical vertex sets and edge sets
    bool same_edges(const CayleyGraph& other) const;

    struct Components {
        std::uint64_t count = 0;
        std::vector<std::uint64_t> representatives; // smallest rank per component
        std::vector<std::uint64_t> sizes;
    };
    Components connected_components() const;
    bool is_eulerian() const;

    void export_graph(GraphFormat format, std::ostream& out) const;

private:
    int n_, k_;
    std::uint64_t vcount_;
    std::vector<Permutation> conn_;   // sorted by rank
    std::vector<bool> conn_bits_;     // membership by rank
    std::vector<std::uint64_t> adj_;  // full bitmatrix, row-major, optional
    std::size_t row_words_ = 0;

    void set_edge(std::uint64_t ru, std::uint64_t rv);
};

// Adjacency by the position-agreement characterization: u, v adjacent iff
// no k-subset is sent to the same position set by both. Oracle for
// CayleyGraph::adjacent.
bool position_agreement_adjacent(const Permutation& u, const Permutation& v, int k);

// Two k-derangements whose product (first after second) is the adjacent
// transposition (h h+1). Requires n > 3, 1 <= k < n, 1 <= h < n.
std::pair<Permutation, Permutation> factor_adjacent_transposition(int n, int k, int h);

} // namespace derange

#endif
