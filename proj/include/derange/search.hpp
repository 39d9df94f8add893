#ifndef DERANGE_SEARCH_HPP
#define DERANGE_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "derange/cayley.hpp"
#include "derange/constructions.hpp"
#include "derange/permutation.hpp"

namespace derange {

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 300.0;
    bool exact = true; // false: stop at the first incumbent the budget allows
};

struct SearchResult {
    int best_size = 0;
    std::vector<Permutation> witness;
    bool proven_optimal = false;
    std::uint64_t nodes_explored = 0;
};

// Exact maximum clique via branch and bound with a greedy-coloring bound.
// Uses vertex-transitivity: omega = 1 + omega of the subgraph induced by
// the identity's neighborhood (the connection set).
SearchResult max_clique(const CayleyGraph& g, const SearchBudget& budget = {});

// Same search without the identity-neighborhood reduction; cross-check
// for tiny n.
SearchResult max_clique_naive(const CayleyGraph& g, const SearchBudget& budget = {});

// Maximum independent set = maximum clique of the complement Cayley graph
// (connection set: non-identity non-k-derangements).
SearchResult max_independent_set(const CayleyGraph& g, const SearchBudget& budget = {});

// Greedy extension plus seeded local search. The result always contains a
// clique at least as large as the seed. Deterministic for a fixed seed_value.
CliqueCertificate grow_clique_heuristic(const CayleyGraph& g,
                                        const std::vector<Permutation>& seed,
                                        const SearchBudget& budget = {},
                                        std::uint64_t seed_value = 0x2545F4914F6CDD1DULL);

} // namespace derange

#endif
