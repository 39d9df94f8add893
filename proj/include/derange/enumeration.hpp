#ifndef DERANGE_ENUMERATION_HPP
#define DERANGE_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "derange/permutation.hpp"

namespace derange {

// All partitions of n in reverse-lexicographic order ({n} first), parts
// non-increasing within each partition.
std::vector<std::vector<int>> partitions(int n);

// Exact n! for n <= 20; throws on overflow range.
std::uint64_t factorial(int n);

// Number of permutations of S_n (n = sum of parts) with the given cycle
// type: n! / prod_i (i^{m_i} * m_i!).
std::uint64_t class_size(const std::vector<int>& parts);

// Cycle types of n whose permutations are k-derangements.
std::vector<std::vector<int>> deranged_cycle_types(int k, int n);

// D_k(n): sum of class sizes over deranged_cycle_types(k, n).
std::uint64_t count_k_derangements(int k, int n);

// All k-derangements of S_n in lexicographic one-line order.
std::vector<Permutation> enumerate_k_derangements(int k, int n, int cap = 8);

// True iff the derangement graph is Eulerian, by the parity law:
// k even, or k and n both odd. Requires n > 3 and 1 <= k < n.
bool predict_eulerian(int k, int n);

} // namespace derange

#endif
