#ifndef DERANGE_CONSTRUCTIONS_HPP
#define DERANGE_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "derange/gf.hpp"
#include "derange/permutation.hpp"

namespace derange {

struct CliqueCertificate {
    int n = 0, k = 0;
    std::vector<Permutation> members;
    nlohmann::json provenance;
};

struct IndependentSetCertificate {
    int n = 0, k = 0;
    std::vector<Permutation> members;
    nlohmann::json provenance;
};

struct ColoringCertificate {
    int n = 0, k = 0;
    std::vector<int> color_of; // indexed by vertex rank
    int num_colors = 0;
};

struct PairCheck {
    bool ok = true;
    std::size_t first = 0, second = 0;     // offending member indices
    std::vector<int> witness_subset;       // the agreeing k-subset, if any
};

// Arrangement f_{s,alpha}: entry at position i is label(s * e_{i-1} + alpha) + 1,
// where e_j is the element with label j. Requires s != 0.
Permutation affine_arrangement(const GaloisField& f, int s, int alpha);

// The affine clique in the 2-derangement graph on order = n points:
// {f_{s,alpha} : s in T, alpha in F}, |X| = C(n,2).
CliqueCertificate build_clique(const GaloisField& f,
                               std::optional<std::vector<int>> t_labels = std::nullopt);

// Pairwise adjacency check via the cycle-type predicate on quotients; with
// position_scan the slower position-agreement characterization is used
// instead. Reports the lexicographically smallest violating pair.
PairCheck verify_clique(const CliqueCertificate& cert, bool position_scan = false);

// All permutations stabilizing {1..k} setwise: k!(n-k)! members.
IndependentSetCertificate build_independent_set(int k, int n);
PairCheck verify_independent_set(const IndependentSetCertificate& cert);

// Color of sigma = lexicographic index of induced_image(sigma, {1..k});
// exactly C(n,k) colors, one per coset of the setwise stabilizer.
ColoringCertificate coset_coloring(int k, int n);
bool verify_coloring(const ColoringCertificate& cert);

// Lexicographic index of a k-subset of {1..n} among all k-subsets.
std::uint64_t subset_lex_index(const std::vector<int>& subset, int n);

std::uint64_t binomial(int n, int k);

bool frankl_deza_check(std::uint64_t alpha_value, std::uint64_t omega_value, int n);

struct TheoreticalValues {
    std::uint64_t omega_upper = 0;  // C(n,k)
    std::uint64_t alpha_lower = 0;  // k!(n-k)!
    std::uint64_t chi_upper = 0;    // C(n,k)
    bool exact = false;             // k = 2 and n an odd prime power
    std::uint64_t omega_exact = 0, alpha_exact = 0, chi_exact = 0;
};
TheoreticalValues theoretical_values(int k, int n);

} // namespace derange

#endif
