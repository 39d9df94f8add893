#ifndef DERANGE_PERMUTATION_HPP
#define DERANGE_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace derange {

// Permutation of {1,...,n}. Stored 0-based internally: img_[i] is the image
// of point i. All serialized forms are 1-based one-line arrays.
class Permutation {
public:
    static Permutation identity(int n);

    // one-line form, 1-based entries, e.g. {2,3,1,4,5}
    static Permutation from_one_line(const std::vector<int>& one_based);

    // cycle notation, e.g. "(1 2 3)(4)" or "(1,2,3)"; "e" is the identity
    static Permutation from_cycles(const std::string& text, int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply0(int i) const { return img_[i]; }               // 0-based
    int apply(int point) const { return img_[point - 1] + 1; } // 1-based
    const std::vector<int>& images0() const { return img_; }

    std::vector<int> one_line() const; // 1-based
    std::string cycle_string() const;  // "(1 2 3)(4)"

    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation& o) const { return img_ <=> o.img_; }

private:
    explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
    std::vector<int> img_;
};

// a after b: result(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
// tau * sigma * tau^-1
Permutation conjugate(const Permutation& tau, const Permutation& sigma);

// Multiset of cycle lengths (fixed points included as 1s), non-increasing.
std::vector<int> cycle_type(const Permutation& a);

// Image of a k-subset under the induced action; elems 1-based, strictly
// increasing in and out.
std::vector<int> induced_image(const Permutation& a, const std::vector<int>& elems);

// True iff some sub-multiset of parts sums exactly to k (subset-sum DP).
bool has_subpartition(const std::vector<int>& parts, int k);

// Cycle-type predicate: no sub-multiset of the cycle type sums to k.
bool is_k_derangement(const Permutation& a, int k);

// Definition-based predicate: the induced action fixes no k-subset.
// Independent of is_k_derangement; used as its oracle.
bool is_k_derangement_direct(const Permutation& a, int k);

// Visit all k-subsets of {1..n} in lexicographic order (1-based, increasing).
// Return false from the callback to stop early.
void for_each_k_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f);

} // namespace derange

#endif
