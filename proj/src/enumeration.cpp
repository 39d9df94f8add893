#include "derange/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace derange {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> partitions(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::overflow_error("factorial out of exact 64-bit range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t class_size(const std::vector<int>& parts) {
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::map<int, int> mult;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("parts must be positive");
        ++mult[p];
    }
    std::uint64_t denom = 1;
    for (auto [len, m] : mult) {
        for (int i = 0; i < m; ++i) denom *= static_cast<std::uint64_t>(len);
        denom *= factorial(m);
    }
    return factorial(n) / denom;
}

std::vector<std::vector<int>> deranged_cycle_types(int k, int n) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::vector<std::vector<int>> out;
    for (auto& r : partitions(n))
        if (!has_subpartition(r, k)) out.push_back(r);
    return out;
}

std::uint64_t count_k_derangements(int k, int n) {
    std::uint64_t total = 0;
    for (auto& r : deranged_cycle_types(k, n)) total += class_size(r);
    return total;
}

std::vector<Permutation> enumerate_k_derangements(int k, int n, int cap) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (n > cap) throw std::length_error("enumeration cap exceeded");
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p = Permutation::from_one_line(line);
        if (is_k_derangement(p, k)) out.push_back(std::move(p));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

bool predict_eulerian(int k, int n) {
    if (n <= 3 || k < 1 || k >= n)
        throw std::domain_error("Eulerian law requires n > 3 and 1 <= k < n");
    return k % 2 == 0 || (k % 2 == 1 && n % 2 == 1);
}

} // namespace derange
