#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "derange/enumeration.hpp"

using namespace derange;

namespace {

// independent partition counter: walk all 2^(n-1) compositions and keep
// the non-increasing ones
int partition_count_oracle(int n) {
    int count = 0;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1 << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        if (std::is_sorted(parts.begin(), parts.end(), std::greater<>())) ++count;
    }
    return count;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

} // namespace

TEST_CASE("partitions in reverse-lexicographic order") {
    CHECK(partitions(1) == std::vector<std::vector<int>>{{1}});
    CHECK(partitions(4) == std::vector<std::vector<int>>{
                               {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions(4).size() == static_cast<std::size_t>(partition_count_oracle(4)));
    CHECK(partitions(7).size() == 15);
    CHECK(partitions(7).size() == static_cast<std::size_t>(partition_count_oracle(7)));
    CHECK_THROWS_AS(partitions(0), std::invalid_argument);
}

TEST_CASE("class sizes") {
    CHECK(class_size({2, 1, 1}) == 6);
    CHECK(class_size({1, 1, 1, 1}) == 1);
    CHECK(class_size({2, 2}) == 3);
    for (int n = 1; n <= 10; ++n) {
        std::uint64_t total = 0;
        for (const auto& r : partitions(n)) total += class_size(r);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("class-size parity facts") {
    // cycle types with a part above 2 have even classes
    for (int n = 2; n <= 10; ++n)
        for (const auto& r : partitions(n))
            if (*std::max_element(r.begin(), r.end()) > 2)
                CHECK(class_size(r) % 2 == 0);
    // all-2s classes count (n-1)(n-3)...(3)(1) and are odd
    for (int n = 2; n <= 10; n += 2) {
        std::uint64_t dfact = 1;
        for (int i = n - 1; i >= 1; i -= 2) dfact *= static_cast<std::uint64_t>(i);
        CHECK(class_size(std::vector<int>(n / 2, 2)) == dfact);
        CHECK(dfact % 2 == 1);
    }
}

TEST_CASE("deranged cycle types") {
    CHECK(deranged_cycle_types(2, 4) == std::vector<std::vector<int>>{{4}, {3, 1}});
    CHECK(deranged_cycle_types(4, 4).empty());
    CHECK(deranged_cycle_types(3, 3).empty());
    CHECK(deranged_cycle_types(2, 3) == std::vector<std::vector<int>>{{3}});
}

TEST_CASE("counts against brute force") {
    CHECK(count_k_derangements(2, 4) == 14);
    CHECK(count_k_derangements(2, 3) == 2);
    CHECK(count_k_derangements(1, 4) == 9);
    // brute-force oracle via the definition predicate
    for (int n = 2; n <= 6; ++n) {
        auto perms = all_permutations(n);
        for (int k = 1; k <= n; ++k) {
            std::uint64_t brute = 0;
            for (const auto& p : perms)
                if (is_k_derangement_direct(p, k)) ++brute;
            CHECK(count_k_derangements(k, n) == brute);
        }
    }
}

TEST_CASE("count symmetry D_k = D_{n-k}") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(count_k_derangements(k, n) == count_k_derangements(n - k, n));
}

TEST_CASE("enumeration") {
    auto d24 = enumerate_k_derangements(2, 4);
    CHECK(d24.size() == 14);
    CHECK(std::is_sorted(d24.begin(), d24.end()));
    const char* listed[] = {"(1 2 3 4)", "(1 2 4 3)", "(1 3 2 4)", "(1 3 4 2)",
                            "(1 4 2 3)", "(1 4 3 2)", "(1 2 3)(4)", "(1 2 4)(3)",
                            "(1 3 2)(4)", "(1 3 4)(2)", "(1 4 2)(3)", "(1 4 3)(2)",
                            "(2 3 4)(1)", "(2 4 3)(1)"};
    std::vector<Permutation> expect;
    for (const char* s : listed) expect.push_back(Permutation::from_cycles(s, 4));
    std::sort(expect.begin(), expect.end());
    CHECK(d24 == expect);

    CHECK(enumerate_k_derangements(1, 2) ==
          std::vector<Permutation>{Permutation::from_cycles("(1 2)", 2)});
    auto d34 = enumerate_k_derangements(3, 4);
    CHECK(std::find(d34.begin(), d34.end(), Permutation::from_cycles("(1 2)(3 4)", 4)) !=
          d34.end());
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(enumerate_k_derangements(k, n).size() == count_k_derangements(k, n));
    CHECK_THROWS_AS(enumerate_k_derangements(2, 9), std::length_error);
}

TEST_CASE("Eulerian prediction") {
    CHECK(predict_eulerian(2, 4));
    CHECK_FALSE(predict_eulerian(1, 4));
    CHECK(predict_eulerian(3, 5));
    CHECK_THROWS_AS(predict_eulerian(1, 3), std::domain_error);
    CHECK_THROWS_AS(predict_eulerian(4, 4), std::domain_error);
    // parity law against the counts
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; k < n; ++k)
            CHECK((count_k_derangements(k, n) % 2 == 0) == predict_eulerian(k, n));
}
