#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "derange/permutation.hpp"

using namespace derange;

namespace {

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

TEST_CASE("one-line construction and validation") {
    auto p = Permutation::from_one_line({2, 3, 1, 4, 5});
    CHECK(p.degree() == 5);
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(3) == 1);
    CHECK(p.one_line() == std::vector<int>{2, 3, 1, 4, 5});
    CHECK_THROWS_AS(Permutation::from_one_line({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_line({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_line({}), std::invalid_argument);
}

TEST_CASE("cycle notation parser") {
    CHECK(Permutation::from_cycles("(1 2 3)(4)", 4).one_line() == std::vector<int>{2, 3, 1, 4});
    CHECK(Permutation::from_cycles("(1,2)", 4).one_line() == std::vector<int>{2, 1, 3, 4});
    CHECK(Permutation::from_cycles("e", 3) == Permutation::identity(3));
    CHECK_THROWS_AS(Permutation::from_cycles("(1 2)(2 3)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("(1 5)", 3), std::invalid_argument);
    // round trip through cycle_string
    auto p = Permutation::from_one_line({3, 1, 2, 5, 4});
    CHECK(Permutation::from_cycles(p.cycle_string(), 5) == p);
}

TEST_CASE("compose") {
    auto e = Permutation::identity(4);
    auto sigma = Permutation::from_cycles("(1 3 2)", 4);
    CHECK(compose(e, sigma) == sigma);
    CHECK(compose(sigma, e) == sigma);
    auto t = Permutation::from_cycles("(1 2)", 4);
    CHECK(compose(t, t) == e);
    auto c = Permutation::from_cycles("(1 2 3 4)", 4);
    CHECK(compose(c, c) == Permutation::from_cycles("(1 3)(2 4)", 4));
    CHECK_THROWS_AS(compose(e, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("inverse") {
    CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
    CHECK(inverse(Permutation::from_cycles("(1 2 3)", 3)) ==
          Permutation::from_cycles("(1 3 2)", 3));
    auto c = Permutation::from_cycles("(1 2 3 4)", 4);
    CHECK(inverse(c) == Permutation::from_cycles("(1 4 3 2)", 4));
    CHECK(compose(c, inverse(c)) == Permutation::identity(4));
}

TEST_CASE("cycle type") {
    CHECK(cycle_type(Permutation::from_cycles("(1 2)(3)(4 5)", 5)) == std::vector<int>{2, 2, 1});
    CHECK(cycle_type(Permutation::identity(5)) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(cycle_type(Permutation::from_cycles("(1 2 3 4)", 4)) == std::vector<int>{4});
}

TEST_CASE("induced image") {
    auto c = Permutation::from_cycles("(1 2 3 4)", 4);
    CHECK(induced_image(c, {1, 2}) == std::vector<int>{2, 3});
    CHECK(induced_image(c, {1, 4}) == std::vector<int>{1, 2});
    CHECK(induced_image(Permutation::identity(4), {2, 4}) == std::vector<int>{2, 4});
    CHECK_THROWS_AS(induced_image(c, {1, 5}), std::out_of_range);
}

TEST_CASE("has_subpartition") {
    CHECK(has_subpartition({2, 1, 1}, 3));
    CHECK_FALSE(has_subpartition({2, 2}, 3));
    CHECK(has_subpartition({5, 3}, 0));
    CHECK(has_subpartition({}, 0));
    CHECK_FALSE(has_subpartition({}, 1));
}

TEST_CASE("k-derangement predicates on the worked examples") {
    auto c4 = Permutation::from_cycles("(1 2 3 4)", 4);
    CHECK(is_k_derangement_direct(c4, 2));
    CHECK(is_k_derangement(c4, 2));
    CHECK_FALSE(is_k_derangement_direct(Permutation::identity(4), 2));
    CHECK_FALSE(is_k_derangement_direct(Permutation::from_cycles("(1 2)(3)(4)", 4), 3));
    CHECK(is_k_derangement(Permutation::from_cycles("(1 2 3)(4)", 4), 2));
    auto dbl = Permutation::from_cycles("(1 2)(3 4)", 4);
    CHECK_FALSE(is_k_derangement(dbl, 2));
    CHECK_FALSE(is_k_derangement_direct(dbl, 2));
    CHECK(is_k_derangement(dbl, 3));
    // degenerate degrees
    for (const auto& p : all_permutations(3)) {
        CHECK_FALSE(is_k_derangement(p, 3));
        CHECK_FALSE(is_k_derangement_direct(p, 3));
        CHECK(is_k_derangement(p, 4));
        CHECK(is_k_derangement_direct(p, 4));
    }
}

TEST_CASE("cycle-type predicate equals the definition, exhaustively to n=5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : all_permutations(n))
            for (int k = 1; k <= n; ++k)
                CHECK(is_k_derangement(p, k) == is_k_derangement_direct(p, k));
}

TEST_CASE("inverse closure and conjugation invariance") {
    std::mt19937 rng(12345);
    for (int n = 3; n <= 6; ++n) {
        auto perms = all_permutations(n);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const auto& sigma = perms[pick(rng)];
            const auto& tau = perms[pick(rng)];
            for (int k = 1; k < n; ++k) {
                CHECK(is_k_derangement(sigma, k) == is_k_derangement(inverse(sigma), k));
                CHECK(is_k_derangement(sigma, k) == is_k_derangement(conjugate(tau, sigma), k));
            }
        }
    }
}

TEST_CASE("complement symmetry up to n=7") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : all_permutations(n))
            for (int k = 1; k < n; ++k)
                CHECK(is_k_derangement(p, k) == is_k_derangement(p, n - k));
}

TEST_CASE("group laws on sampled triples") {
    std::mt19937 rng(777);
    auto perms = all_permutations(5);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto& a = perms[pick(rng)];
        const auto& b = perms[pick(rng)];
        const auto& c = perms[pick(rng)];
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(inverse(inverse(a)) == a);
    }
}
