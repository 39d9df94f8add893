#include "derange/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "derange/enumeration.hpp"

namespace derange {

namespace {

using Clock = std::chrono::steady_clock;

struct Dense {
    int m = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    explicit Dense(int m_) : m(m_), words((static_cast<std::size_t>(m_) + 63) / 64),
                             bits(words * static_cast<std::size_t>(m_), 0) {}
    void set(int i, int j) {
        bits[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(j) / 64] |=
            std::uint64_t{1} << (j % 64);
    }
    bool adj(int i, int j) const {
        return (bits[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(j) / 64] >>
                (j % 64)) & 1;
    }
    const std::uint64_t* row(int i) const { return &bits[static_cast<std::size_t>(i) * words]; }
};

struct BnB {
    const Dense& g;
    std::uint64_t max_nodes;
    double max_seconds;
    Clock::time_point start = Clock::now();
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::vector<int> best, cur;

    BnB(const Dense& g_, const SearchBudget& b)
        : g(g_), max_nodes(b.max_nodes), max_seconds(b.max_seconds) {}

    bool over_budget() {
        if (nodes > max_nodes) return true;
        if ((nodes & 0x3FF) == 0) {
            std::chrono::duration<double> dt = Clock::now() - start;
            if (dt.count() > max_seconds) return true;
        }
        return false;
    }

    void expand(const std::vector<int>& cand) {
        ++nodes;
        if (aborted || over_budget()) {
            aborted = true;
            return;
        }
        // greedy coloring: order[i] gets upper bound bound[i]
        std::vector<int> order, bound;
        order.reserve(cand.size());
        bound.reserve(cand.size());
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (g.adj(u, v)) { clash = true; break; }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (aborted) return;
            if (cur.size() + static_cast<std::size_t>(bound[i]) <= best.size()) return;
            const int v = order[i];
            cur.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.adj(v, order[j])) next.push_back(order[j]);
            if (next.empty()) {
                if (cur.size() > best.size()) best = cur;
            } else {
                expand(next);
            }
            cur.pop_back();
        }
    }
};

// quotient v * u^-1 membership test against an arbitrary symmetric set
Dense quotient_graph(const std::vector<Permutation>& verts,
                     const std::vector<bool>& set_bits) {
    const int m = static_cast<int>(verts.size());
    Dense d(m);
    std::vector<Permutation> inv;
    inv.reserve(verts.size());
    for (const auto& v : verts) inv.push_back(inverse(v));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (set_bits[perm_rank(compose(verts[j], inv[i]))]) {
                d.set(i, j);
                d.set(j, i);
            }
    return d;
}

std::vector<int> initial_order(const Dense& d) {
    std::vector<int> deg(d.m, 0);
    for (int i = 0; i < d.m; ++i)
        for (int j = 0; j < d.m; ++j)
            if (d.adj(i, j)) ++deg[i];
    std::vector<int> order(d.m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    return order;
}

SearchResult reduced_search(int n, const std::vector<Permutation>& neighborhood,
                            const std::vector<bool>& set_bits, const SearchBudget& budget) {
    SearchResult res;
    res.best_size = 1;
    res.witness = {Permutation::identity(n)};
    if (neighborhood.empty()) {
        res.proven_optimal = true;
        res.nodes_explored = 1;
        return res;
    }
    Dense d = quotient_graph(neighborhood, set_bits);
    BnB bnb(d, budget);
    bnb.expand(initial_order(d));
    res.best_size = 1 + static_cast<int>(bnb.best.size());
    for (int v : bnb.best) res.witness.push_back(neighborhood[v]);
    std::sort(res.witness.begin(), res.witness.end());
    res.proven_optimal = !bnb.aborted;
    res.nodes_explored = bnb.nodes;
    return res;
}

} // namespace

SearchResult max_clique(const CayleyGraph& g, const SearchBudget& budget) {
    std::vector<bool> set_bits(g.vertex_count(), false);
    for (const auto& s : g.connection_set()) set_bits[perm_rank(s)] = true;
    return reduced_search(g.n(), g.connection_set(), set_bits, budget);
}

SearchResult max_clique_naive(const CayleyGraph& g, const SearchBudget& budget) {
    const std::uint64_t vcount = g.vertex_count();
    std::vector<Permutation> verts;
    verts.reserve(vcount);
    for (std::uint64_t r = 0; r < vcount; ++r) verts.push_back(perm_unrank(r, g.n()));
    std::vector<bool> set_bits(vcount, false);
    for (const auto& s : g.connection_set()) set_bits[perm_rank(s)] = true;
    Dense d = quotient_graph(verts, set_bits);
    BnB bnb(d, budget);
    bnb.expand(initial_order(d));
    SearchResult res;
    res.best_size = static_cast<int>(bnb.best.size());
    for (int v : bnb.best) res.witness.push_back(verts[v]);
    std::sort(res.witness.begin(), res.witness.end());
    res.proven_optimal = !bnb.aborted;
    res.nodes_explored = bnb.nodes;
    return res;
}

SearchResult max_independent_set(const CayleyGraph& g, const SearchBudget& budget) {
    // independent sets of Gamma are cliques of the complement, which is the
    // Cayley graph on the non-identity non-k-derangements
    std::vector<Permutation> co_conn;
    std::vector<bool> co_bits(g.vertex_count(), false);
    for (std::uint64_t r = 1; r < g.vertex_count(); ++r) {
        Permutation p = perm_unrank(r, g.n());
        if (!is_k_derangement(p, g.k())) {
            co_bits[r] = true;
            co_conn.push_back(std::move(p));
        }
    }
    return reduced_search(g.n(), co_conn, co_bits, budget);
}

CliqueCertificate grow_clique_heuristic(const CayleyGraph& g,
                                        const std::vector<Permutation>& seed,
                                        const SearchBudget& budget,
                                        std::uint64_t seed_value) {
    for (std::size_t i = 0; i < seed.size(); ++i)
        for (std::size_t j = i + 1; j < seed.size(); ++j)
            if (!g.adjacent(seed[i], seed[j]))
                throw std::invalid_argument("seed is not a clique");

    // translate so the clique contains the identity, then work inside the
    // identity's neighborhood
    const Permutation shift = seed.empty() ? Permutation::identity(g.n()) : seed[0];
    const Permutation unshift = inverse(shift);

    const auto& conn = g.connection_set();
    std::vector<bool> set_bits(g.vertex_count(), false);
    for (const auto& s : conn) set_bits[perm_rank(s)] = true;
    Dense d = quotient_graph(conn, set_bits);
    const int m = d.m;
    const std::size_t words = d.words == 0 ? 1 : d.words;

    std::vector<int> index_of(g.vertex_count(), -1);
    for (int i = 0; i < m; ++i) index_of[perm_rank(conn[i])] = i;

    std::vector<int> base;
    for (std::size_t i = seed.empty() ? 0 : 1; i < seed.size(); ++i) {
        int idx = index_of[perm_rank(compose(seed[i], unshift))];
        base.push_back(idx);
    }

    auto cand_of = [&](const std::vector<int>& clique) {
        std::vector<std::uint64_t> cand(words, ~std::uint64_t{0});
        if (m % 64) cand[words - 1] = (std::uint64_t{1} << (m % 64)) - 1;
        if (m == 0) cand[0] = 0;
        for (int v : clique)
            for (std::size_t w = 0; w < d.words; ++w) cand[w] &= d.row(v)[w];
        for (int v : clique) cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        return cand;
    };
    auto popcount_and = [&](const std::vector<std::uint64_t>& cand, int v) {
        int c = 0;
        for (std::size_t w = 0; w < d.words; ++w)
            c += std::popcount(cand[w] & d.row(v)[w]);
        return c;
    };

    std::uint64_t rng = seed_value ? seed_value : 1;
    auto next_rand = [&rng] {
        rng ^= rng << 13; rng ^= rng >> 7; rng ^= rng << 17;
        return rng;
    };

    // greedy extension; when randomized, picks among the top-3 scores
    auto extend = [&](std::vector<int> clique, bool randomized) {
        auto cand = cand_of(clique);
        for (;;) {
            std::vector<std::pair<int, int>> scored; // (score, vertex)
            for (int v = 0; v < m; ++v)
                if ((cand[v / 64] >> (v % 64)) & 1)
                    scored.emplace_back(popcount_and(cand, v), v);
            if (scored.empty()) break;
            std::sort(scored.begin(), scored.end(),
                      [](auto& a, auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
            std::size_t pick = 0;
            if (randomized && scored.size() > 1)
                pick = next_rand() % std::min<std::size_t>(3, scored.size());
            const int v = scored[pick].second;
            clique.push_back(v);
            for (std::size_t w = 0; w < d.words; ++w) cand[w] &= d.row(v)[w];
        }
        return clique;
    };

    std::vector<int> best = extend(base, false);
    const Clock::time_point start = Clock::now();
    const std::uint64_t iters = std::min<std::uint64_t>(budget.max_nodes, 20000);
    for (std::uint64_t it = 0; it < iters; ++it) {
        if ((it & 0xFF) == 0) {
            std::chrono::duration<double> dt = Clock::now() - start;
            if (dt.count() > budget.max_seconds) break;
        }
        std::vector<int> cur = best;
        const std::size_t removable = cur.size() > base.size() ? cur.size() - base.size() : 0;
        if (removable > 0) {
            std::size_t drops = 1 + next_rand() % std::min<std::size_t>(3, removable);
            for (std::size_t dctr = 0; dctr < drops && cur.size() > base.size(); ++dctr)
                cur.erase(cur.begin() + static_cast<long>(base.size() + next_rand() % (cur.size() - base.size())));
        }
        std::vector<int> grown = extend(cur, true);
        if (grown.size() > best.size()) best = grown;
    }

    CliqueCertificate cert;
    cert.n = g.n();
    cert.k = g.k();
    cert.members.push_back(compose(Permutation::identity(g.n()), shift));
    for (int v : best) cert.members.push_back(compose(conn[v], shift));
    std::sort(cert.members.begin(), cert.members.end());
    cert.provenance = {{"method", "search"}, {"heuristic", "grow-local"}};
    return cert;
}

} // namespace derange
