#include "derange/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "derange/enumeration.hpp"

namespace derange {

std::uint64_t perm_rank(const Permutation& a) {
    const int n = a.degree();
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (a.apply0(j) < a.apply0(i)) ++smaller;
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

Permutation perm_unrank(std::uint64_t r, int n) {
    if (r >= factorial(n)) throw std::out_of_range("rank out of range");
    std::vector<int> code(n);
    for (int i = n - 1; i >= 0; --i) {
        code[i] = static_cast<int>(r % static_cast<std::uint64_t>(n - i));
        r /= static_cast<std::uint64_t>(n - i);
    }
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> line(n);
    for (int i = 0; i < n; ++i) {
        line[i] = avail[code[i]];
        avail.erase(avail.begin() + code[i]);
    }
    return Permutation::from_one_line(line);
}

CayleyGraph::CayleyGraph(int n, int k, bool build_explicit) : n_(n), k_(k) {
    if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
    if (n > kImplicitCap) throw std::length_error("n exceeds implicit-graph cap");
    if (build_explicit && n > kExplicitCap)
        throw std::length_error("n exceeds explicit-graph cap");
    vcount_ = factorial(n);
    conn_bits_.assign(vcount_, false);

    // lexicographic sweep gives the connection set sorted by rank
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::uint64_t r = 0;
    do {
        Permutation p = Permutation::from_one_line(line);
        if (!p.is_identity() && is_k_derangement(p, k)) {
            conn_.push_back(std::move(p));
            conn_bits_[r] = true;
        }
        ++r;
    } while (std::next_permutation(line.begin(), line.end()));

    if (build_explicit) {
        row_words_ = (vcount_ + 63) / 64;
        adj_.assign(vcount_ * row_words_, 0);
        std::iota(line.begin(), line.end(), 1);
        std::uint64_t ru = 0;
        do {
            Permutation u = Permutation::from_one_line(line);
            for (const auto& s : conn_)
                set_edge(ru, perm_rank(compose(s, u)));
            ++ru;
        } while (std::next_permutation(line.begin(), line.end()));
    }
}

void CayleyGraph::set_edge(std::uint64_t ru, std::uint64_t rv) {
    adj_[ru * row_words_ + rv / 64] |= std::uint64_t{1} << (rv % 64);
}

bool CayleyGraph::in_connection_set(const Permutation& s) const {
    if (s.degree() != n_) throw std::invalid_argument("degree mismatch");
    return conn_bits_[perm_rank(s)];
}

bool CayleyGraph::adjacent(const Permutation& u, const Permutation& v) const {
    if (u.degree() != n_ || v.degree() != n_) throw std::invalid_argument("degree mismatch");
    return conn_bits_[perm_rank(compose(v, inverse(u)))];
}

bool CayleyGraph::adjacent_ranks(std::uint64_t ru, std::uint64_t rv) const {
    if (!adj_.empty())
        return (adj_[ru * row_words_ + rv / 64] >> (rv % 64)) & 1;
    return adjacent(perm_unrank(ru, n_), perm_unrank(rv, n_));
}

bool CayleyGraph::same_edges(const CayleyGraph& other) const {
    if (n_ != other.n_) return false;
    // a Cayley graph's edge set is determined by its connection set
    if (!adj_.empty() && !other.adj_.empty()) return adj_ == other.adj_;
    return conn_bits_ == other.conn_bits_;
}

namespace {

// allocation-free rank/unrank on 0-based image arrays, for the BFS hot loop
std::uint64_t rank0(const int* img, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (img[j] < img[i]) ++smaller;
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

void unrank0(std::uint64_t r, int n, int* out) {
    int code[16];
    for (int i = n - 1; i >= 0; --i) {
        code[i] = static_cast<int>(r % static_cast<std::uint64_t>(n - i));
        r /= static_cast<std::uint64_t>(n - i);
    }
    int avail[16];
    for (int i = 0; i < n; ++i) avail[i] = i;
    int left = n;
    for (int i = 0; i < n; ++i) {
        const int c = code[i];
        out[i] = avail[c];
        for (int j = c; j < left - 1; ++j) avail[j] = avail[j + 1];
        --left;
    }
}

} // namespace

CayleyGraph::Components CayleyGraph::connected_components() const {
    Components comps;
    const int n = n_;
    const std::size_t deg = conn_.size();
    std::vector<int> conn_flat(deg * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < deg; ++i)
        std::copy(conn_[i].images0().begin(), conn_[i].images0().end(),
                  conn_flat.begin() + static_cast<long>(i * static_cast<std::size_t>(n)));
    std::vector<bool> visited(vcount_, false);
    std::vector<std::uint64_t> frontier;
    int u_img[16], w_img[16];
    for (std::uint64_t start = 0; start < vcount_; ++start) {
        if (visited[start]) continue;
        ++comps.count;
        comps.representatives.push_back(start);
        std::uint64_t size = 0;
        visited[start] = true;
        frontier.assign(1, start);
        while (!frontier.empty()) {
            std::uint64_t ru = frontier.back();
            frontier.pop_back();
            ++size;
            unrank0(ru, n, u_img);
            for (std::size_t si = 0; si < deg; ++si) {
                const int* s = &conn_flat[si * static_cast<std::size_t>(n)];
                for (int i = 0; i < n; ++i) w_img[i] = s[u_img[i]];
                const std::uint64_t rv = rank0(w_img, n);
                if (!visited[rv]) {
                    visited[rv] = true;
                    frontier.push_back(rv);
                }
            }
        }
        comps.sizes.push_back(size);
    }
    return comps;
}

bool CayleyGraph::is_eulerian() const {
    return degree() % 2 == 0 && connected_components().count == 1;
}

void CayleyGraph::export_graph(GraphFormat format, std::ostream& out) const {
    if (n_ > kExplicitCap) throw std::length_error("graph too large to export");
    // edges with ru < rv, sorted, vertices numbered rank+1
    auto emit_edges = [&](const std::function<void(std::uint64_t, std::uint64_t)>& emit) {
        std::vector<int> line(n_);
        std::iota(line.begin(), line.end(), 1);
        std::uint64_t ru = 0;
        do {
            Permutation u = Permutation::from_one_line(line);
            std::vector<std::uint64_t> nbrs;
            for (const auto& s : conn_) {
                std::uint64_t rv = perm_rank(compose(s, u));
                if (rv > ru) nbrs.push_back(rv);
            }
            std::sort(nbrs.begin(), nbrs.end());
            for (std::uint64_t rv : nbrs) emit(ru, rv);
            ++ru;
        } while (std::next_permutation(line.begin(), line.end()));
    };

    switch (format) {
    case GraphFormat::dimacs:
        out << "p edge " << vcount_ << " " << edge_count() << "\n";
        emit_edges([&](std::uint64_t u, std::uint64_t v) {
            out << "e " << u + 1 << " " << v + 1 << "\n";
        });
        break;
    case GraphFormat::edges:
        emit_edges([&](std::uint64_t u, std::uint64_t v) {
            out << u + 1 << " " << v + 1 << "\n";
        });
        break;
    case GraphFormat::json: {
        out << "{\"n\":" << n_ << ",\"k\":" << k_ << ",\"vertices\":" << vcount_
            << ",\"edges\":[";
        bool first = true;
        emit_edges([&](std::uint64_t u, std::uint64_t v) {
            if (!first) out << ",";
            first = false;
            out << "[" << u + 1 << "," << v + 1 << "]";
        });
        out << "]}\n";
        break;
    }
    }
}

bool position_agreement_adjacent(const Permutation& u, const Permutation& v, int k) {
    if (u.degree() != v.degree()) throw std::invalid_argument("degree mismatch");
    bool agree = false;
    for_each_k_subset(u.degree(), k, [&](const std::vector<int>& s) {
        if (induced_image(u, s) == induced_image(v, s)) {
            agree = true;
            return false;
        }
        return true;
    });
    return !agree;
}

namespace {

Permutation full_cycle(int n) {
    std::vector<int> line(n);
    for (int i = 0; i < n - 1; ++i) line[i] = i + 2;
    line[n - 1] = 1;
    return Permutation::from_one_line(line); // (1 2 ... n)
}

Permutation transposition(int n, int a, int b) {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::swap(line[a - 1], line[b - 1]);
    return Permutation::from_one_line(line);
}

// bijection sending 1 -> h and 2 -> h+1, remaining points to the remaining
// values in increasing order
Permutation relabel_map(int n, int h) {
    std::vector<int> line(n, 0);
    line[0] = h;
    line[1] = h + 1;
    std::vector<bool> used(n + 1, false);
    used[h] = used[h + 1] = true;
    int next = 1;
    for (int i = 2; i < n; ++i) {
        while (used[next]) ++next;
        line[i] = next;
        used[next] = true;
    }
    return Permutation::from_one_line(line);
}

} // namespace

std::pair<Permutation, Permutation> factor_adjacent_transposition(int n, int k, int h) {
    if (n <= 3 || k < 1 || k >= n || h < 1 || h >= n)
        throw std::invalid_argument("requires n > 3, 1 <= k < n, 1 <= h < n");
    const Permutation c = full_cycle(n);
    Permutation d1 = Permutation::identity(n), d2 = d1;
    if (k == 1 || k == n - 1) {
        // (1 2) = c^2 * (c^-1)^2 * (1 2)
        const Permutation cinv = inverse(c);
        d1 = compose(c, c);
        d2 = compose(compose(cinv, cinv), transposition(n, 1, 2));
    } else {
        // (1 2) = c^-1 * (1 3 4 ... n)
        d1 = inverse(c);
        std::vector<int> line(n);
        line[0] = 3;
        line[1] = 2;
        for (int i = 2; i < n - 1; ++i) line[i] = i + 2;
        line[n - 1] = 1;
        d2 = Permutation::from_one_line(line);
    }
    const Permutation tau = relabel_map(n, h);
    return {conjugate(tau, d1), conjugate(tau, d2)};
}

} // namespace derange
