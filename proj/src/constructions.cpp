#include "derange/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "derange/cayley.hpp"
#include "derange/enumeration.hpp"

namespace derange {

Permutation affine_arrangement(const GaloisField& f, int s, int alpha) {
    if (s == 0) throw std::invalid_argument("slope must be nonzero");
    const int n = f.order();
    std::vector<int> line(n);
    for (int i = 0; i < n; ++i)
        line[i] = f.add(f.mul(s, i), alpha) + 1;
    return Permutation::from_one_line(line);
}

CliqueCertificate build_clique(const GaloisField& f, std::optional<std::vector<int>> t_labels) {
    std::vector<int> t = t_labels ? *t_labels : f.half_set();
    if (!f.is_valid_half_set(t))
        throw std::invalid_argument("T must take exactly one element from each pair {x, -x}");
    CliqueCertificate cert;
    cert.n = f.order();
    cert.k = 2;
    for (int s : t)
        for (int alpha = 0; alpha < f.order(); ++alpha)
            cert.members.push_back(affine_arrangement(f, s, alpha));
    cert.provenance = {
        {"method", "affine"},
        {"p", f.p()},
        {"deg", f.deg()},
        {"modulus", f.modulus()},
        {"t_labels", t},
    };
    return cert;
}

namespace {

// first agreeing k-subset between u and v, empty if none
std::vector<int> agreeing_subset(const Permutation& u, const Permutation& v, int k) {
    std::vector<int> witness;
    for_each_k_subset(u.degree(), k, [&](const std::vector<int>& s) {
        if (induced_image(u, s) == induced_image(v, s)) {
            witness = s;
            return false;
        }
        return true;
    });
    return witness;
}

PairCheck check_pairs(const std::vector<Permutation>& members, int k,
                      bool want_adjacent, bool position_scan) {
    PairCheck res;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            bool adj;
            if (members[i] == members[j]) {
                adj = false; // duplicates always violate a clique
                if (!want_adjacent) continue;
            } else if (position_scan) {
                adj = position_agreement_adjacent(members[i], members[j], k);
            } else {
                adj = is_k_derangement(compose(members[j], inverse(members[i])), k);
            }
            if (adj != want_adjacent) {
                res.ok = false;
                res.first = i;
                res.second = j;
                if (want_adjacent && members[i] != members[j])
                    res.witness_subset = agreeing_subset(members[i], members[j], k);
                return res;
            }
        }
    }
    return res;
}

} // namespace

PairCheck verify_clique(const CliqueCertificate& cert, bool position_scan) {
    return check_pairs(cert.members, cert.k, true, position_scan);
}

IndependentSetCertificate build_independent_set(int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("requires 1 <= k < n");
    IndependentSetCertificate cert;
    cert.n = n;
    cert.k = k;
    std::vector<int> head(k), tail(n - k);
    std::iota(head.begin(), head.end(), 1);
    std::iota(tail.begin(), tail.end(), k + 1);
    std::vector<int> line(n);
    do {
        do {
            std::copy(head.begin(), head.end(), line.begin());
            std::copy(tail.begin(), tail.end(), line.begin() + k);
            cert.members.push_back(Permutation::from_one_line(line));
        } while (std::next_permutation(tail.begin(), tail.end()));
    } while (std::next_permutation(head.begin(), head.end()));
    std::sort(cert.members.begin(), cert.members.end());
    cert.provenance = {{"method", "setwise-stabilizer"}};
    return cert;
}

PairCheck verify_independent_set(const IndependentSetCertificate& cert) {
    // duplicates are violations too
    for (std::size_t i = 0; i + 1 < cert.members.size(); ++i)
        for (std::size_t j = i + 1; j < cert.members.size(); ++j)
            if (cert.members[i] == cert.members[j])
                return {false, i, j, {}};
    return check_pairs(cert.members, cert.k, false, false);
}

ColoringCertificate coset_coloring(int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("requires 1 <= k < n");
    if (n > CayleyGraph::kExplicitCap) throw std::length_error("n exceeds coloring cap");
    ColoringCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.num_colors = static_cast<int>(binomial(n, k));
    const std::uint64_t vcount = factorial(n);
    cert.color_of.resize(vcount);
    std::vector<int> base(k);
    std::iota(base.begin(), base.end(), 1);
    for (std::uint64_t r = 0; r < vcount; ++r) {
        Permutation sigma = perm_unrank(r, n);
        cert.color_of[r] = static_cast<int>(subset_lex_index(induced_image(sigma, base), n));
    }
    return cert;
}

bool verify_coloring(const ColoringCertificate& cert) {
    const std::uint64_t vcount = factorial(cert.n);
    if (cert.color_of.size() != vcount) return false;
    for (int c : cert.color_of)
        if (c < 0 || c >= cert.num_colors) return false;
    CayleyGraph g(cert.n, cert.k);
    for (std::uint64_t r = 0; r < vcount; ++r) {
        Permutation u = perm_unrank(r, cert.n);
        for (const auto& s : g.connection_set()) {
            std::uint64_t rv = perm_rank(compose(s, u));
            if (cert.color_of[r] == cert.color_of[rv]) return false;
        }
    }
    return true;
}

std::uint64_t subset_lex_index(const std::vector<int>& subset, int n) {
    const int k = static_cast<int>(subset.size());
    std::uint64_t idx = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v)
            idx += binomial(n - v, k - i - 1);
        prev = subset[i];
    }
    return idx;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

bool frankl_deza_check(std::uint64_t alpha_value, std::uint64_t omega_value, int n) {
    return alpha_value * omega_value <= factorial(n);
}

TheoreticalValues theoretical_values(int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("requires 1 <= k < n");
    TheoreticalValues t;
    t.omega_upper = binomial(n, k);
    t.alpha_lower = factorial(k) * factorial(n - k);
    t.chi_upper = t.omega_upper;
    if (k == 2 && odd_prime_power(n).first != 0) {
        t.exact = true;
        t.omega_exact = binomial(n, 2);
        t.chi_exact = binomial(n, 2);
        t.alpha_exact = 2 * factorial(n - 2);
    }
    return t;
}

} // namespace derange
