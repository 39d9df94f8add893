#include "derange/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace derange {

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
    const int n = static_cast<int>(one_based.size());
    if (n < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> img(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        const int v = one_based[i];
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = true;
        img[i] = v - 1;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(n, false);

    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos < text.size() && text[pos] == 'e') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw std::invalid_argument("trailing input after identity");
        return Permutation(std::move(img));
    }
    bool any = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw std::invalid_argument("expected '('");
        ++pos;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') { ++pos; break; }
            if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("expected point or ')'");
            int v = std::stoi(text.substr(start, pos - start));
            if (v < 1 || v > n) throw std::invalid_argument("point out of range");
            if (used[v - 1]) throw std::invalid_argument("point repeated across cycles");
            used[v - 1] = true;
            cyc.push_back(v - 1);
        }
        if (cyc.empty()) throw std::invalid_argument("empty cycle");
        for (size_t i = 0; i < cyc.size(); ++i)
            img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("empty cycle expression");
    return Permutation(std::move(img));
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    const int n = degree();
    std::vector<bool> seen(n, false);
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        out << '(' << i + 1;
        seen[i] = true;
        for (int j = img_[i]; j != i; j = img_[j]) {
            seen[j] = true;
            out << ' ' << j + 1;
        }
        out << ')';
    }
    return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    const int n = a.degree();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = a.apply0(b.apply0(i)) + 1;
    return Permutation::from_one_line(img);
}

Permutation inverse(const Permutation& a) {
    const int n = a.degree();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[a.apply0(i)] = i + 1;
    return Permutation::from_one_line(img);
}

Permutation conjugate(const Permutation& tau, const Permutation& sigma) {
    return compose(compose(tau, sigma), inverse(tau));
}

std::vector<int> cycle_type(const Permutation& a) {
    const int n = a.degree();
    std::vector<bool> seen(n, false);
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 1;
        seen[i] = true;
        for (int j = a.apply0(i); j != i; j = a.apply0(j)) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

std::vector<int> induced_image(const Permutation& a, const std::vector<int>& elems) {
    std::vector<int> out;
    out.reserve(elems.size());
    for (int e : elems) {
        if (e < 1 || e > a.degree()) throw std::out_of_range("subset element out of range");
        out.push_back(a.apply(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_subpartition(const std::vector<int>& parts, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    std::vector<bool> reach(k + 1, false);
    reach[0] = true;
    for (int p : parts) {
        for (int s = k; s >= p; --s)
            if (reach[s - p]) reach[s] = true;
    }
    return reach[k];
}

bool is_k_derangement(const Permutation& a, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    return !has_subpartition(cycle_type(a), k);
}

bool is_k_derangement_direct(const Permutation& a, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = a.degree();
    if (k > n) return true;  // vacuous: no k-subsets exist
    bool fixed_found = false;
    for_each_k_subset(n, k, [&](const std::vector<int>& s) {
        if (induced_image(a, s) == s) {
            fixed_found = true;
            return false;
        }
        return true;
    });
    return !fixed_found;
}

void for_each_k_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    if (k < 1 || k > n) return;
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 1);
    for (;;) {
        if (!f(s)) return;
        int i = k - 1;
        while (i >= 0 && s[i] == n - (k - 1 - i)) --i;
        if (i < 0) return;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

} // namespace derange
