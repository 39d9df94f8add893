#include "derange/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace derange {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::pair<int, int> odd_prime_power(int n) {
    if (n < 3 || n % 2 == 0) return {0, 0};
    for (int p = 3; p <= n; p += 2) {
        if (!is_prime(p)) continue;
        int deg = 0, m = n;
        while (m % p == 0) { m /= p; ++deg; }
        if (m == 1 && deg >= 1) return {p, deg};
        if (n % p == 0) return {0, 0};
    }
    return {0, 0};
}

namespace {

// polynomials over Z_p: coefficient vectors, constant term first, trimmed
using Poly = std::vector<int>;

int pdeg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

void trim(Poly& a) { a.resize(static_cast<size_t>(pdeg(a) + 1)); }

Poly pmul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

int mod_inv(int a, int p) {
    int r = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// remainder of a modulo b (b nonzero)
Poly pmod(Poly a, const Poly& b, int p) {
    const int db = pdeg(b);
    const int lead_inv = mod_inv(b[db], p);
    for (int da = pdeg(a); da >= db; da = pdeg(a)) {
        const int coef = a[da] * lead_inv % p;
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = ((a[da - db + i] - coef * b[i]) % p + p) % p;
    }
    trim(a);
    return a;
}

// u with a*u = 1 mod m, via extended Euclid
Poly pinv_mod(const Poly& a, const Poly& m, int p) {
    Poly r0 = m, r1 = a, t0 = {}, t1 = {1};
    while (pdeg(r1) > 0) {
        // r0 = q*r1 + r2; track t
        Poly r2 = r0, q(static_cast<size_t>(pdeg(r0) - pdeg(r1) + 1), 0);
        const int lead_inv = mod_inv(r1[pdeg(r1)], p);
        const int db = pdeg(r1);
        for (int da = pdeg(r2); da >= db; da = pdeg(r2)) {
            const int coef = r2[da] * lead_inv % p;
            q[da - db] = coef;
            for (int i = 0; i <= db; ++i)
                r2[da - db + i] = ((r2[da - db + i] - coef * r1[i]) % p + p) % p;
        }
        trim(r2);
        Poly qt = pmul(q, t1, p);
        Poly t2(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < t2.size(); ++i) {
            int v0 = i < t0.size() ? t0[i] : 0;
            int v1 = i < qt.size() ? qt[i] : 0;
            t2[i] = ((v0 - v1) % p + p) % p;
        }
        trim(t2);
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (pdeg(r1) != 0) throw std::domain_error("element not invertible");
    const int scale = mod_inv(r1[0], p);
    Poly u = t1;
    for (int& c : u) c = c * scale % p;
    return u;
}

Poly nth_poly(long long v, int p, int deg) {
    Poly c(static_cast<size_t>(deg) + 1, 0);
    c[deg] = 1;
    for (int i = 0; i < deg; ++i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
    }
    return c;
}

} // namespace

bool GaloisField::is_irreducible(const std::vector<int>& poly, int p) {
    const int d = pdeg(poly);
    if (d < 1) return false;
    // trial division by every monic polynomial of degree 1 .. d/2
    for (int e = 1; 2 * e <= d; ++e) {
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            Poly div = nth_poly(v, p, e);
            if (pdeg(pmod(poly, div, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<int> GaloisField::find_irreducible(int p, int deg) {
    if (deg == 1) return {0, 1}; // x; the modulus is unused in a prime field
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
        Poly cand = nth_poly(v, p, deg);
        if (is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

GaloisField::GaloisField(int p, int deg)
    : GaloisField(p, deg, find_irreducible(p, deg)) {}

GaloisField::GaloisField(int p, int deg, std::vector<int> modulus)
    : p_(p), deg_(deg), modulus_(std::move(modulus)) {
    order_ = 1;
    for (int i = 0; i < deg_; ++i) order_ *= p_;
    validate();
}

void GaloisField::validate() const {
    if (p_ == 2) throw std::invalid_argument("characteristic 2 not supported: x + x = 0 for all x");
    if (!is_prime(p_) || p_ % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    if (deg_ < 1) throw std::invalid_argument("degree must be positive");
    if (static_cast<int>(modulus_.size()) != deg_ + 1 || modulus_[deg_] != 1)
        throw std::invalid_argument("modulus must be monic of the field degree");
    for (int c : modulus_)
        if (c < 0 || c >= p_) throw std::invalid_argument("modulus coefficients must be in [0, p)");
    if (deg_ > 1 && !is_irreducible(modulus_, p_))
        throw std::invalid_argument("modulus is reducible");
}

GaloisField GaloisField::of_order(int order) {
    auto [p, deg] = odd_prime_power(order);
    if (p == 0) throw std::invalid_argument("order must be an odd prime power");
    return GaloisField(p, deg);
}

std::vector<int> GaloisField::coeffs(int label) const {
    std::vector<int> c(deg_);
    for (int i = 0; i < deg_; ++i) {
        c[i] = label % p_;
        label /= p_;
    }
    return c;
}

int GaloisField::label(const std::vector<int>& c) const {
    int l = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        l = l * p_ + c[i] % p_;
    return l;
}

int GaloisField::add(int a, int b) const {
    int l = 0, scale = 1;
    for (int i = 0; i < deg_; ++i) {
        l += (a % p_ + b % p_) % p_ * scale;
        a /= p_; b /= p_; scale *= p_;
    }
    return l;
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::neg(int a) const {
    int l = 0, scale = 1;
    for (int i = 0; i < deg_; ++i) {
        l += (p_ - a % p_) % p_ * scale;
        a /= p_; scale *= p_;
    }
    return l;
}

int GaloisField::mul(int a, int b) const {
    if (deg_ == 1) return a * b % p_;
    Poly pa = coeffs(a), pb = coeffs(b);
    trim(pa); trim(pb);
    Poly pc = pmod(pmul(pa, pb, p_), modulus_, p_);
    pc.resize(static_cast<size_t>(deg_), 0);
    return label(pc);
}

int GaloisField::inv(int a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    if (deg_ == 1) return mod_inv(a, p_);
    Poly pa = coeffs(a);
    trim(pa);
    Poly u = pinv_mod(pa, modulus_, p_);
    u.resize(static_cast<size_t>(deg_), 0);
    return label(u);
}

std::vector<int> GaloisField::elements() const {
    std::vector<int> e(static_cast<size_t>(order_));
    for (int i = 0; i < order_; ++i) e[i] = i;
    return e;
}

std::vector<int> GaloisField::half_set() const {
    std::vector<int> t;
    for (int x = 1; x < order_; ++x)
        if (x < neg(x)) t.push_back(x);
    return t;
}

bool GaloisField::is_valid_half_set(const std::vector<int>& t) const {
    if (static_cast<int>(t.size()) != (order_ - 1) / 2) return false;
    std::vector<bool> covered(static_cast<size_t>(order_), false);
    for (int x : t) {
        if (x <= 0 || x >= order_) return false;
        if (covered[x] || covered[neg(x)]) return false;
        covered[x] = covered[neg(x)] = true;
    }
    for (int x = 1; x < order_; ++x)
        if (!covered[x]) return false;
    return true;
}

} // namespace derange
