#ifndef DERANGE_GF_HPP
#define DERANGE_GF_HPP

#include <utility>
#include <vector>

namespace derange {

// GF(p^deg) for odd primes p. Elements are labels in [0, order):
// label = sum coeffs[i] * p^i, with coeffs the polynomial representative
// modulo a monic irreducible modulus (constant term first).
class GaloisField {
public:
    GaloisField(int p, int deg);                            // canonical modulus
    GaloisField(int p, int deg, std::vector<int> modulus);  // validated
    static GaloisField of_order(int order);                 // odd prime power

    int p() const { return p_; }
    int deg() const { return deg_; }
    int order() const { return order_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const; // throws on a == 0

    std::vector<int> coeffs(int label) const;
    int label(const std::vector<int>& coeffs) const;

    std::vector<int> elements() const; // labels 0 .. order-1

    // One representative from each pair {x, -x} of nonzero elements, the
    // smaller label of each pair; size (order-1)/2.
    std::vector<int> half_set() const;
    bool is_valid_half_set(const std::vector<int>& t) const;

    // Lexicographically smallest monic irreducible of the given degree
    // over Z_p (by coefficient tuple, highest degree first). deg 1 gives x.
    static std::vector<int> find_irreducible(int p, int deg);
    static bool is_irreducible(const std::vector<int>& poly, int p);

private:
    int p_, deg_, order_;
    std::vector<int> modulus_;
    void validate() const;
};

bool is_prime(int p);
// Returns {p, deg} with n = p^deg and p an odd prime, or {0, 0}.
std::pair<int, int> odd_prime_power(int n);

} // namespace derange

#endif
