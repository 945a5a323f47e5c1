#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "vforge/errors.hpp"
#include "vforge/residue.hpp"

namespace vforge {

// Element of Z[zeta_L] on the redundant spanning set {zeta_L^j : 0 <= j < L}.
// Coefficients are 64-bit and every add/multiply is overflow-checked, so a
// result is either exact or OverflowPolicy is thrown. Equality is decided
// only at comparison time, by reduction to a genuine Z-basis (see is_zero).
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, 0) {}
    explicit Cyclotomic(int64 order);

    // zeta_L^(j mod L)
    static Cyclotomic root(int64 order, int64 j);
    static Cyclotomic integer(int64 n);

    int64 order() const { return order_; }
    const std::vector<int64>& coeffs() const { return coeffs_; }

    // coeffs[j mod L] += c, checked
    void add_root(int64 j, int64 c);

    bool structurally_zero() const; // all stored coefficients zero

    Cyclotomic lifted_to(int64 new_order) const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic scaled(int64 k) const;
    Cyclotomic conj() const;

    void operator+=(const Cyclotomic& o);
    void operator-=(const Cyclotomic& o);

    // Exact zero test in Z[zeta_L]: reduce to the tensor-product power basis
    // over the prime-power factors of L (an integral basis) and test that
    // every coordinate vanishes. Equivalent to the remainder mod Phi_L
    // being zero; the prime-power route costs O(L * number of prime factors).
    bool is_zero() const;

    bool equals(const Cyclotomic& o) const;

    // Canonical representative: same element, coefficients supported on the
    // tensor power basis only. Useful to shrink supports before products.
    Cyclotomic reduced() const;

    std::size_t nonzero_count() const;

    // Sum of coeffs[j] * exp(2*pi*i*j/L) in double precision.
    // Error <= order * max|coeff| * 2^-50.
    std::complex<double> embed() const;

    std::string to_string() const;

private:
    int64 order_;
    std::vector<int64> coeffs_;
};

// Phi_L as a dense coefficient vector (index = degree), computed by exact
// iterated division of x^L - 1 by the Phi_d for proper divisors d | L.
// Memoized; safe for concurrent use.
const std::vector<int64>& cyclotomic_polynomial(int64 L);

// Remainder of the element's coefficient polynomial mod Phi_L. Slower than
// is_zero; retained as the independent route for cross-checks.
std::vector<int64> phi_remainder(const Cyclotomic& x);

// Configured cap on cyclotomic orders produced by lifts/products.
int64 cyclotomic_order_limit();
void set_cyclotomic_order_limit(int64 limit);

int64 checked_add(int64 a, int64 b);
int64 checked_mul(int64 a, int64 b);

} // namespace vforge
