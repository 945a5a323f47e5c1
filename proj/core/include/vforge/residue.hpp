#pragma once

#include <cstdint>
#include <vector>

#include "vforge/errors.hpp"

namespace vforge {

using int64 = std::int64_t;

struct PrimePower {
    int64 prime = 0;
    int exponent = 0;
    int64 value = 0; // prime^exponent
};

// Prime-power decomposition, primes strictly increasing, exponents >= 1.
struct Factorization {
    int64 n = 1;
    std::vector<PrimePower> factors;

    int64 recompose() const;
};

// Split c = c0 * cPrime with c0 the q-part of c: every prime of c0
// divides q and gcd(cPrime, q) = 1.
struct QSplit {
    int64 c0 = 1;
    int64 cPrime = 1;
};

int64 gcd64(int64 a, int64 b);
int64 lcm64(int64 a, int64 b); // throws OverflowPolicy on 64-bit overflow

// x * y mod m without overflow (m > 0).
int64 mul_mod(int64 x, int64 y, int64 m);
int64 pow_mod(int64 base, int64 exp, int64 m);

// Inverse of a mod m in [0, m). mod 1 convention: the single residue class
// is 0 and is its own inverse. Throws NotInvertible when gcd(a, m) > 1.
int64 mod_inverse(int64 a, int64 m);

// Trial division with a 2-3-5 wheel; supports 1 <= n <= 10^12.
Factorization factorize(int64 n);

bool is_prime(int64 n);

int64 euler_phi(int64 n);
int64 euler_phi(const Factorization& f);

std::vector<int64> divisors(int64 n);

QSplit q_part(int64 c, int64 q);

// True iff every prime of n divides r (i.e. n | r^infinity). n, r >= 1.
bool divides_power_of(int64 n, int64 r);

} // namespace vforge
