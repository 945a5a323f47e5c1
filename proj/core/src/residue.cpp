#include "vforge/residue.hpp"

#include <algorithm>
#include <numeric>

namespace vforge {

int64 Factorization::recompose() const {
    int64 r = 1;
    for (const auto& pp : factors) r *= pp.value;
    return r;
}

int64 gcd64(int64 a, int64 b) {
    return std::gcd(a, b);
}

int64 lcm64(int64 a, int64 b) {
    if (a == 0 || b == 0) return 0;
    int64 g = std::gcd(a, b);
    int64 q = a / g;
    int64 r;
    if (__builtin_mul_overflow(q, b, &r))
        throw OverflowPolicy("lcm64: 64-bit overflow");
    return r < 0 ? -r : r;
}

int64 mul_mod(int64 x, int64 y, int64 m) {
    using i128 = __int128;
    i128 r = static_cast<i128>(x) * y % m;
    if (r < 0) r += m;
    return static_cast<int64>(r);
}

int64 pow_mod(int64 base, int64 exp, int64 m) {
    if (m == 1) return 0;
    int64 r = 1;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

int64 mod_inverse(int64 a, int64 m) {
    if (m < 1) throw OutOfRange("mod_inverse: modulus must be >= 1");
    if (m == 1) return 0;
    int64 a0 = a % m;
    if (a0 < 0) a0 += m;
    // extended Euclid on (a0, m)
    int64 old_r = a0, r = m;
    int64 old_s = 1, s = 0;
    while (r != 0) {
        int64 q = old_r / r;
        int64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw NotInvertible("mod_inverse: gcd(a, m) > 1");
    int64 inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

Factorization factorize(int64 n) {
    constexpr int64 kMax = 1'000'000'000'000LL;
    if (n < 1 || n > kMax) throw OutOfRange("factorize: n must be in [1, 10^12]");
    Factorization f;
    f.n = n;
    auto strip = [&](int64 p) {
        if (n % p != 0) return;
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
            pp.value *= p;
        }
        f.factors.push_back(pp);
    };
    strip(2);
    strip(3);
    strip(5);
    // wheel mod 30 over the remaining candidates
    static constexpr int inc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    int64 d = 7;
    int i = 0;
    while (d * d <= n) {
        strip(d);
        d += inc[i];
        i = (i + 1) & 7;
    }
    if (n > 1) f.factors.push_back({n, 1, n});
    return f;
}

bool is_prime(int64 n) {
    if (n < 2) return false;
    Factorization f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

int64 euler_phi(const Factorization& f) {
    int64 r = 1;
    for (const auto& pp : f.factors) r *= pp.value / pp.prime * (pp.prime - 1);
    return r;
}

int64 euler_phi(int64 n) {
    return euler_phi(factorize(n));
}

std::vector<int64> divisors(int64 n) {
    Factorization f = factorize(n);
    std::vector<int64> ds{1};
    for (const auto& pp : f.factors) {
        std::size_t base = ds.size();
        int64 pe = 1;
        for (int e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

QSplit q_part(int64 c, int64 q) {
    if (c < 1 || q < 1) throw OutOfRange("q_part: arguments must be >= 1");
    QSplit s;
    int64 x = c;
    int64 g = std::gcd(x, q);
    while (g > 1) {
        x /= g;
        s.c0 *= g;
        g = std::gcd(x, q);
    }
    s.cPrime = x;
    return s;
}

bool divides_power_of(int64 n, int64 r) {
    if (n < 1 || r < 1) throw OutOfRange("divides_power_of: arguments must be >= 1");
    int64 x = n;
    int64 g = std::gcd(x, r);
    while (g > 1) {
        while (x % g == 0) x /= g;
        g = std::gcd(x, r);
    }
    return x == 1;
}

} // namespace vforge
