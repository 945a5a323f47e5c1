#include "vforge/bessel.hpp"

#include <cmath>
#include <vector>

namespace vforge {

std::complex<double> i_power(int64_t n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

namespace {

// Minimal double-double arithmetic; enough working precision to absorb the
// series cancellation on the supported domain.
struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD dd_from(double x) { return {x, 0.0}; }

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    DD r = two_sum(s.hi, lo);
    return r;
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return two_sum(p.hi, p.lo);
}

inline DD dd_div_d(DD a, double b) {
    double q1 = a.hi / b;
    DD p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo + a.lo) / b;
    return two_sum(q1, r);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

struct DDC {
    DD re, im;
};

inline DDC ddc_from(std::complex<double> z) { return {dd_from(z.real()), dd_from(z.imag())}; }

inline DDC ddc_add(DDC a, DDC b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline DDC ddc_mul(DDC a, DDC b) {
    DD re = dd_add(dd_mul(a.re, b.re), dd_neg(dd_mul(a.im, b.im)));
    DD im = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
    return {re, im};
}

inline DDC ddc_div_d(DDC a, double b) { return {dd_div_d(a.re, b), dd_div_d(a.im, b)}; }

inline std::complex<double> ddc_value(DDC a) { return {a.re.hi + a.re.lo, a.im.hi + a.im.lo}; }

inline double ddc_abs(DDC a) { return std::abs(ddc_value(a)); }

// series sum_{r} (-1)^r / (r! (r+nu)!) (z/2)^(nu+2r), double-double carried
std::complex<double> series_j_complex(int nu, std::complex<double> z) {
    DDC half = ddc_from(z * 0.5);
    DDC term{dd_from(1.0), dd_from(0.0)};
    for (int i = 1; i <= nu; ++i) term = ddc_div_d(ddc_mul(term, half), static_cast<double>(i));
    DDC w = ddc_mul(half, half); // (z/2)^2
    DDC sum = term;
    double wabs = ddc_abs(w);
    for (int r = 1; r <= 800; ++r) {
        term = ddc_div_d(ddc_mul(term, w), -static_cast<double>(r) * (r + nu));
        sum = ddc_add(sum, term);
        double ratio = wabs / (static_cast<double>(r + 1) * (r + 1 + nu));
        if (ratio < 0.5) {
            double rem = ddc_abs(term) * ratio / (1.0 - ratio);
            if (rem < 1e-32 * (ddc_abs(sum) + 1e-300) + 1e-320) break;
        }
    }
    return ddc_value(sum);
}

double series_j_real(int nu, double x) {
    DD half = dd_from(0.5 * x);
    DD term = dd_from(1.0);
    for (int i = 1; i <= nu; ++i) term = dd_div_d(dd_mul(term, half), static_cast<double>(i));
    DD w = dd_mul(half, half);
    DD sum = term;
    double wabs = std::abs(w.hi);
    for (int r = 1; r <= 400; ++r) {
        term = dd_div_d(dd_mul(term, w), -static_cast<double>(r) * (r + nu));
        sum = dd_add(sum, term);
        double ratio = wabs / (static_cast<double>(r + 1) * (r + 1 + nu));
        if (ratio < 0.5) {
            double rem = std::abs(term.hi) * ratio / (1.0 - ratio);
            if (rem < 1e-32 * (std::abs(sum.hi) + 1e-300) + 1e-320) break;
        }
    }
    return sum.hi + sum.lo;
}

// Miller backward recurrence for J_nu(x), x > 0; computes all orders and
// normalizes through J_0 + 2 J_2 + 2 J_4 + ... = 1.
double miller_j(int nu, double x) {
    int start = static_cast<int>(std::ceil(std::max(static_cast<double>(nu), x) +
                                           15.0 * std::cbrt(x) + 40.0));
    if (start % 2 != 0) ++start;
    double jp = 0.0;       // J~_{n+1}
    double jc = 1e-300;    // J~_n at n = start
    double result = (nu == start) ? jc : 0.0;
    double norm = (start % 2 == 0) ? jc : 0.0; // collects J_0 + 2*sum J_{2k}; top handled below
    norm = 0.0;
    if (start % 2 == 0) norm += 2.0 * jc;
    for (int n = start; n >= 1; --n) {
        double jm = (2.0 * n / x) * jc - jp;
        jp = jc;
        jc = jm;
        int m = n - 1;
        if (m == nu) result = jc;
        if (m > 0 && m % 2 == 0) norm += 2.0 * jc;
        if (m == 0) norm += jc;
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
    }
    return result / norm;
}

} // namespace

double bessel_j_order(int nu, double x) {
    if (nu < 0) throw InvalidParams("bessel_j_order: nu >= 0 required");
    if (std::abs(x) > 1e4) throw OutOfDomain("bessel_j_order: |x| <= 10^4 supported");
    if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
    double ax = std::abs(x);
    double v = ax <= 12.0 ? series_j_real(nu, ax) : miller_j(nu, ax);
    if (x < 0.0 && nu % 2 == 1) v = -v;
    return v;
}

std::complex<double> bessel_j_order(int nu, std::complex<double> z) {
    if (nu < 0) throw InvalidParams("bessel_j_order: nu >= 0 required");
    if (z.imag() == 0.0) return {bessel_j_order(nu, z.real()), 0.0};
    if (std::abs(z) > 120.0)
        throw OutOfDomain("bessel_j_order: complex arguments supported for |z| <= 120");
    return series_j_complex(nu, z);
}

std::complex<double> bessel_j(WeightK k, std::complex<double> z) {
    return bessel_j_order(k.k - 1, z);
}

double bessel_j(WeightK k, double x) {
    return bessel_j_order(k.k - 1, x);
}

} // namespace vforge
