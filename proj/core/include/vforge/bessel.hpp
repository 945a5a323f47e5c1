#pragma once

#include <complex>

#include "vforge/errors.hpp"

namespace vforge {

// Holomorphic weight; all Bessel orders in this project are k - 1.
struct WeightK {
    int k;
    explicit WeightK(int k_) : k(k_) {
        if (k < 6 || k % 2 != 0) throw InvalidParams("WeightK: k must be even and >= 6");
    }
};

// i^n for integer n, exact from n mod 4.
std::complex<double> i_power(int64_t n);

// J_nu(x) for integer nu >= 0, real x, |x| <= 10^4.
// Power series (double-double carried) for |x| <= 12, Miller backward
// recurrence beyond.
double bessel_j_order(int nu, double x);

// J_nu(z) for complex z by the power series with double-double working
// precision; |z| <= 120.
std::complex<double> bessel_j_order(int nu, std::complex<double> z);

// J_{k-1}(z); real arguments route through the real path.
std::complex<double> bessel_j(WeightK k, std::complex<double> z);
double bessel_j(WeightK k, double x);

} // namespace vforge
