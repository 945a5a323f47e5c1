#pragma once

#include <complex>

#include "vforge/bessel.hpp"
#include "vforge/errors.hpp"

namespace vforge {

// log Gamma(z), principal branch, Lanczos approximation with reflection.
std::complex<double> log_gamma(std::complex<double> z);

// gamma_k(s) = 2^((3-k)/2) sqrt(pi) (2pi)^(-s) Gamma(s + (k-1)/2),
// equivalently pi^(-s) Gamma((s+(k-1)/2)/2) Gamma((s+(k+1)/2)/2).
// Throws PoleError at the poles of the shifted Gamma.
std::complex<double> gamma_factor(WeightK k, std::complex<double> s);

// gamma_k(1-s)/gamma_k(s) = (2pi)^(2s-1) Gamma((k+1)/2 - s)/Gamma(s + (k-1)/2).
std::complex<double> gamma_factor_ratio(WeightK k, std::complex<double> s);

// | (1/2pi) int_(a) gamma_k(1-s)/gamma_k(s) x^(2(s-1)) ds/(2pi i)
//   - J_{k-1}(4 pi x) |, the contour truncated where the (1+|tau|)^(1-2a)
// decay of the ratio certifies the tail below target/4.
double mellin_barnes_check(WeightK k, double x, double a, double target = 1e-9);

} // namespace vforge
