#pragma once

#include <complex>
#include <functional>

#include "vforge/bessel.hpp"
#include "vforge/quadrature.hpp"

namespace vforge {

// (H_k F)(a) = 2 pi int_0^inf F(x) J_{k-1}(4 pi sqrt(a x)) dx for F smooth
// and supported in [lo, hi] with lo > 0.
double hankel_transform(const std::function<double(double)>& F, double lo, double hi,
                        WeightK k, double a, const QuadratureConfig& cfg);
double hankel_transform(const TestFunction& g, WeightK k, double a,
                        const QuadratureConfig& cfg);

// Smallest scanned a0 such that |(H_k g)(a)| < threshold for 20 consecutive
// grid points starting at a0. Scan step is `step`; throws ToleranceNotMet
// if no quiet window is found below aMax.
double hankel_decay_cutoff(const TestFunction& g, WeightK k, double threshold,
                           const QuadratureConfig& cfg, double step = 1.0,
                           double aMax = 600.0);

// | (H_k(H_k g))(b) - g(b) |.
double hankel_inversion_check(const TestFunction& g, WeightK k, double b,
                              const QuadratureConfig& cfg);

// | int_0^inf e^{-2 pi alpha y} J_{k-1}(4 pi beta sqrt y) J_{k-1}(4 pi gamma sqrt y) dy
//   - i^{1-k}/(2 pi alpha) J_{k-1}(4 pi i beta gamma / alpha) exp(-2 pi (beta^2+gamma^2)/alpha) |
// for Re alpha > 0, beta, gamma > 0, 4 pi beta gamma / |alpha| <= 120.
double weber_check(WeightK k, std::complex<double> alpha, double beta, double gamma,
                   const QuadratureConfig& cfg);

// Closed form of the right-hand side above (the absolutely convergent variant).
std::complex<double> weber_closed_form(WeightK k, std::complex<double> alpha,
                                       double beta, double gamma);

// Regularized real-frequency mode: evaluate the closed form at
// alpha = eps - i alpha0 for eps in {0.1, 0.05, 0.025}, extrapolate eps -> 0,
// and return the distance to the conditionally convergent identity
//   i e(sgn(alpha0) (k-1)/4) / (2 pi alpha0) J_{k-1}(4 pi beta gamma/|alpha0|)
//     e(-(beta^2+gamma^2)/alpha0).
double weber_regularized_distance(WeightK k, double alpha0, double beta, double gamma);

} // namespace vforge
