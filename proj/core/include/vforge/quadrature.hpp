#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "vforge/errors.hpp"

namespace vforge {

// Policy for the oscillatory panel quadrature: fixed-order Gauss-Legendre
// panels whose width is capped by a fraction of the local period of the
// fastest phase, refined adaptively by bisection.
struct QuadratureConfig {
    double absTol = 1e-10;
    double relTol = 1e-10;
    int maxPanels = 40000;
    int nodesPerPanel = 16;
    double oscillationSafety = 0.5; // panel width <= safety * local period

    void validate() const;
};

// Smooth compactly supported bump, g(x) = exp(1 - 1/(1-t^2)) for
// t = (x-mu)/rho inside (-1, 1), zero outside. g(mu) = 1.
struct TestFunction {
    double mu = 3.0;
    double rho = 1.0;

    TestFunction() = default;
    TestFunction(double mu_, double rho_);

    double operator()(double x) const;
    double support_lo() const { return mu - rho; }
    double support_hi() const { return mu + rho; }
};

// Gauss-Legendre nodes/weights on [-1, 1], memoized per n.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// Integral of f over [x0, x1]. freq(x) gives the local cycle count per unit
// length of the fastest oscillation at x; pass a zero function when the
// integrand is non-oscillatory. Throws ToleranceNotMet if maxPanels is
// exhausted before the panel error estimates meet the configured budget.
std::complex<double> integrate_oscillatory(
    const std::function<std::complex<double>(double)>& f,
    double x0, double x1,
    const std::function<double(double)>& freq,
    const QuadratureConfig& cfg);

double integrate_oscillatory_real(
    const std::function<double(double)>& f,
    double x0, double x1,
    const std::function<double(double)>& freq,
    const QuadratureConfig& cfg);

} // namespace vforge
