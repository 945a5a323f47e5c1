#include "vforge/hankel.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace vforge {

namespace {
constexpr double kPi = std::numbers::pi;
}

double hankel_transform(const std::function<double(double)>& F, double lo, double hi,
                        WeightK k, double a, const QuadratureConfig& cfg) {
    if (!(lo > 0.0) || !(hi > lo)) throw InvalidParams("hankel_transform: bad support");
    if (!(a >= 0.0)) throw InvalidParams("hankel_transform: a >= 0 required");
    if (a == 0.0) return 0.0; // J_{k-1}(0) = 0 for k >= 6
    auto f = [&](double x) { return F(x) * bessel_j(k, 4.0 * kPi * std::sqrt(a * x)); };
    // J phase 4 pi sqrt(a x): local frequency sqrt(a/x) cycles per unit;
    // also keep at least a handful of panels across the support
    double floor_freq = 4.0 / (hi - lo);
    auto freq = [&](double x) { return std::sqrt(a / std::max(x, 1e-12)) + floor_freq; };
    return 2.0 * kPi * integrate_oscillatory_real(f, lo, hi, freq, cfg);
}

double hankel_transform(const TestFunction& g, WeightK k, double a,
                        const QuadratureConfig& cfg) {
    return hankel_transform([&g](double x) { return g(x); }, g.support_lo(), g.support_hi(),
                            k, a, cfg);
}

double hankel_decay_cutoff(const TestFunction& g, WeightK k, double threshold,
                           const QuadratureConfig& cfg, double step, double aMax) {
    int quiet = 0;
    double first_quiet = 0.0;
    for (double a = step; a <= aMax; a += step) {
        double v = std::abs(hankel_transform(g, k, a, cfg));
        if (v < threshold) {
            if (quiet == 0) first_quiet = a;
            if (++quiet >= 20) return first_quiet;
        } else {
            quiet = 0;
        }
    }
    throw ToleranceNotMet("hankel_decay_cutoff: no quiet window below aMax");
}

double hankel_inversion_check(const TestFunction& g, WeightK k, double b,
                              const QuadratureConfig& cfg) {
    // outer integral truncated where the inner transform has decayed,
    // with an integration-by-parts safety margin
    double cutoff = hankel_decay_cutoff(g, k, cfg.absTol * 0.1, cfg);
    double X = 1.25 * cutoff;
    auto inner = [&](double x) { return hankel_transform(g, k, x, cfg); };
    auto f = [&](double x) { return inner(x) * bessel_j(k, 4.0 * kPi * std::sqrt(b * x)); };
    double tmax = g.support_hi();
    auto freq = [&](double x) {
        double xe = std::max(x, 1e-12);
        return std::sqrt(b / xe) + std::sqrt(tmax / xe) + 0.05;
    };
    double outer = 2.0 * kPi * integrate_oscillatory_real(f, 1e-9, X, freq, cfg);
    return std::abs(outer - g(b));
}

std::complex<double> weber_closed_form(WeightK k, std::complex<double> alpha,
                                       double beta, double gamma) {
    std::complex<double> zarg =
        std::complex<double>(0.0, 4.0 * kPi) * (beta * gamma) / alpha;
    std::complex<double> jv = bessel_j(k, zarg);
    return i_power(1 - k.k) / (2.0 * kPi * alpha) * jv *
           std::exp(-2.0 * kPi * (beta * beta + gamma * gamma) / alpha);
}

double weber_check(WeightK k, std::complex<double> alpha, double beta, double gamma,
                   const QuadratureConfig& cfg) {
    if (!(alpha.real() > 0.0)) throw OutOfDomain("weber_check: Re alpha > 0 required");
    if (!(beta > 0.0) || !(gamma > 0.0))
        throw InvalidParams("weber_check: beta, gamma > 0 required");
    if (4.0 * kPi * beta * gamma / std::abs(alpha) > 120.0)
        throw OutOfDomain("weber_check: 4 pi beta gamma / |alpha| <= 120 required");

    // truncate where the envelope e^{-2 pi Re(alpha) y} is beyond absTol
    double Y = (std::log(1.0 / cfg.absTol) + 8.0) / (2.0 * kPi * alpha.real());
    Y = std::max(Y, 4.0);
    auto f = [&](double y) -> std::complex<double> {
        double ry = std::sqrt(y);
        return std::exp(-2.0 * kPi * alpha * y) *
               bessel_j(k, 4.0 * kPi * beta * ry) * bessel_j(k, 4.0 * kPi * gamma * ry);
    };
    auto freq = [&](double y) {
        double ry = std::sqrt(std::max(y, 1e-12));
        return (beta + gamma) / ry + std::abs(alpha.imag()) + 0.02;
    };
    std::complex<double> lhs = integrate_oscillatory(f, 0.0, Y, freq, cfg);
    return std::abs(lhs - weber_closed_form(k, alpha, beta, gamma));
}

double weber_regularized_distance(WeightK k, double alpha0, double beta, double gamma) {
    if (alpha0 == 0.0) throw InvalidParams("weber_regularized_distance: alpha0 != 0");
    const double eps[3] = {0.1, 0.05, 0.025};
    std::complex<double> v[3];
    for (int i = 0; i < 3; ++i)
        v[i] = weber_closed_form(k, {eps[i], -alpha0}, beta, gamma);
    // quadratic (Neville) extrapolation to eps = 0
    std::complex<double> p01 = (eps[0] * v[1] - eps[1] * v[0]) / (eps[0] - eps[1]);
    std::complex<double> p12 = (eps[1] * v[2] - eps[2] * v[1]) / (eps[1] - eps[2]);
    std::complex<double> p = (eps[0] * p12 - eps[2] * p01) / (eps[0] - eps[2]);

    double sgn = alpha0 > 0.0 ? 1.0 : -1.0;
    std::complex<double> phase =
        std::exp(std::complex<double>(0.0, 2.0 * kPi * sgn * (k.k - 1) / 4.0));
    std::complex<double> web =
        std::complex<double>(0.0, 1.0) * phase / (2.0 * kPi * alpha0) *
        bessel_j(k, 4.0 * kPi * beta * gamma / std::abs(alpha0)) *
        std::exp(std::complex<double>(0.0, -2.0 * kPi * (beta * beta + gamma * gamma) / alpha0));
    return std::abs(p - web);
}

} // namespace vforge
