#include "vforge/special.hpp"

#include "vforge/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace vforge {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, n = 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

std::complex<double> log_gamma_core(std::complex<double> z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() >= 0.5) return log_gamma_core(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z); keep the branch
    // consistent by working with log(sin) directly.
    std::complex<double> lg = std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_core(1.0 - z);
    return lg;
}

std::complex<double> gamma_factor(WeightK k, std::complex<double> s) {
    std::complex<double> arg = s + 0.5 * (k.k - 1);
    if (arg.imag() == 0.0 && arg.real() <= 0.0 &&
        std::abs(arg.real() - std::round(arg.real())) < 1e-9)
        throw PoleError("gamma_factor: pole of Gamma(s + (k-1)/2)");
    std::complex<double> lg = log_gamma(arg);
    std::complex<double> lead =
        0.5 * (3.0 - k.k) * std::log(2.0) + 0.5 * std::log(kPi) - s * std::log(2.0 * kPi);
    return std::exp(lead + lg);
}

std::complex<double> gamma_factor_ratio(WeightK k, std::complex<double> s) {
    std::complex<double> num = 0.5 * (k.k + 1) - s;
    std::complex<double> den = s + 0.5 * (k.k - 1);
    return std::exp((2.0 * s - 1.0) * std::log(2.0 * kPi) + log_gamma(num) - log_gamma(den));
}

double mellin_barnes_check(WeightK k, double x, double a, double target) {
    if (!(x > 0.0) || x > 5.0) throw OutOfDomain("mellin_barnes_check: 0 < x <= 5");
    if (!(a > 1.0) || !(a < 0.5 * (k.k + 1)))
        throw InvalidParams("mellin_barnes_check: contour must satisfy 1 < a < (k+1)/2");

    const double scale = std::pow(x, 2.0 * (a - 1.0));
    auto ratio_at = [&](double tau) {
        return gamma_factor_ratio(k, {a, tau});
    };

    // choose T so the tail bound (power-law decay (1+tau)^(1-2a)) is small
    double T = 40.0;
    double tail = 1e300;
    while (T < 1e6) {
        double rT = std::abs(ratio_at(T));
        tail = scale / (4.0 * kPi * kPi) * 2.0 * rT * T / (2.0 * a - 2.0);
        if (tail < 0.25 * target) break;
        T *= 1.6;
    }

    // integrand f(tau) = R(a + i tau) x^{2 i tau}; integral over R equals
    // 2 Re int_0^T by conjugate symmetry
    const double lx = std::log(x);
    auto f = [&](double tau) {
        return ratio_at(tau) * std::exp(std::complex<double>(0.0, 2.0 * tau * lx));
    };
    QuadratureConfig cfg;
    cfg.absTol = 0.05 * target / std::max(scale, 1e-300);
    cfg.relTol = 1e-12;
    cfg.nodesPerPanel = 16;
    cfg.maxPanels = 60000;
    auto freq = [&](double) { return std::abs(lx) / kPi + 0.05; };
    std::complex<double> I = integrate_oscillatory(f, 0.0, T, freq, cfg);
    double integral = scale / (4.0 * kPi * kPi) * 2.0 * I.real();

    double j = bessel_j(k, 4.0 * kPi * x);
    return std::abs(integral - j);
}

} // namespace vforge
