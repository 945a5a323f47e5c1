#include "vforge/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace vforge {

void QuadratureConfig::validate() const {
    if (!(absTol > 0.0 && absTol < 1.0) || !(relTol > 0.0 && relTol < 1.0))
        throw InvalidParams("QuadratureConfig: tolerances must lie in (0, 1)");
    if (maxPanels < 4 || nodesPerPanel < 2)
        throw InvalidParams("QuadratureConfig: maxPanels >= 4 and nodesPerPanel >= 2");
    if (!(oscillationSafety > 0.0))
        throw InvalidParams("QuadratureConfig: oscillationSafety must be positive");
}

TestFunction::TestFunction(double mu_, double rho_) : mu(mu_), rho(rho_) {
    if (!(rho > 0.0) || !(mu - rho > 0.0))
        throw InvalidParams("TestFunction: need rho > 0 and support inside (0, inf)");
}

double TestFunction::operator()(double x) const {
    double t = (x - mu) / rho;
    double s = 1.0 - t * t;
    if (s <= 0.0) return 0.0;
    return std::exp(1.0 - 1.0 / s);
}

const GaussRule& gauss_legendre(int n) {
    if (n < 2 || n > 128) throw InvalidParams("gauss_legendre: n in [2, 128]");
    static std::shared_mutex mtx;
    static std::map<int, GaussRule> cache;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton from the Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    std::unique_lock lock(mtx);
    return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

std::complex<double> gl_panel(const std::function<std::complex<double>(double)>& f,
                              double a, double b, const GaussRule& rule) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> s{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * s;
}

} // namespace

std::complex<double> integrate_oscillatory(
    const std::function<std::complex<double>(double)>& f,
    double x0, double x1,
    const std::function<double(double)>& freq,
    const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(x1 > x0)) return {0.0, 0.0};
    const GaussRule& rule = gauss_legendre(cfg.nodesPerPanel);
    const double total = x1 - x0;

    // initial panels capped by the local oscillation period
    std::vector<std::pair<double, double>> stack;
    {
        double x = x0;
        std::vector<std::pair<double, double>> fwd;
        int guard = 0;
        while (x < x1) {
            double fa = std::max(freq(x), 0.0);
            double w = total / 4.0;
            if (fa > 0.0) w = std::min(w, cfg.oscillationSafety / fa);
            w = std::min(w, x1 - x);
            double fb = std::max(freq(x + w), 0.0);
            if (fb > 0.0) w = std::min(w, cfg.oscillationSafety / fb);
            w = std::min(w, x1 - x);
            if (w < total * 1e-12) w = total * 1e-12;
            fwd.emplace_back(x, x + w);
            x += w;
            if (++guard > cfg.maxPanels)
                throw ToleranceNotMet("integrate_oscillatory: panel seeding exceeded maxPanels");
        }
        stack.assign(fwd.rbegin(), fwd.rend());
    }

    std::complex<double> sum{0.0, 0.0};
    int panels = static_cast<int>(stack.size());
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        std::complex<double> whole = gl_panel(f, a, b, rule);
        double mid = 0.5 * (a + b);
        std::complex<double> halves = gl_panel(f, a, mid, rule) + gl_panel(f, mid, b, rule);
        double err = std::abs(whole - halves);
        double budget = cfg.absTol * (b - a) / total + cfg.relTol * std::abs(halves);
        if (err <= budget || (b - a) < total * 1e-13) {
            sum += halves;
            continue;
        }
        panels += 2;
        if (panels > cfg.maxPanels)
            throw ToleranceNotMet("integrate_oscillatory: maxPanels exhausted");
        stack.emplace_back(mid, b);
        stack.emplace_back(a, mid);
    }
    return sum;
}

double integrate_oscillatory_real(
    const std::function<double(double)>& f,
    double x0, double x1,
    const std::function<double(double)>& freq,
    const QuadratureConfig& cfg) {
    auto fc = [&f](double x) { return std::complex<double>(f(x), 0.0); };
    return integrate_oscillatory(fc, x0, x1, freq, cfg).real();
}

} // namespace vforge
