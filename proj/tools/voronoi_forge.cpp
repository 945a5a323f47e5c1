// Command-line surface: run verification suites and compute individual
// values. See README for the suite list, parameters and report formats.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "vforge/characters.hpp"
#include "vforge/exp_sums.hpp"
#include "vforge/hankel.hpp"
#include "vforge/report.hpp"
#include "vforge/spectral.hpp"
#include "vforge/suites.hpp"

namespace {

using namespace vforge;

std::string fmt15(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    if (std::abs(v) >= 1e-4 && std::abs(v) < 1e15)
        std::snprintf(buf, sizeof(buf), "%.15f", v);
    else
        std::snprintf(buf, sizeof(buf), "%.15e", v);
    return buf;
}

std::string fmt15c(std::complex<double> z) {
    if (z.imag() == 0.0) return fmt15(z.real());
    std::string s = fmt15(z.real());
    if (!std::signbit(z.imag())) s += "+";
    s += fmt15(z.imag());
    s += "i";
    return s;
}

std::vector<int64> parse_exps(const std::string& s) {
    std::vector<int64> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ':' || ch == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

DirichletCharacter make_char(int64 q, const std::string& exps) {
    if (exps.empty()) return DirichletCharacter(q);
    return DirichletCharacter(q, parse_exps(exps));
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            return s.substr(b, e - b + 1);
        };
        std::string k = trim(line.substr(0, eq));
        std::string v = trim(line.substr(eq + 1));
        if (!k.empty()) out[k] = v;
    }
    return out;
}

int run_verify(const std::string& suite, const std::string& config,
               const std::vector<std::string>& params, std::uint64_t seed, int jobs,
               const std::string& outPath, const std::string& format, bool noTiming) {
    if (!is_suite_name(suite)) {
        std::cerr << "unknown suite '" << suite << "'. Available: all";
        for (const auto& n : suite_names()) std::cerr << ' ' << n;
        std::cerr << '\n';
        return 2;
    }
    SuiteOptions opt;
    opt.seed = seed;
    opt.jobs = jobs;
    opt.zeroRuntime = noTiming;
    if (!config.empty()) opt.params = read_config(config);
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) {
            std::cerr << "bad --param (expected key=value): " << p << '\n';
            return 2;
        }
        opt.params[p.substr(0, eq)] = p.substr(eq + 1);
    }

    SuiteResult res = run_suite(suite, opt);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!outPath.empty()) {
        file.open(outPath, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << outPath << '\n';
            return 3;
        }
        os = &file;
    }
    if (format == "csv") write_csv(*os, res.reports);
    else write_jsonl(*os, res.reports);
    os->flush();
    if (!*os) {
        std::cerr << "error writing report stream\n";
        return 3;
    }

    std::size_t failed = 0;
    for (const auto& r : res.reports)
        if (!r.pass) ++failed;
    std::cerr << "suite " << suite << ": " << res.reports.size() << " cases, " << failed
              << " failed\n";
    return res.all_pass ? 0 : 1;
}

struct ComputeArgs {
    int64 m = 1, n = 1, c = 1, q = 1, h = 1, a = 1, b = 1, u = 1, v = 1, l = 1, k = 12;
    int64 index = 0;
    double x = 0.0, xi = 0.0, mu = 3.0, rho = 1.0, aa = 1.0, re = 2.0, im = 0.0;
    double tol = 1e-8;
    std::string chi;
};

int run_compute(const std::string& kind, const ComputeArgs& c) {
    QuadratureConfig cfg;
    cfg.absTol = 1e-10;
    cfg.relTol = 1e-11;
    if (kind == "kloosterman") {
        std::cout << fmt15(kloosterman(c.m, c.n, c.c).numeric.real()) << '\n';
    } else if (kind == "gauss-sum") {
        auto chi = make_char(c.q, c.chi);
        std::cout << fmt15c(gauss_sum(chi).eps) << '\n';
    } else if (kind == "char-sum-C") {
        auto psi = make_char(c.q, c.chi);
        CharSumParams p{psi, c.h, c.a, c.u, c.b, c.v};
        std::cout << fmt15c(char_sum_C(p).numeric) << '\n';
    } else if (kind == "dft-d") {
        auto chi = make_char(c.q, c.chi);
        std::cout << fmt15c(dft_d(chi, c.l, c.m, c.c).numeric) << '\n';
    } else if (kind == "bessel-j") {
        if (c.xi == 0.0)
            std::cout << fmt15(bessel_j(WeightK(static_cast<int>(c.k)), c.x)) << '\n';
        else
            std::cout << fmt15c(bessel_j(WeightK(static_cast<int>(c.k)), {c.x, c.xi})) << '\n';
    } else if (kind == "hankel") {
        TestFunction g(c.mu, c.rho);
        std::cout << fmt15(hankel_transform(g, WeightK(static_cast<int>(c.k)), c.aa, cfg)) << '\n';
    } else if (kind == "petersson-g") {
        std::cout << fmt15(petersson_geometric(WeightK(static_cast<int>(c.k)), c.l, c.n, c.tol).value)
                  << '\n';
    } else if (kind == "lambda") {
        auto forms = eigenforms(static_cast<int>(c.k), std::max<int64>(64, c.n));
        if (c.index < 0 || c.index >= static_cast<int64>(forms.size())) {
            std::cerr << "form index out of range (space has " << forms.size() << " forms)\n";
            return 2;
        }
        std::cout << fmt15(forms[static_cast<std::size_t>(c.index)].lambda(c.n)) << '\n';
    } else if (kind == "completed-L") {
        auto chi = make_char(c.q, c.chi);
        auto forms = eigenforms(static_cast<int>(c.k), 2000);
        if (c.index < 0 || c.index >= static_cast<int64>(forms.size())) {
            std::cerr << "form index out of range (space has " << forms.size() << " forms)\n";
            return 2;
        }
        std::cout << fmt15c(completed_L(forms[static_cast<std::size_t>(c.index)], chi,
                                        {c.re, c.im}, cfg))
                  << '\n';
    } else {
        std::cerr << "unknown compute kind '" << kind
                  << "'. Available: kloosterman gauss-sum char-sum-C dft-d bessel-j hankel "
                     "petersson-g lambda completed-L\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"voronoi-forge: exponential-sum, trace-formula and Voronoi identity checks"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->set_help_flag("--help", "print help");
    std::string suite, config, outPath, format = "jsonl";
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    int jobs = 1;
    bool noTiming = false;
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--config", config, "key=value parameter file");
    verify->add_option("--seed", seed, "seed for sampled sweep parameters");
    verify->add_option("--jobs", jobs, "worker threads (case-level parallelism)");
    verify->add_option("--out", outPath, "write the report stream to this file");
    verify->add_option("--format", format, "jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    verify->add_option("--param", params, "override one grid parameter, key=value (repeatable)");
    verify->add_flag("--no-timing", noTiming, "emit runtimeMs as 0 for byte-stable output");
    // convenience aliases for common grid filters
    std::string kOpt, qOpt;
    verify->add_option("--k", kOpt, "restrict suite to one weight k");
    verify->add_option("--q", qOpt, "restrict suite to one modulus q");

    auto* compute = app.add_subcommand("compute", "compute one value");
    compute->set_help_flag("--help", "print help");
    std::string kind;
    ComputeArgs ca;
    compute->add_option("kind", kind, "value kind")->required();
    compute->add_option("--m", ca.m);
    compute->add_option("--n", ca.n);
    compute->add_option("--c", ca.c);
    compute->add_option("--q", ca.q);
    compute->add_option("--h", ca.h);
    compute->add_option("--a", ca.a);
    compute->add_option("--b", ca.b);
    compute->add_option("--u", ca.u);
    compute->add_option("--v", ca.v);
    compute->add_option("--l", ca.l);
    compute->add_option("--k", ca.k);
    compute->add_option("--index", ca.index, "eigenform index within the space");
    compute->add_option("--x", ca.x);
    compute->add_option("--xi", ca.xi, "imaginary part of the Bessel argument");
    compute->add_option("--mu", ca.mu);
    compute->add_option("--rho", ca.rho);
    compute->add_option("--arg", ca.aa, "Hankel transform argument a");
    compute->add_option("--re", ca.re);
    compute->add_option("--im", ca.im);
    compute->add_option("--tol", ca.tol);
    compute->add_option("--chi", ca.chi, "character exponent vector, e.g. 1:0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << '\n';
        return (app.exit(e) == 0) ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (!kOpt.empty()) params.push_back("k=" + kOpt);
            if (!qOpt.empty()) params.push_back("q=" + qOpt);
            return run_verify(suite, config, params, seed, jobs, outPath, format, noTiming);
        }
        return run_compute(kind, ca);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
