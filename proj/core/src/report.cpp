#include "vforge/report.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace vforge {

std::string format_shortest(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return format_shortest(z.real());
    std::string s = format_shortest(z.real());
    if (!std::signbit(z.imag())) s += "+";
    s += format_shortest(z.imag());
    s += "i";
    return s;
}

void write_jsonl(std::ostream& os, const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) p[k] = v;
        j["params"] = p;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["residual"] = r.residual;
        j["tolerance"] = r.tolerance;
        if (r.exact.has_value()) j["exact"] = *r.exact;
        else j["exact"] = nullptr;
        j["pass"] = r.pass;
        j["runtimeMs"] = r.runtimeMs;
        j["seed"] = r.seed;
        os << j.dump() << '\n';
    }
}

void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
    os << "suite,params,lhs,rhs,residual,tolerance,exact,pass,runtimeMs,seed\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.params) {
            if (!params.empty()) params += ';';
            params += k;
            params += '=';
            params += v;
        }
        os << r.suite << ',' << params << ',' << r.lhs << ',' << r.rhs << ','
           << format_shortest(r.residual) << ',' << format_shortest(r.tolerance) << ','
           << (r.exact.has_value() ? (*r.exact ? "true" : "false") : "") << ','
           << (r.pass ? "true" : "false") << ',' << r.runtimeMs << ',' << r.seed << '\n';
    }
}

} // namespace vforge
