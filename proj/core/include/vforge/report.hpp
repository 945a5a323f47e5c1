#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace vforge {

// One identity check. pass <=> (exact == true) or residual <= tolerance;
// enforced by finalize().
struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    double residual = 0.0;
    double tolerance = 0.0;
    std::optional<bool> exact;
    bool pass = false;
    std::int64_t runtimeMs = 0;
    std::uint64_t seed = 0;

    void finalize() { pass = (exact.has_value() && *exact) || residual <= tolerance; }
};

// Shortest decimal that round-trips to the same double.
std::string format_shortest(double v);
std::string format_complex(std::complex<double> z);

// One JSON object per line, fields in the declaration order above.
void write_jsonl(std::ostream& os, const std::vector<VerificationReport>& reports);

// Header row plus one record per line; params joined as k=v;k=v.
void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports);

} // namespace vforge
