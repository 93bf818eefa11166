#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace autoseq {

struct MeasureOptions {
    std::string field = "2"; // "p" or "p^r"; linear and expansion profiles
    unsigned order = 2;      // correlation order
    unsigned grid = 1024;    // exponential-sum grid
    int threads = 0;         // 0 = AUTOSEQ_THREADS env or hardware
    std::optional<uint64_t> d_max;
    bool allow_large_k = false;
};

// Measures: linear, maxorder, welldist, correlation, expansion, subword,
// expsum. Sample points are prefix lengths N (window lengths k for subword).
// Values are exact integers for every measure except expsum. Results do not
// depend on the thread count.
std::vector<double> measure_profile(std::span<const uint8_t> s, const std::string& measure,
                                    const MeasureOptions& opts,
                                    std::span<const uint64_t> samples);

// Witness lines for the final sample (recurrence, conflict positions,
// progression, lag tuple, or annihilator), each prefixed with "# ".
std::string measure_witness(std::span<const uint8_t> s, const std::string& measure,
                            const MeasureOptions& opts);

// CSV with header "N,value", one row per sample, witness comments appended.
std::string profile_csv(std::span<const uint64_t> samples, std::span<const double> values,
                        const std::string& witness, bool integral_values);

bool measure_is_integral(const std::string& measure);

} // namespace autoseq
