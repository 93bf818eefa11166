#include "meas/profile.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "meas/correlation.hpp"
#include "meas/expansion.hpp"
#include "meas/linear.hpp"
#include "meas/maxorder.hpp"
#include "meas/subword.hpp"

namespace autoseq {

namespace {

void check_samples(std::span<const uint64_t> samples, size_t n) {
    for (uint64_t v : samples) {
        if (v < 1 || v > n) fail(errc::invalid_argument, "sample point outside [1, N]");
    }
}

std::vector<double> from_profile(std::span<const uint64_t> samples,
                                 std::span<const uint32_t> prof) {
    std::vector<double> out(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) out[i] = prof[(size_t)samples[i] - 1];
    return out;
}

std::vector<double> from_profile64(std::span<const uint64_t> samples,
                                   std::span<const int64_t> prof) {
    std::vector<double> out(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) out[i] = (double)prof[(size_t)samples[i] - 1];
    return out;
}

} // namespace

bool measure_is_integral(const std::string& measure) { return measure != "expsum"; }

std::vector<double> measure_profile(std::span<const uint8_t> s, const std::string& measure,
                                    const MeasureOptions& opts,
                                    std::span<const uint64_t> samples) {
    check_samples(samples, s.size());

    if (measure == "linear") {
        auto F = FieldCtx::parse(opts.field);
        auto rec = linear_complexity(*F, s);
        return from_profile(samples, rec.profile);
    }
    if (measure == "maxorder") {
        auto rec = max_order_complexity(s);
        return from_profile(samples, rec.profile);
    }
    if (measure == "welldist") {
        auto prof = well_distribution_profile(s, opts.threads);
        return from_profile64(samples, prof);
    }
    if (measure == "correlation") {
        if (opts.order == 2 && !opts.d_max) {
            auto prof = correlation2_profile(s, opts.threads);
            return from_profile64(samples, prof);
        }
        std::vector<double> out(samples.size());
        parallel_for(samples.size(), opts.threads, [&](size_t i) {
            CorrelationQuery q{opts.order, opts.d_max, opts.allow_large_k};
            out[i] = (double)correlation(s.first((size_t)samples[i]), q).value;
        });
        return out;
    }
    if (measure == "expansion") {
        auto F = FieldCtx::parse(opts.field);
        auto rec = expansion_complexity(*F, s, samples);
        // expansion_complexity sorts and dedups internally; map back.
        std::vector<double> out(samples.size());
        for (size_t i = 0; i < samples.size(); ++i) {
            for (const auto& pt : rec.points)
                if (pt.N == samples[i]) out[i] = pt.E;
        }
        return out;
    }
    if (measure == "subword") {
        uint64_t kmax = 0;
        for (uint64_t v : samples) kmax = std::max(kmax, v);
        auto counts = subword_complexity(s, (uint32_t)kmax);
        std::vector<double> out(samples.size());
        for (size_t i = 0; i < samples.size(); ++i) out[i] = (double)counts[(size_t)samples[i]];
        return out;
    }
    if (measure == "expsum") {
        std::vector<double> out(samples.size());
        parallel_for(samples.size(), opts.threads, [&](size_t i) {
            out[i] = exponential_sum_sup(s.first((size_t)samples[i]), opts.grid, 1);
        });
        return out;
    }
    fail(errc::unknown_name, "unknown measure: " + measure);
}

std::string measure_witness(std::span<const uint8_t> s, const std::string& measure,
                            const MeasureOptions& opts) {
    if (measure == "linear") {
        auto F = FieldCtx::parse(opts.field);
        auto rec = linear_complexity(*F, s);
        std::string conn;
        for (uint32_t l = rec.t; l <= rec.L; ++l)
            conn += (l > rec.t ? "," : "") + std::to_string(rec.conn[l]);
        return "# L=" + std::to_string(rec.L) + " t=" + std::to_string(rec.t) +
               " recurrence_c_t..c_L=" + conn + "\n";
    }
    if (measure == "maxorder") {
        auto rec = max_order_complexity(s);
        std::string out = "# M=" + std::to_string(rec.M);
        if (rec.witness)
            out += " witness n1=" + std::to_string(rec.witness->n1) +
                   " n2=" + std::to_string(rec.witness->n2) +
                   " len=" + std::to_string(rec.witness->length);
        return out + "\n";
    }
    if (measure == "welldist") {
        auto rec = well_distribution(s);
        return "# W=" + std::to_string(rec.W) + " witness a=" + std::to_string(rec.a) +
               " b=" + std::to_string(rec.b) + " t=" + std::to_string(rec.t) + "\n";
    }
    if (measure == "correlation") {
        CorrelationQuery q{opts.order, opts.d_max, opts.allow_large_k};
        auto rec = correlation(s, q);
        std::string d;
        for (size_t i = 0; i < rec.D.size(); ++i) d += (i ? "," : "") + std::to_string(rec.D[i]);
        return "# C_" + std::to_string(opts.order) + "=" + std::to_string(rec.value) +
               (rec.lower_bound_only ? " (lower bound, capped lags)" : "") +
               " witness M=" + std::to_string(rec.M) + " D=" + d + "\n";
    }
    if (measure == "expansion") {
        auto F = FieldCtx::parse(opts.field);
        uint64_t n = s.size();
        auto rec = expansion_complexity(*F, s, std::span<const uint64_t>(&n, 1));
        const auto& pt = rec.points.back();
        std::string out = "# E=" + std::to_string(pt.E) + "\n";
        if (pt.witness && !pt.witness->is_zero()) {
            // Witness in the bivariate text format, one "i j c" line each.
            for (const auto& t : pt.witness->terms())
                out += "# h " + std::to_string(t.i) + " " + std::to_string(t.j) + " " +
                       std::to_string(t.c) + "\n";
        }
        return out;
    }
    if (measure == "expsum") return "# grid=" + std::to_string(opts.grid) + "\n";
    return "";
}

std::string profile_csv(std::span<const uint64_t> samples, std::span<const double> values,
                        const std::string& witness, bool integral_values) {
    std::string out = "N,value\n";
    char buf[64];
    for (size_t i = 0; i < samples.size(); ++i) {
        if (integral_values) {
            snprintf(buf, sizeof buf, "%llu,%lld\n", (unsigned long long)samples[i],
                     (long long)std::llround(values[i]));
        } else {
            snprintf(buf, sizeof buf, "%llu,%.9g\n", (unsigned long long)samples[i], values[i]);
        }
        out += buf;
    }
    out += witness;
    return out;
}

} // namespace autoseq
