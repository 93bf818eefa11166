#include "autoseq/autoseq.h"

#include <cstring>
#include <string>

#include "core/error.hpp"
#include "ff/polyring.hpp"
#include "meas/profile.hpp"
#include "seq/sequence.hpp"
#include "verify/verify.hpp"

using namespace autoseq;

namespace {

thread_local std::string g_last_error;

asq_status to_status(errc code) {
    return (asq_status)(int)code;
}

template <typename Fn>
asq_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return ASQ_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return ASQ_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ASQ_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

MeasureOptions parse_options(const char* options) {
    MeasureOptions opts;
    if (!options) return opts;
    std::string text = options;
    size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) fail(errc::invalid_argument, "options need key=value");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "field")
            opts.field = val;
        else if (key == "order")
            opts.order = (unsigned)std::stoul(val);
        else if (key == "grid")
            opts.grid = (unsigned)std::stoul(val);
        else if (key == "threads")
            opts.threads = (int)std::stol(val);
        else if (key == "dmax")
            opts.d_max = std::stoull(val);
        else if (key == "allow-large-k")
            opts.allow_large_k = val == "1" || val == "true";
        else
            fail(errc::invalid_argument, "unknown option: " + key);
    }
    return opts;
}

} // namespace

struct asq_seq {
    SequenceHandle handle;
};

extern "C" {

unsigned asq_version(void) { return 100; }

const char* asq_status_name(asq_status status) {
    switch (status) {
        case ASQ_OK: return "ok";
        case ASQ_ERR_INVALID_ARGUMENT: return "invalid argument";
        case ASQ_ERR_UNKNOWN_NAME: return "unknown name";
        case ASQ_ERR_DOMAIN: return "domain error";
        case ASQ_ERR_CAP_EXCEEDED: return "cap exceeded";
        case ASQ_ERR_UNSUPPORTED: return "unsupported";
        case ASQ_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* asq_last_error(void) { return g_last_error.c_str(); }

asq_status asq_seq_create(const char* spec, asq_seq** out) {
    if (!spec || !out) return ASQ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new asq_seq{SequenceHandle::create(spec)}; });
}

asq_status asq_seq_transform(const asq_seq* base, const char* spec, asq_seq** out) {
    if (!base || !spec || !out) return ASQ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = new asq_seq{base->handle.transformed(spec)}; });
}

void asq_seq_free(asq_seq* seq) { delete seq; }

const char* asq_seq_name(const asq_seq* seq) { return seq ? seq->handle.name().c_str() : ""; }

unsigned asq_seq_alphabet(const asq_seq* seq) { return seq ? seq->handle.alphabet() : 0; }

int asq_seq_has_automaton(const asq_seq* seq) {
    return seq && seq->handle.has_automaton() ? 1 : 0;
}

asq_status asq_seq_prefix(const asq_seq* seq, uint64_t count, uint8_t* out) {
    if (!seq || (!out && count)) return ASQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto prefix = seq->handle.prefix((size_t)count);
        std::memcpy(out, prefix.data(), prefix.size());
    });
}

asq_status asq_seq_cross_check(const asq_seq* seq, uint64_t count, int* agree) {
    if (!seq || !agree) return ASQ_ERR_INVALID_ARGUMENT;
    return guarded([&] { *agree = seq->handle.cross_check((size_t)count) ? 1 : 0; });
}

asq_status asq_measure_profile(const uint8_t* s, uint64_t n, const char* measure,
                               const char* options, const uint64_t* samples,
                               uint64_t num_samples, double* out_values) {
    if ((!s && n) || !measure || (!samples && num_samples) || (!out_values && num_samples))
        return ASQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto opts = parse_options(options);
        auto values = measure_profile({s, (size_t)n}, measure, opts,
                                      {samples, (size_t)num_samples});
        for (size_t i = 0; i < values.size(); ++i) out_values[i] = values[i];
    });
}

asq_status asq_measure_witness(const uint8_t* s, uint64_t n, const char* measure,
                               const char* options, char** out_text) {
    if ((!s && n) || !measure || !out_text) return ASQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto opts = parse_options(options);
        *out_text = dup_string(measure_witness({s, (size_t)n}, measure, opts));
    });
}

asq_status asq_measure_csv(const uint8_t* s, uint64_t n, const char* measure,
                           const char* options, const uint64_t* samples, uint64_t num_samples,
                           char** out_csv) {
    if ((!s && n) || !measure || !out_csv || (!samples && num_samples))
        return ASQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto opts = parse_options(options);
        std::span<const uint64_t> sam{samples, (size_t)num_samples};
        auto values = measure_profile({s, (size_t)n}, measure, opts, sam);
        auto witness = measure_witness({s, (size_t)n}, measure, opts);
        *out_csv = dup_string(profile_csv(sam, values, witness, measure_is_integral(measure)));
    });
}

void asq_text_free(char* text) { delete[] text; }

asq_status asq_ff_histogram(const char* kind, const char* domain, unsigned p, unsigned r,
                            const char* poly, char** out_csv) {
    if (!kind || !domain || !out_csv) return ASQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        DigitKind dk;
        std::string k = kind;
        if (k == "T" || k == "t")
            dk = DigitKind::thue_morse;
        else if (k == "R" || k == "r")
            dk = DigitKind::rudin_shapiro;
        else
            fail(errc::unknown_name, "digit function must be T or R");

        std::string dom = domain;
        if (dom == "field") {
            if (!poly) fail(errc::invalid_argument, "field domain needs a polynomial");
            FieldCtx F(p, r);
            auto f = UniPoly::parse(&F, poly);
            *out_csv = dup_string(count_along_polynomial(F, dk, f).csv());
        } else if (dom == "irreducibles") {
            FieldCtx Fp(p);
            *out_csv = dup_string(count_over_irreducibles(Fp, dk, r).csv());
        } else {
            fail(errc::unknown_name, "domain must be field or irreducibles");
        }
    });
}

asq_status asq_verify(const char* suite, int threads, asq_report_fn report, void* user,
                      int* failures) {
    if (!suite || !failures) return ASQ_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        int bad = 0;
        for (int id : suite_criteria(suite)) {
            auto res = run_criterion(id, threads);
            for (const auto& check : res.checks) {
                if (!check.pass) ++bad;
                if (report) {
                    std::string line = std::string(check.pass ? "ok   " : "FAIL ") + check.name +
                                       ": " + check.detail;
                    report(line.c_str(), user);
                }
            }
        }
        *failures = bad;
    });
}

} // extern "C"
