// autoseq command-line front end. Talks to the library exclusively through
// the C API in autoseq/autoseq.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autoseq/autoseq.h"

namespace {

struct SeqDeleter {
    void operator()(asq_seq* s) const { asq_seq_free(s); }
};
using SeqPtr = std::unique_ptr<asq_seq, SeqDeleter>;

[[noreturn]] void die_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

void check(asq_status st, const std::string& what) {
    if (st != ASQ_OK)
        die_usage(what + ": " + asq_status_name(st) + " (" + asq_last_error() + ")");
}

SeqPtr build_sequence(const std::string& spec, const std::vector<std::string>& transforms) {
    asq_seq* raw = nullptr;
    check(asq_seq_create(spec.c_str(), &raw), "sequence '" + spec + "'");
    SeqPtr seq(raw);
    for (const auto& t : transforms) {
        asq_seq* next = nullptr;
        check(asq_seq_transform(seq.get(), t.c_str(), &next), "transform '" + t + "'");
        seq.reset(next);
    }
    return seq;
}

std::vector<uint8_t> fetch_prefix(const asq_seq* seq, uint64_t count) {
    std::vector<uint8_t> buf((size_t)count);
    check(asq_seq_prefix(seq, count, buf.data()), "prefix generation");
    return buf;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die_usage("cannot open output file " + path);
    out << payload;
}

std::string read_input(const std::string& path) {
    std::ostringstream text;
    if (path == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) die_usage("cannot open input file " + path);
        text << in.rdbuf();
    }
    return text.str();
}

std::string symbols_to_text(const std::vector<uint8_t>& s) {
    std::string out;
    out.reserve(s.size());
    for (uint8_t v : s) {
        if (v > 9) die_usage("sequence alphabet too large for the text format");
        out.push_back(char('0' + v));
    }
    return out;
}

std::vector<uint8_t> text_to_symbols(const std::string& text) {
    std::vector<uint8_t> out;
    for (char c : text) {
        if (c == '\n' || c == '\r') continue;
        if (c < '0' || c > '9') die_usage("bad character in sequence text input");
        out.push_back((uint8_t)(c - '0'));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"automatic sequences and their pseudorandomness measures"};
    app.require_subcommand(1);
    app.footer(
        "sequences: thue-morse, rudin-shapiro, rudin-shapiro-like, baum-sweet,\n"
        "  three-squares, paper-folding:v0=<0|1>, apwenian, pattern:<word>[,base=<k>],\n"
        "  zeckendorf-z, zeckendorf-u, all-zero\n"
        "transforms: poly:<c0,c1,...>, squares, primes, floorpow:<c>, geom:<g>");
    app.set_config("--config", "", "line-based key=value configuration file");
    app.allow_config_extras(CLI::config_extras_mode::error); // unknown keys are rejected

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = auto)")
        ->envname("AUTOSEQ_THREADS");

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a sequence prefix as text");
    std::string gen_seq, gen_out;
    std::vector<std::string> gen_tr;
    uint64_t gen_count = 64;
    gen->add_option("sequence", gen_seq, "catalog spec")->required();
    gen->add_option("--transform", gen_tr, "subsequence transform (repeatable)");
    gen->add_option("--count", gen_count, "number of symbols");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // profile ---------------------------------------------------------------
    auto* prof = app.add_subcommand("profile", "measure profile CSV over a prefix");
    std::string pr_seq, pr_in, pr_out, pr_measure, pr_field = "2";
    std::vector<std::string> pr_tr;
    uint64_t pr_count = 256, pr_stride = 1, pr_kmax = 16, pr_dmax = 0;
    unsigned pr_order = 2, pr_grid = 1024;
    prof->add_option("sequence", pr_seq, "catalog spec (omit when using --in)");
    prof->add_option("--in", pr_in, "read the prefix from a sequence text file ('-' = stdin)");
    prof->add_option("--transform", pr_tr, "subsequence transform (repeatable)");
    prof->add_option("--measure", pr_measure,
                     "linear|maxorder|welldist|correlation|expansion|subword|expsum")
        ->required();
    prof->add_option("--count", pr_count, "prefix length");
    prof->add_option("--stride", pr_stride, "sample stride")->check(CLI::PositiveNumber);
    prof->add_option("--order", pr_order, "correlation order k");
    prof->add_option("--field", pr_field, "field p or p^r for linear/expansion");
    prof->add_option("--grid", pr_grid, "unit-circle grid for expsum");
    prof->add_option("--kmax", pr_kmax, "largest window length for subword");
    prof->add_option("--dmax", pr_dmax, "lag cap for correlation (0 = exact)");
    prof->add_option("--out", pr_out, "output file (default stdout)");

    // figure ------------------------------------------------------------------
    auto* fig = app.add_subcommand("figure", "plain-text bitmap (P1) of a binary prefix");
    std::string fig_seq, fig_out;
    std::vector<std::string> fig_tr;
    uint64_t fig_rows = 64, fig_cols = 64;
    fig->add_option("sequence", fig_seq, "catalog spec")->required();
    fig->add_option("--transform", fig_tr, "subsequence transform (repeatable)");
    fig->add_option("--rows", fig_rows, "bitmap rows");
    fig->add_option("--cols", fig_cols, "bitmap columns");
    fig->add_option("--out", fig_out, "output file (default stdout)");

    // verify ------------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite;
    ver->add_option("suite", ver_suite, "identities|profiles|bounds|oracles|ff|statistical")
        ->required();

    // ff ------------------------------------------------------------------
    auto* ff = app.add_subcommand("ff", "finite-field digit-function histogram CSV");
    std::string ff_kind = "T", ff_domain = "field", ff_field = "5^2", ff_poly, ff_out;
    ff->add_option("--kind", ff_kind, "T or R");
    ff->add_option("--domain", ff_domain, "field|irreducibles");
    ff->add_option("--field", ff_field, "p^r");
    ff->add_option("--poly", ff_poly, "polynomial coefficients, constant term first");
    ff->add_option("--out", ff_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (gen->parsed()) {
        auto seq = build_sequence(gen_seq, gen_tr);
        auto prefix = fetch_prefix(seq.get(), gen_count);
        write_output(gen_out, symbols_to_text(prefix) + "\n");
        return 0;
    }

    if (prof->parsed()) {
        std::vector<uint8_t> prefix;
        if (!pr_in.empty()) {
            if (!pr_seq.empty()) die_usage("give either a sequence spec or --in, not both");
            prefix = text_to_symbols(read_input(pr_in));
        } else {
            if (pr_seq.empty()) die_usage("profile needs a sequence spec or --in");
            auto seq = build_sequence(pr_seq, pr_tr);
            prefix = fetch_prefix(seq.get(), pr_count);
        }
        uint64_t limit = pr_measure == "subword"
                             ? std::min<uint64_t>(pr_kmax, prefix.size())
                             : prefix.size();
        std::vector<uint64_t> samples;
        for (uint64_t n = pr_stride; n <= limit; n += pr_stride) samples.push_back(n);
        if (samples.empty()) die_usage("no sample points below the prefix length");

        std::string options = "field=" + pr_field + ",order=" + std::to_string(pr_order) +
                              ",grid=" + std::to_string(pr_grid) +
                              ",threads=" + std::to_string(threads);
        if (pr_dmax) options += ",dmax=" + std::to_string(pr_dmax);

        char* csv = nullptr;
        check(asq_measure_csv(prefix.data(), prefix.size(), pr_measure.c_str(), options.c_str(),
                              samples.data(), samples.size(), &csv),
              "measure '" + pr_measure + "'");
        write_output(pr_out, csv);
        asq_text_free(csv);
        return 0;
    }

    if (fig->parsed()) {
        auto seq = build_sequence(fig_seq, fig_tr);
        auto prefix = fetch_prefix(seq.get(), fig_rows * fig_cols);
        std::string out = "P1\n" + std::to_string(fig_cols) + " " + std::to_string(fig_rows) + "\n";
        for (uint64_t r = 0; r < fig_rows; ++r) {
            for (uint64_t c = 0; c < fig_cols; ++c) {
                uint8_t v = prefix[(size_t)(r * fig_cols + c)];
                if (v > 1) die_usage("figure needs a binary sequence");
                out += v ? '1' : '0';
                out += c + 1 < fig_cols ? ' ' : '\n';
            }
        }
        write_output(fig_out, out);
        return 0;
    }

    if (ver->parsed()) {
        int failures = 0;
        auto report = [](const char* line, void*) { std::cout << line << "\n"; };
        check(asq_verify(ver_suite.c_str(), threads, report, nullptr, &failures),
              "verify '" + ver_suite + "'");
        if (failures) {
            std::cout << failures << " check(s) failed\n";
            return 1;
        }
        std::cout << "all checks passed\n";
        return 0;
    }

    if (ff->parsed()) {
        unsigned p = 0, r = 1;
        auto caret = ff_field.find('^');
        p = (unsigned)std::stoul(ff_field.substr(0, caret));
        if (caret != std::string::npos) r = (unsigned)std::stoul(ff_field.substr(caret + 1));
        char* csv = nullptr;
        check(asq_ff_histogram(ff_kind.c_str(), ff_domain.c_str(), p, r,
                               ff_poly.empty() ? nullptr : ff_poly.c_str(), &csv),
              "ff histogram");
        write_output(ff_out, csv);
        asq_text_free(csv);
        return 0;
    }

    return 2;
}
