#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "autoseq/autoseq.h"

namespace {

std::string prefix_text(asq_seq* seq, uint64_t n) {
    std::vector<uint8_t> buf(n);
    REQUIRE(asq_seq_prefix(seq, n, buf.data()) == ASQ_OK);
    std::string out;
    for (uint8_t v : buf) out.push_back(char('0' + v));
    return out;
}

} // namespace

TEST_CASE("sequence handles over the C surface") {
    asq_seq* tm = nullptr;
    REQUIRE(asq_seq_create("thue-morse", &tm) == ASQ_OK);
    CHECK(std::string(asq_seq_name(tm)) == "thue-morse");
    CHECK(asq_seq_alphabet(tm) == 2);
    CHECK(asq_seq_has_automaton(tm) == 1);
    CHECK(prefix_text(tm, 12) == "011010011001");

    int agree = 0;
    REQUIRE(asq_seq_cross_check(tm, 4096, &agree) == ASQ_OK);
    CHECK(agree == 1);

    asq_seq* sq = nullptr;
    REQUIRE(asq_seq_transform(tm, "squares", &sq) == ASQ_OK);
    CHECK(prefix_text(sq, 6) == "011011");
    asq_seq_free(sq);
    asq_seq_free(tm);
}

TEST_CASE("C error reporting") {
    asq_seq* seq = nullptr;
    CHECK(asq_seq_create("nonesuch", &seq) == ASQ_ERR_UNKNOWN_NAME);
    CHECK(std::string(asq_last_error()).find("nonesuch") != std::string::npos);
    CHECK(asq_seq_create(nullptr, &seq) == ASQ_ERR_INVALID_ARGUMENT);
    CHECK(std::string(asq_status_name(ASQ_ERR_DOMAIN)) == "domain error");

    REQUIRE(asq_seq_create("thue-morse", &seq) == ASQ_OK);
    asq_seq* out = nullptr;
    CHECK(asq_seq_transform(seq, "floorpow:3.0", &out) == ASQ_ERR_INVALID_ARGUMENT);
    CHECK(asq_seq_transform(seq, "warp:9", &out) == ASQ_ERR_UNKNOWN_NAME);
    asq_seq_free(seq);
}

TEST_CASE("measure profiles over the C surface") {
    asq_seq* tm = nullptr;
    REQUIRE(asq_seq_create("thue-morse", &tm) == ASQ_OK);
    std::vector<uint8_t> buf(64);
    REQUIRE(asq_seq_prefix(tm, buf.size(), buf.data()) == ASQ_OK);
    asq_seq_free(tm);

    uint64_t samples[2] = {10, 64};
    double values[2] = {0, 0};
    REQUIRE(asq_measure_profile(buf.data(), buf.size(), "linear", nullptr, samples, 2, values) ==
            ASQ_OK);
    CHECK(values[0] == 6.0);
    CHECK(values[1] == 32.0);

    char* witness = nullptr;
    REQUIRE(asq_measure_witness(buf.data(), buf.size(), "linear", nullptr, &witness) == ASQ_OK);
    CHECK(std::string(witness).rfind("# L=", 0) == 0);
    asq_text_free(witness);

    char* csv = nullptr;
    REQUIRE(asq_measure_csv(buf.data(), buf.size(), "maxorder", nullptr, samples, 2, &csv) ==
            ASQ_OK);
    CHECK(std::string(csv).rfind("N,value\n", 0) == 0);
    asq_text_free(csv);

    CHECK(asq_measure_profile(buf.data(), buf.size(), "nonesuch", nullptr, samples, 2, values) ==
          ASQ_ERR_UNKNOWN_NAME);
    CHECK(asq_measure_profile(buf.data(), buf.size(), "linear", "mystery=1", samples, 2,
                              values) == ASQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("ff histograms over the C surface") {
    char* csv = nullptr;
    REQUIRE(asq_ff_histogram("T", "irreducibles", 5, 2, nullptr, &csv) == ASQ_OK);
    std::string text = csv;
    asq_text_free(csv);
    CHECK(text.find("c,count,expected,bound") != std::string::npos);
    CHECK(text.find("0,2,2") != std::string::npos);

    REQUIRE(asq_ff_histogram("T", "field", 5, 2, "0,0,1", &csv) == ASQ_OK);
    asq_text_free(csv);
    CHECK(asq_ff_histogram("Q", "field", 5, 2, "0,0,1", &csv) == ASQ_ERR_UNKNOWN_NAME);
    CHECK(asq_ff_histogram("T", "orbit", 5, 2, "0,0,1", &csv) == ASQ_ERR_UNKNOWN_NAME);
}

TEST_CASE("verify dispatch rejects unknown suites") {
    int failures = 0;
    CHECK(asq_verify("nonesuch", 1, nullptr, nullptr, &failures) == ASQ_ERR_UNKNOWN_NAME);
}
