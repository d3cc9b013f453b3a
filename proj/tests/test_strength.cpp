#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "qstr/strength.hpp"
#include "qstr/verify.hpp"

using qstr::BigInt;
using qstr::BitString;
using qstr::Graph;
using qstr::GraphKind;

TEST_CASE("generic strength evaluation") {
    Graph q1 = qstr::build_graph(GraphKind::hypercube, 1);
    auto lab1 = qstr::canonical_labeling(1);
    CHECK(qstr::strength_of_labeling(q1, lab1.forward).value == 3);

    Graph p2 = qstr::build_graph(GraphKind::path, 2);
    std::vector<std::uint64_t> labels{1, 2};
    CHECK(qstr::strength_of_labeling(p2, labels).value == 3);

    Graph q3 = qstr::build_graph(GraphKind::hypercube, 3);
    auto lab3 = qstr::canonical_labeling(3);
    auto r = qstr::strength_of_labeling(q3, lab3.forward);
    CHECK(r.value == 11);
    REQUIRE(r.witness_strings.has_value());
    auto pair = std::pair{r.witness_strings->first.str(), r.witness_strings->second.str()};
    bool expected_witness = (pair == std::pair<std::string, std::string>{"111", "110"}) ||
                            (pair == std::pair<std::string, std::string>{"110", "111"}) ||
                            (pair == std::pair<std::string, std::string>{"001", "000"}) ||
                            (pair == std::pair<std::string, std::string>{"000", "001"});
    CHECK(expected_witness);
    CHECK(lab3.forward[r.witness_u] + lab3.forward[r.witness_v] == 11);
}

TEST_CASE("strength evaluation rejects bad input") {
    Graph q2 = qstr::build_graph(GraphKind::hypercube, 2);
    std::vector<std::uint64_t> dup{1, 2, 2, 4};
    CHECK_THROWS_AS(qstr::strength_of_labeling(q2, dup), std::invalid_argument);
    std::vector<std::uint64_t> range{1, 2, 3, 5};
    CHECK_THROWS_AS(qstr::strength_of_labeling(q2, range), std::invalid_argument);
    Graph p1 = qstr::build_graph(GraphKind::path, 1);
    std::vector<std::uint64_t> one{1};
    CHECK_THROWS_AS(qstr::strength_of_labeling(p1, one), std::invalid_argument);
}

TEST_CASE("edge brute force on known dimensions") {
    CHECK(qstr::strf_hypercube_edges(1).value == 3);
    CHECK(qstr::strf_hypercube_edges(2).value == 6);
    CHECK(qstr::strf_hypercube_edges(3).value == 11);
    CHECK(qstr::strf_hypercube_edges(4).value == 21);
    CHECK(qstr::strf_hypercube_edges(5).value == 40);
    CHECK_THROWS_AS(qstr::strf_hypercube_edges(25), std::invalid_argument);
}

TEST_CASE("pair scan equals the edge brute force") {
    for (int n = 2; n <= 12; ++n)
        CHECK(qstr::strf_hypercube_scan(n).value == qstr::strf_hypercube_edges(n).value);
    CHECK_THROWS_AS(qstr::strf_hypercube_scan(35), std::invalid_argument);
}

TEST_CASE("scan witness ties break to the smallest prefix") {
    auto r = qstr::strf_hypercube_scan(5);
    CHECK(r.value == 40);
    REQUIRE(r.witness_strings.has_value());
    // the four maximal pairs share value 40; the smallest w is 0101
    CHECK(r.witness_strings->first.str() == "01011");
    CHECK(r.witness_strings->second.str() == "01010");
}

TEST_CASE("pair_sum closed form") {
    CHECK(qstr::pair_sum(3, BitString::parse("00")) == 11);
    CHECK(qstr::pair_sum(4, BitString::parse("110")) == 21);
    CHECK(qstr::pair_sum(5, BitString::parse("0110")) == 40);
    CHECK_THROWS_AS(qstr::pair_sum(4, BitString::parse("100")), std::invalid_argument);
    CHECK_THROWS_AS(qstr::pair_sum(4, BitString::parse("1100")), std::invalid_argument);
}

TEST_CASE("pair_sum equals direct label sums") {
    for (int n = 2; n <= 10; ++n) {
        qstr::LabelEvaluator f(n);
        for (std::uint64_t w = 0; w < (1ull << (n - 1)); ++w) {
            if (std::popcount(w) % 2 != 0) continue;
            BigInt direct = BigInt(f.label((w << 1) | 1)) + f.label(w << 1);
            REQUIRE(qstr::pair_sum(n, BitString::from_word(n - 1, w)) == direct);
        }
    }
    std::mt19937_64 rng(42);
    for (int n = 11; n <= 16; ++n) {
        qstr::LabelEvaluator f(n);
        std::uint64_t mask = (1ull << (n - 1)) - 1;
        for (int t = 0; t < 2000; ++t) {
            std::uint64_t w = rng() & mask;
            if (std::popcount(w) % 2 != 0) w &= w - 1;
            BigInt direct = BigInt(f.label((w << 1) | 1)) + f.label(w << 1);
            REQUIRE(qstr::pair_sum(n, BitString::from_word(n - 1, w)) == direct);
        }
    }
}

TEST_CASE("maximum edges have the last-bit shape and adjacent weights") {
    for (const auto& check : qstr::verify_recurrence_suite(10)) {
        INFO(check.name << ": " << check.detail);
        if (check.name == "max-edge-shape" || check.name == "scan-equals-edges")
            CHECK(check.pass);
    }
}

TEST_CASE("per-class scan is consistent with the overall scan") {
    for (int n : {3, 6, 9}) {
        auto rows = qstr::strf_hypercube_scan_by_class(n);
        REQUIRE(rows.size() == static_cast<std::size_t>(n));
        auto overall = qstr::strf_hypercube_scan(n);
        BigInt best = 0;
        for (const auto& row : rows) {
            CHECK(row.w.length() == n - 1);
            CHECK(row.w.weight() == row.w_weight);
            if (row.value > best) best = row.value;
        }
        CHECK(best == overall.value);
    }
}

TEST_CASE("no edge exceeds the reported value") {
    for (int n : {3, 5, 8}) {
        auto r = qstr::strf_hypercube_edges(n);
        qstr::LabelEvaluator f(n);
        for (std::uint64_t v = 0; v < (1ull << n); ++v)
            for (int j = 0; j < n; ++j) {
                std::uint64_t u = v ^ (1ull << j);
                if (u > v) REQUIRE(BigInt(f.label(v) + f.label(u)) <= r.value);
            }
    }
}

TEST_CASE("random labelings never beat the canonical one at optimal dimensions") {
    // exact strength is known to match the canonical labeling for n <= 5
    for (int n : {3, 4}) {
        Graph g = qstr::build_graph(GraphKind::hypercube, n);
        BigInt canonical = qstr::strf_hypercube_edges(n).value;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto rnd = qstr::random_labeling(n, seed);
            CHECK(qstr::strength_of_labeling(g, rnd.forward).value >= canonical);
        }
    }
}

TEST_CASE("scan is deterministic across thread budgets") {
    const char* saved = std::getenv("QSTR_THREADS");
    std::string saved_copy = saved ? saved : "";

    setenv("QSTR_THREADS", "1", 1);
    auto serial = qstr::strf_hypercube_scan(13);
    setenv("QSTR_THREADS", "7", 1);
    auto parallel = qstr::strf_hypercube_scan(13);

    if (saved)
        setenv("QSTR_THREADS", saved_copy.c_str(), 1);
    else
        unsetenv("QSTR_THREADS");

    CHECK(serial.value == parallel.value);
    REQUIRE(serial.witness_strings.has_value());
    REQUIRE(parallel.witness_strings.has_value());
    CHECK(serial.witness_strings->first == parallel.witness_strings->first);
    CHECK(serial.witness_strings->second == parallel.witness_strings->second);
}

TEST_CASE("one- and two-step chains bound the scan") {
    std::vector<BigInt> scan(13);
    for (int n = 1; n <= 12; ++n) scan[n] = qstr::strf_hypercube_scan(n).value;
    for (int n = 3; n <= 12; ++n)
        CHECK(scan[n] <= scan[n - 1] + qstr::pow2(n - 1) + qstr::binomial(n - 2, (n - 1) / 2));
    for (int n = 5; n <= 12; ++n)
        CHECK(scan[n] <= scan[n - 2] + 3 * qstr::pow2(n - 2) + qstr::binomial(n - 3, (n - 2) / 2) +
                             qstr::binomial(n - 2, (n - 1) / 2));
}
