// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance_tests [path-to-qstrength-cli] [path-to-fixtures-dir]

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qstr/bounds.hpp"
#include "qstr/labeling.hpp"
#include "qstr/solver.hpp"
#include "qstr/strength.hpp"
#include "qstr/timing.hpp"
#include "qstr/verify.hpp"

namespace {

std::string g_cli = "./tools/qstrength";
std::string g_fixtures = "tests/fixtures";
int g_failures = 0;

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    CliRun r;
    std::string cmd = "\"" + g_cli + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

void criterion1_tables() {
    qstr::Stopwatch timer;
    bool pass = true;
    std::string detail;
    for (int n : {3, 4, 5, 6}) {
        CliRun r = run_cli("--format csv label --n " + std::to_string(n) + " --table");
        std::string expect = slurp(g_fixtures + "/table_s" + std::to_string(n) + ".csv");
        if (r.exit_code != 0 || expect.empty() || r.output != expect) {
            pass = false;
            detail = "n=" + std::to_string(n) + " CLI table differs from the published table";
            break;
        }
    }
    double ms = timer.elapsed_ms();
    if (pass && ms >= 1000.0) {
        pass = false;
        detail = "took too long";
    }
    if (pass) detail = "120 rows bit-exact, " + std::to_string(ms) + " ms";
    report(1, pass, "label tables for n=3..6 match the published tables", detail);
}

void criterion2_strength_agreement() {
    qstr::Stopwatch timer;
    bool pass = true;
    std::string detail;
    const std::uint64_t expect[] = {0, 0, 0, 11, 21, 40};
    for (int n = 3; n <= 5 && pass; ++n) {
        if (qstr::strf_hypercube_edges(n).value != expect[n] ||
            qstr::strf_hypercube_scan(n).value != expect[n]) {
            pass = false;
            detail = "n=" + std::to_string(n) + " does not give " + std::to_string(expect[n]);
        }
    }
    for (int n = 2; n <= 14 && pass; ++n) {
        if (qstr::strf_hypercube_edges(n).value != qstr::strf_hypercube_scan(n).value) {
            pass = false;
            detail = "methods disagree at n=" + std::to_string(n);
        }
    }
    double ms = timer.elapsed_ms();
    if (pass && ms >= 60000.0) {
        pass = false;
        detail = "took too long";
    }
    if (pass) detail = std::to_string(ms) + " ms";
    report(2, pass, "edge scan and pair scan give 11/21/40 and agree for n=2..14", detail);
}

void criterion3_recurrence_consistency() {
    qstr::Stopwatch timer;
    bool pass = true;
    std::string detail;
    for (int n = 5; n <= 14 && pass; ++n) {
        if (qstr::strf_hypercube_scan(n).value > qstr::upper_bound_recurrence(n)) {
            pass = false;
            detail = "scan exceeds the recurrence bound at n=" + std::to_string(n);
        }
    }
    double ms = timer.elapsed_ms();
    if (pass && ms >= 60000.0) {
        pass = false;
        detail = "took too long";
    }
    if (pass) detail = std::to_string(ms) + " ms";
    report(3, pass, "strf scan stays below the recurrence bound for n=5..14", detail);
}

void criterion4_table2() {
    qstr::Stopwatch timer;
    bool pass = true;
    std::string detail;
    const std::pair<std::uint64_t, std::uint64_t> expect[] = {
        {41, 40},     {81, 78},     {161, 152},   {321, 300},  {641, 591},
        {1281, 1173}, {2561, 2323}, {5121, 4623}, {10241, 9181}};
    auto rows = qstr::comparison_table(5, 13);
    if (rows.size() != 9) pass = false;
    for (std::size_t k = 0; pass && k < rows.size(); ++k)
        if (rows[k].upper_prior != expect[k].first ||
            rows[k].upper_recurrence != expect[k].second) {
            pass = false;
            detail = "mismatch at n=" + std::to_string(rows[k].n);
        }
    // cross-check against the committed fixture
    if (pass) {
        std::ostringstream regen;
        regen << "n,upper_prior,upper_recurrence\n";
        for (const auto& r : rows)
            regen << r.n << ',' << r.upper_prior << ',' << r.upper_recurrence << '\n';
        if (regen.str() != slurp(g_fixtures + "/table2.csv")) {
            pass = false;
            detail = "fixture table2.csv differs";
        }
    }
    double ms = timer.elapsed_ms();
    if (pass && ms >= 1000.0) {
        pass = false;
        detail = "took too long";
    }
    if (pass) detail = std::to_string(ms) + " ms";
    report(4, pass, "comparison table reproduces all nine published rows", detail);
}

void criterion5_closed_form() {
    qstr::Stopwatch timer;
    bool pass = true;
    std::string detail;
    for (int n = 14; n <= 64 && pass; ++n) {
        if (qstr::upper_bound_closed(n) != qstr::pow2(n) + qstr::pow2(n - 3) + 28 ||
            qstr::upper_bound_prior(n) - qstr::upper_bound_closed(n) !=
                qstr::pow2(n - 3) - 27) {
            pass = false;
            detail = "mismatch at n=" + std::to_string(n);
        }
    }
    double ms = timer.elapsed_ms();
    if (pass && ms >= 1000.0) {
        pass = false;
        detail = "took too long";
    }
    if (pass) detail = std::to_string(ms) + " ms";
    report(5, pass, "closed form and improvement gap are exact for n=14..64", detail);
}

void criterion6_solver() {
    using namespace std::chrono_literals;
    bool pass = true;
    std::string detail;

    qstr::Stopwatch small_timer;
    const std::uint64_t expect[] = {0, 3, 6, 11};
    for (int n = 1; n <= 3 && pass; ++n) {
        auto out = qstr::min_strength(qstr::build_graph(qstr::GraphKind::hypercube, n),
                                      qstr::SolveBudget::with_time(10s));
        if (out.status != qstr::SolveStatus::optimal || out.best_value != expect[n]) {
            pass = false;
            detail = "Q_" + std::to_string(n) + " not certified";
        }
    }
    double small_ms = small_timer.elapsed_ms();
    if (pass && small_ms >= 10000.0) {
        pass = false;
        detail = "Q_1..Q_3 took too long";
    }

    double q4_ms = 0.0;
    if (pass) {
        qstr::Stopwatch q4_timer;
        auto out = qstr::min_strength(qstr::build_graph(qstr::GraphKind::hypercube, 4),
                                      qstr::SolveBudget::with_time(600s));
        q4_ms = q4_timer.elapsed_ms();
        if (out.status != qstr::SolveStatus::optimal || out.best_value != 21) {
            pass = false;
            detail = "Q_4 not certified to 21 within the 10-minute budget";
        }
    }
    if (pass)
        detail = "Q_1..Q_3 in " + std::to_string(small_ms) + " ms, Q_4 in " +
                 std::to_string(q4_ms) + " ms";
    report(6, pass, "solver certifies str(Q_1)=3, str(Q_2)=6, str(Q_3)=11, str(Q_4)=21", detail);
}

void criterion7_property_suites() {
    qstr::Stopwatch timer;
    bool pass = true;
    std::string detail;

    std::vector<qstr::CheckResult> checks;
    auto append = [&](std::vector<qstr::CheckResult> more) {
        checks.insert(checks.end(), more.begin(), more.end());
    };
    append(qstr::verify_bijection_suite(14));    // bijectivity + oracle equivalence
    append(qstr::verify_complement_suite(13));   // complement shift on odd n
    append(qstr::verify_pair_formula_suite(16)); // closed form vs direct sums, 10^4 random
    append(qstr::verify_succprec_suite(12));     // prefix decompositions + dualities
    append(qstr::verify_recurrence_suite(12));   // witness shapes, chains, identities

    for (const auto& c : checks)
        if (!c.pass) {
            pass = false;
            detail = c.name + ": " + c.detail;
        }

    if (pass) {
        CliRun gate = run_cli("verify --suite all --n-max 12");
        if (gate.exit_code != 0) {
            pass = false;
            detail = "CLI verify gate exited with " + std::to_string(gate.exit_code);
        }
    }
    double ms = timer.elapsed_ms();
    if (pass && ms >= 300000.0) {
        pass = false;
        detail = "took too long";
    }
    if (pass)
        detail = std::to_string(checks.size()) + " checks, " + std::to_string(ms) + " ms";
    report(7, pass, "all property suites pass and the CLI verify gate exits 0", detail);
}

void criterion8_performance() {
    bool pass = true;
    std::string detail;

    const int n = 30;
    std::mt19937_64 rng(1234);
    std::vector<qstr::BitString> inputs;
    inputs.reserve(1 << 16);
    for (int t = 0; t < (1 << 16); ++t)
        inputs.push_back(qstr::BitString::from_word(n, rng() & ((1ull << n) - 1)));

    qstr::Stopwatch eval_timer;
    qstr::BigInt checksum = 0;
    std::size_t evals = 0;
    while (eval_timer.elapsed_ms() < 500.0) {
        for (const auto& x : inputs) checksum += qstr::label_of(n, x);
        evals += inputs.size();
    }
    double rate = static_cast<double>(evals) / (eval_timer.elapsed_ms() / 1000.0);
    if (checksum == 0 || rate < 1e6) {
        pass = false;
        detail = "label_of rate " + std::to_string(rate) + "/s";
    }

    double scan_ms = 0.0;
    if (pass) {
        qstr::Stopwatch scan_timer;
        auto r = qstr::strf_hypercube_scan(24);
        scan_ms = scan_timer.elapsed_ms();
        if (r.value == 0 || scan_ms >= 120000.0) {
            pass = false;
            detail = "scan(24) took " + std::to_string(scan_ms) + " ms";
        }
    }
    if (pass)
        detail = std::to_string(static_cast<long long>(rate)) + " labels/s, scan(24) in " +
                 std::to_string(scan_ms) + " ms";
    report(8, pass, "label evaluation exceeds 1e6/s at n=30 and scan(24) finishes in time",
           detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    if (argc > 2) g_fixtures = argv[2];

    criterion1_tables();
    criterion2_strength_agreement();
    criterion3_recurrence_consistency();
    criterion4_table2();
    criterion5_closed_form();
    criterion6_solver();
    criterion7_property_suites();
    criterion8_performance();

    if (g_failures == 0)
        std::cout << "all acceptance criteria passed" << std::endl;
    else
        std::cout << g_failures << " acceptance criteria FAILED" << std::endl;
    return g_failures;
}
