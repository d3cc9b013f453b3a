// qstrength: command-line front end for the hypercube labeling toolkit.
//
// Subcommands: label (tables and point evaluations of the canonical
// bijection), strength (exact strength of that labeling on Q_n), exact
// (minimum strength over all labelings, branch-and-bound), bounds
// (lower/upper bound tables), verify (invariant suites).
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 solver stopped without an optimality certificate.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstr/bounds.hpp"
#include "qstr/render.hpp"
#include "qstr/solver.hpp"
#include "qstr/strength.hpp"
#include "qstr/verify.hpp"

namespace {

qstr::GraphKind parse_graph_kind(const std::string& text) {
    if (text == "hypercube") return qstr::GraphKind::hypercube;
    if (text == "path") return qstr::GraphKind::path;
    if (text == "cycle") return qstr::GraphKind::cycle;
    throw std::invalid_argument("unknown graph kind '" + text +
                                "' (expected hypercube|path|cycle)");
}

int run_label(int n, const std::optional<std::string>& bits,
              const std::optional<std::string>& value, bool table, qstr::OutputFormat fmt) {
    int selected = (bits ? 1 : 0) + (value ? 1 : 0) + (table ? 1 : 0);
    if (selected != 1) {
        std::cerr << "label: exactly one of --string, --value, --table is required\n";
        return 1;
    }
    if (table) {
        qstr::render_label_table(std::cout, n, fmt);
        return 0;
    }
    if (bits) {
        qstr::BitString x = qstr::BitString::parse(*bits);
        qstr::BigInt lab = qstr::label_of(n, x);
        if (fmt == qstr::OutputFormat::json)
            std::cout << nlohmann::json{{"n", n}, {"bits", x.str()}, {"label", lab.str()}}.dump(2)
                      << '\n';
        else
            std::cout << lab << '\n';
        return 0;
    }
    qstr::BigInt v(*value);
    qstr::BitString x = qstr::string_of(n, v);
    if (fmt == qstr::OutputFormat::json)
        std::cout << nlohmann::json{{"n", n}, {"bits", x.str()}, {"label", v.str()}}.dump(2)
                  << '\n';
    else
        std::cout << x.str() << '\n';
    return 0;
}

int run_strength(int n, const std::string& method, bool per_class, qstr::OutputFormat fmt) {
    qstr::StrengthResult r;
    if (method == "edges") {
        if (n > 24) {
            std::cerr << "strength: n > 24 is out of range for --method edges; "
                         "use --method scan (supports n <= 34)\n";
            return 1;
        }
        r = qstr::strf_hypercube_edges(n);
    } else if (method == "scan") {
        if (n > 34) {
            std::cerr << "strength: n > 34 is out of range for --method scan "
                         "(and for --method edges, which supports n <= 24)\n";
            return 1;
        }
        r = qstr::strf_hypercube_scan(n);
    } else {
        std::cerr << "strength: unknown method '" << method << "' (expected edges|scan)\n";
        return 1;
    }
    qstr::render_strength(std::cout, n, r, fmt);
    if (per_class && n >= 2) {
        auto rows = qstr::strf_hypercube_scan_by_class(n);
        if (fmt != qstr::OutputFormat::json) std::cout << '\n';
        qstr::render_scan_classes(std::cout, n, rows, fmt);
    }
    return 0;
}

int run_exact(const std::string& kind_text, int n, double time_limit_s,
              std::optional<std::uint64_t> node_limit,
              const std::optional<std::string>& seed_path, qstr::OutputFormat fmt) {
    qstr::Graph g = qstr::build_graph(parse_graph_kind(kind_text), n);
    qstr::SolveBudget budget;
    budget.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit_s * 1000));
    budget.node_limit = node_limit;

    std::optional<std::vector<std::uint32_t>> seed;
    if (seed_path) {
        std::ifstream in(*seed_path);
        if (!in) throw std::invalid_argument("cannot open seed labeling file: " + *seed_path);
        nlohmann::json j = nlohmann::json::parse(in);
        seed = qstr::parse_labeling_json(j, g);
    }

    qstr::SolveOutcome outcome = qstr::min_strength(g, budget, seed ? &*seed : nullptr);
    qstr::render_outcome(std::cout, g, outcome, fmt);
    return outcome.status == qstr::SolveStatus::optimal ? 0 : 3;
}

int run_bounds(int n_min, int n_max, qstr::OutputFormat fmt) {
    qstr::render_bounds(std::cout, qstr::comparison_table(n_min, n_max), fmt);
    return 0;
}

int run_verify(const std::string& suite, int n_max, qstr::OutputFormat fmt) {
    std::vector<qstr::CheckResult> checks;
    if (suite == "bijection")
        checks = qstr::verify_bijection_suite(n_max);
    else if (suite == "complement")
        checks = qstr::verify_complement_suite(n_max);
    else if (suite == "lemma23")
        checks = qstr::verify_pair_formula_suite(n_max);
    else if (suite == "succprec")
        checks = qstr::verify_succprec_suite(n_max);
    else if (suite == "recurrence")
        checks = qstr::verify_recurrence_suite(n_max);
    else if (suite == "all")
        checks = qstr::verify_all(n_max);
    else {
        std::cerr << "verify: unknown suite '" << suite
                  << "' (expected bijection|complement|lemma23|succprec|recurrence|all)\n";
        return 1;
    }
    qstr::render_checks(std::cout, checks, fmt);
    for (const auto& c : checks)
        if (!c.pass) return 2;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercube labeling strength toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "markdown";
    app.add_option("--format", format, "output format: markdown|csv|json")
        ->capture_default_str();

    auto* label = app.add_subcommand("label", "canonical labeling: tables and point lookups");
    int label_n = 0;
    std::optional<std::string> label_string, label_value;
    bool label_table = false;
    label->add_option("--n", label_n, "dimension")->required();
    label->add_option("--string", label_string, "bit string to evaluate f on");
    label->add_option("--value", label_value, "label to invert through f^{-1}");
    label->add_flag("--table", label_table, "print the full table (n <= 24)");

    auto* strength = app.add_subcommand("strength", "exact strength of the canonical labeling");
    int strength_n = 0;
    std::string strength_method = "scan";
    bool per_class = false;
    strength->add_option("--n", strength_n, "dimension")->required();
    strength->add_option("--method", strength_method, "edges (n <= 24) or scan (n <= 34)")
        ->capture_default_str();
    strength->add_flag("--per-class", per_class, "also print per-weight-class maxima");

    auto* exact = app.add_subcommand("exact", "exact minimum strength (branch and bound)");
    std::string exact_graph = "hypercube";
    int exact_n = 0;
    double time_limit_s = 600.0;
    std::optional<std::uint64_t> node_limit;
    std::optional<std::string> seed_path;
    exact->add_option("--graph", exact_graph, "hypercube|path|cycle")->capture_default_str();
    exact->add_option("--n", exact_n, "graph parameter")->required();
    exact->add_option("--time-limit", time_limit_s, "seconds")->capture_default_str();
    exact->add_option("--node-limit", node_limit, "search node cap");
    exact->add_option("--seed-labeling", seed_path, "JSON labeling to warm-start from");

    auto* bounds = app.add_subcommand("bounds", "lower/upper bound comparison table");
    int n_min = 0, n_max_bounds = 0;
    bounds->add_option("--n-min", n_min, "first dimension (>= 3)")->required();
    bounds->add_option("--n-max", n_max_bounds, "last dimension")->required();

    auto* verify = app.add_subcommand("verify", "run invariant suites");
    std::string suite = "all";
    int verify_n_max = 10;
    verify->add_option("--suite", suite,
                       "bijection|complement|lemma23|succprec|recurrence|all")
        ->capture_default_str();
    verify->add_option("--n-max", verify_n_max, "dimension cap for the checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        qstr::OutputFormat fmt = qstr::parse_format(format);
        if (label->parsed())
            return run_label(label_n, label_string, label_value, label_table, fmt);
        if (strength->parsed()) return run_strength(strength_n, strength_method, per_class, fmt);
        if (exact->parsed())
            return run_exact(exact_graph, exact_n, time_limit_s, node_limit, seed_path, fmt);
        if (bounds->parsed()) return run_bounds(n_min, n_max_bounds, fmt);
        if (verify->parsed()) return run_verify(suite, verify_n_max, fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
