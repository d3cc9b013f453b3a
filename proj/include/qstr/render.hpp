#pragma once

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qstr/bounds.hpp"
#include "qstr/labeling.hpp"
#include "qstr/solver.hpp"
#include "qstr/strength.hpp"
#include "qstr/verify.hpp"

namespace qstr {

enum class OutputFormat { markdown, csv, json };

inline OutputFormat parse_format(const std::string& text) {
    if (text == "markdown") return OutputFormat::markdown;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + text + "' (expected markdown|csv|json)");
}

namespace detail {

/// Visit the 2^n strings in label order without materializing the sequence;
/// fn(word, label) is called with labels 1, 2, ....
template <typename Fn>
void for_each_in_sequence(int n, Fn&& fn) {
    if (n < 1 || n > 24) throw std::invalid_argument("label table requires 1 <= n <= 24");
    std::uint64_t label = 1;
    std::vector<std::uint64_t> block;
    for (int i = 1; i <= n; i += 2) { // odd weights ascending, reverse-lex
        block.clear();
        std::uint64_t w = (1ull << i) - 1;
        for (std::uint64_t k = binom64(n, i); k > 0; --k) {
            block.push_back(w);
            if (k > 1) w = next_same_weight(w);
        }
        for (auto it = block.rbegin(); it != block.rend(); ++it) fn(*it, label++);
    }
    for (int i = (n % 2 == 0) ? n : n - 1; i >= 0; i -= 2) { // even weights descending, lex
        std::uint64_t w = i == 0 ? 0 : (1ull << i) - 1;
        for (std::uint64_t k = binom64(n, i); k > 0; --k) {
            fn(w, label++);
            if (k > 1) w = next_same_weight(w);
        }
    }
}

} // namespace detail

inline void render_label_table(std::ostream& os, int n, OutputFormat fmt) {
    if (n < 1 || n > 24) throw std::invalid_argument("label table requires 1 <= n <= 24");
    switch (fmt) {
    case OutputFormat::markdown: {
        os << "| bit string | label |\n|---|---|\n";
        int prev_weight = -1;
        detail::for_each_in_sequence(n, [&](std::uint64_t w, std::uint64_t label) {
            int wt = std::popcount(w);
            if (prev_weight >= 0 && wt != prev_weight) os << "|---|---|\n";
            prev_weight = wt;
            os << "| " << BitString::from_word(n, w).str() << " | " << label << " |\n";
        });
        return;
    }
    case OutputFormat::csv: {
        os << "bitstring,label\n";
        detail::for_each_in_sequence(n, [&](std::uint64_t w, std::uint64_t label) {
            os << BitString::from_word(n, w).str() << ',' << label << '\n';
        });
        return;
    }
    case OutputFormat::json: {
        nlohmann::json rows = nlohmann::json::array();
        detail::for_each_in_sequence(n, [&](std::uint64_t w, std::uint64_t label) {
            rows.push_back({{"bits", BitString::from_word(n, w).str()},
                            {"label", std::to_string(label)}});
        });
        os << nlohmann::json{{"n", n}, {"rows", std::move(rows)}}.dump(2) << '\n';
        return;
    }
    }
}

inline nlohmann::json strength_to_json(int n, const StrengthResult& r) {
    nlohmann::json j;
    j["n"] = n;
    j["value"] = r.value.str();
    if (r.witness_strings)
        j["witness"] = {r.witness_strings->first.str(), r.witness_strings->second.str()};
    else
        j["witness"] = {r.witness_u, r.witness_v};
    j["method"] = to_string(r.method);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline void render_strength(std::ostream& os, int n, const StrengthResult& r, OutputFormat fmt) {
    std::string wx = r.witness_strings ? r.witness_strings->first.str()
                                       : std::to_string(r.witness_u);
    std::string wy = r.witness_strings ? r.witness_strings->second.str()
                                       : std::to_string(r.witness_v);
    switch (fmt) {
    case OutputFormat::markdown:
        os << "| n | value | witness | method | elapsed_ms |\n|---|---|---|---|---|\n"
           << "| " << n << " | " << r.value << " | {" << wx << ", " << wy << "} | "
           << to_string(r.method) << " | " << r.elapsed_ms << " |\n";
        return;
    case OutputFormat::csv:
        os << "n,value,witness_x,witness_y,method,elapsed_ms\n"
           << n << ',' << r.value << ',' << wx << ',' << wy << ',' << to_string(r.method) << ','
           << r.elapsed_ms << '\n';
        return;
    case OutputFormat::json:
        os << strength_to_json(n, r).dump(2) << '\n';
        return;
    }
}

inline void render_scan_classes(std::ostream& os, int n, const std::vector<ClassScanRow>& rows,
                                OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::markdown:
        os << "| w weight | odd endpoint weight | best value | w |\n|---|---|---|---|\n";
        for (const auto& row : rows)
            os << "| " << row.w_weight << " | " << row.odd_end_weight << " | " << row.value
               << " | " << row.w.str() << " |\n";
        return;
    case OutputFormat::csv:
        os << "w_weight,odd_end_weight,value,w\n";
        for (const auto& row : rows)
            os << row.w_weight << ',' << row.odd_end_weight << ',' << row.value << ','
               << row.w.str() << '\n';
        return;
    case OutputFormat::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows)
            arr.push_back({{"w_weight", row.w_weight},
                           {"odd_end_weight", row.odd_end_weight},
                           {"value", row.value.str()},
                           {"w", row.w.str()}});
        os << nlohmann::json{{"n", n}, {"classes", std::move(arr)}}.dump(2) << '\n';
        return;
    }
    }
}

inline void render_bounds(std::ostream& os, const std::vector<BoundsRow>& rows, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::markdown:
        os << "| n | lower | upper_prior | upper_recurrence | upper_closed |\n"
           << "|---|---|---|---|---|\n";
        for (const auto& r : rows)
            os << "| " << r.n << " | " << r.lower << " | " << r.upper_prior << " | "
               << r.upper_recurrence << " | "
               << (r.upper_closed ? r.upper_closed->str() : std::string("-")) << " |\n";
        return;
    case OutputFormat::csv:
        os << "n,lower,upper_prior,upper_recurrence,upper_closed\n";
        for (const auto& r : rows)
            os << r.n << ',' << r.lower << ',' << r.upper_prior << ',' << r.upper_recurrence
               << ',' << (r.upper_closed ? r.upper_closed->str() : std::string()) << '\n';
        return;
    case OutputFormat::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row{{"n", r.n},
                               {"lower", r.lower.str()},
                               {"upper_prior", r.upper_prior.str()},
                               {"upper_recurrence", r.upper_recurrence.str()}};
            row["upper_closed"] =
                r.upper_closed ? nlohmann::json(r.upper_closed->str()) : nlohmann::json(nullptr);
            arr.push_back(std::move(row));
        }
        os << arr.dump(2) << '\n';
        return;
    }
    }
}

inline nlohmann::json outcome_to_json(const Graph& g, const SolveOutcome& o) {
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t v = 0; v < o.best_labeling.size(); ++v) {
        if (g.hypercube_dim > 0)
            pairs.push_back({BitString::from_word(g.hypercube_dim, v).str(), o.best_labeling[v]});
        else
            pairs.push_back({v, o.best_labeling[v]});
    }
    return nlohmann::json{{"graph", g.name},
                          {"status", to_string(o.status)},
                          {"best_value", std::to_string(o.best_value)},
                          {"nodes_explored", o.nodes_explored},
                          {"elapsed_ms", o.elapsed_ms},
                          {"labeling", std::move(pairs)}};
}

inline void render_outcome(std::ostream& os, const Graph& g, const SolveOutcome& o,
                           OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::markdown: {
        os << "| graph | status | best_value | nodes_explored | elapsed_ms |\n"
           << "|---|---|---|---|---|\n"
           << "| " << g.name << " | " << to_string(o.status) << " | " << o.best_value << " | "
           << o.nodes_explored << " | " << o.elapsed_ms << " |\n\n";
        os << "| vertex | label |\n|---|---|\n";
        for (std::size_t v = 0; v < o.best_labeling.size(); ++v) {
            if (g.hypercube_dim > 0)
                os << "| " << BitString::from_word(g.hypercube_dim, v).str();
            else
                os << "| " << v;
            os << " | " << o.best_labeling[v] << " |\n";
        }
        return;
    }
    case OutputFormat::csv:
        os << "vertex,label\n";
        for (std::size_t v = 0; v < o.best_labeling.size(); ++v) {
            if (g.hypercube_dim > 0)
                os << BitString::from_word(g.hypercube_dim, v).str();
            else
                os << v;
            os << ',' << o.best_labeling[v] << '\n';
        }
        return;
    case OutputFormat::json:
        os << outcome_to_json(g, o).dump(2) << '\n';
        return;
    }
}

inline void render_checks(std::ostream& os, const std::vector<CheckResult>& checks,
                          OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        os << arr.dump(2) << '\n';
        return;
    }
    case OutputFormat::csv: {
        os << "name,pass,detail\n";
        for (const auto& c : checks) {
            std::string quoted = c.detail;
            std::size_t pos = 0;
            while ((pos = quoted.find('"', pos)) != std::string::npos) {
                quoted.insert(pos, 1, '"');
                pos += 2;
            }
            os << c.name << ',' << (c.pass ? "true" : "false") << ",\"" << quoted << "\"\n";
        }
        return;
    }
    case OutputFormat::markdown: {
        for (const auto& c : checks)
            os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.detail << ")\n";
        std::size_t failed = static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
        os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
        return;
    }
    }
}

/// Parse a labeling from the JSON pair format emitted by outcome_to_json.
inline std::vector<std::uint32_t> parse_labeling_json(const nlohmann::json& pairs,
                                                      const Graph& g) {
    const nlohmann::json* arr = &pairs;
    if (pairs.is_object() && pairs.contains("labeling")) arr = &pairs.at("labeling");
    if (!arr->is_array()) throw std::invalid_argument("labeling JSON must be an array of pairs");
    std::vector<std::uint32_t> labels(g.vertex_count, 0);
    for (const auto& entry : *arr) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("labeling entry must be a [vertex, label] pair");
        std::size_t v;
        if (entry[0].is_string())
            v = static_cast<std::size_t>(BitString::parse(entry[0].get<std::string>()).word());
        else
            v = entry[0].get<std::size_t>();
        if (v >= g.vertex_count) throw std::invalid_argument("labeling vertex out of range");
        labels[v] = entry[1].get<std::uint32_t>();
    }
    return labels;
}

} // namespace qstr
