#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qstr/binomial.hpp"
#include "qstr/bitstring.hpp"
#include "qstr/graph.hpp"
#include "qstr/labeling.hpp"
#include "qstr/parallel.hpp"
#include "qstr/ranking.hpp"
#include "qstr/timing.hpp"

namespace qstr {

enum class StrengthMethod { edge_scan, pair_scan, solver };

inline const char* to_string(StrengthMethod m) {
    switch (m) {
    case StrengthMethod::edge_scan: return "edge_scan";
    case StrengthMethod::pair_scan: return "pair_scan";
    case StrengthMethod::solver: return "solver";
    }
    return "?";
}

/// Maximum label sum over the edges of a graph, with one witness edge
/// achieving it.
struct StrengthResult {
    BigInt value;
    std::size_t witness_u = 0;
    std::size_t witness_v = 0;
    std::optional<std::pair<BitString, BitString>> witness_strings; // hypercube vertices
    StrengthMethod method = StrengthMethod::edge_scan;
    double elapsed_ms = 0.0;
};

/// Exact max of labels[u] + labels[v] over all edges. `labels` must be a
/// bijection onto {1, ..., vertex_count}.
inline StrengthResult strength_of_labeling(const Graph& g, std::span<const std::uint64_t> labels) {
    Stopwatch timer;
    if (labels.size() != g.vertex_count)
        throw std::invalid_argument("strength_of_labeling: label count != vertex count");
    std::vector<bool> seen(g.vertex_count + 1, false);
    for (std::uint64_t v : labels) {
        if (v < 1 || v > g.vertex_count || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("strength_of_labeling: labels are not a bijection onto 1..N");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (g.edges.empty()) throw std::invalid_argument("strength_of_labeling: graph has no edges");

    StrengthResult r;
    std::uint64_t best = 0;
    for (auto [u, v] : g.edges) {
        std::uint64_t s = labels[u] + labels[v];
        if (s > best) {
            best = s;
            r.witness_u = u;
            r.witness_v = v;
        }
    }
    r.value = best;
    if (g.hypercube_dim > 0) {
        r.witness_strings = {BitString::from_word(g.hypercube_dim, r.witness_u),
                             BitString::from_word(g.hypercube_dim, r.witness_v)};
    }
    r.method = StrengthMethod::edge_scan;
    r.elapsed_ms = timer.elapsed_ms();
    return r;
}

/// Exact strength of the canonical labeling on Q_n by brute force over all
/// n*2^{n-1} edges. Oracle for strf_hypercube_scan. Requires n <= 24.
inline StrengthResult strf_hypercube_edges(int n) {
    Stopwatch timer;
    if (n < 1) throw std::invalid_argument("strf_hypercube_edges: n must be >= 1");
    if (n > 24) throw std::invalid_argument("strf_hypercube_edges: n > 24 (edge enumeration guard)");
    LabelEvaluator f(n);
    std::vector<std::uint64_t> labels(1ull << n);
    for (std::uint64_t v = 0; v < labels.size(); ++v) labels[v] = f.label(v);

    std::uint64_t best = 0, bu = 0, bv = 0;
    for (std::uint64_t v = 0; v < labels.size(); ++v)
        for (int j = 0; j < n; ++j) {
            std::uint64_t u = v ^ (1ull << j);
            if (u < v) continue;
            std::uint64_t s = labels[v] + labels[u];
            if (s > best) {
                best = s;
                bu = v;
                bv = u;
            }
        }
    StrengthResult r;
    r.value = best;
    r.witness_u = static_cast<std::size_t>(bu);
    r.witness_v = static_cast<std::size_t>(bv);
    r.witness_strings = {BitString::from_word(n, bu), BitString::from_word(n, bv)};
    r.method = StrengthMethod::edge_scan;
    r.elapsed_ms = timer.elapsed_ms();
    return r;
}

namespace detail {

// Next same-weight word in increasing numeric (= lex) order; x != 0.
inline std::uint64_t next_same_weight(std::uint64_t x) noexcept {
    std::uint64_t u = x & (~x + 1);
    std::uint64_t v = x + u;
    return v | (((x ^ v) / u) >> 2);
}

struct ScanChunk {
    int w_weight;             // weight class of w
    std::uint64_t rank_begin; // first lex rank handled
    std::uint64_t count;
};

struct ChunkBest {
    std::uint64_t sum = 0;
    std::uint64_t w = 0; // smallest w achieving sum within the chunk
};

// Splits the 2^{n-1} candidate prefixes w into per-weight-class rank ranges
// and evaluates f(w1)+f(w0) over each range. The (max sum, smallest w)
// reduction is associative, so results are bit-identical for any chunking
// or thread count.
inline std::vector<std::pair<ScanChunk, ChunkBest>> scan_pairs_chunked(int n) {
    const int m = n - 1;
    LabelEvaluator f(n);
    std::uint64_t total = 1ull << m;
    std::uint64_t goal = std::max<std::uint64_t>(4096, total / (8ull * thread_budget()));

    std::vector<ScanChunk> chunks;
    for (int c = 0; c <= m; ++c) {
        std::uint64_t size = binom64(m, c);
        for (std::uint64_t r = 0; r < size; r += goal)
            chunks.push_back({c, r, std::min(goal, size - r)});
    }

    std::vector<ChunkBest> best(chunks.size());
    parallel_for_index(chunks.size(), [&](std::size_t idx) {
        const ScanChunk& ch = chunks[idx];
        std::uint64_t w = lex_unrank_u64(m, ch.w_weight, ch.rank_begin);
        ChunkBest b;
        for (std::uint64_t k = 0; k < ch.count; ++k) {
            std::uint64_t sum = f.label((w << 1) | 1) + f.label(w << 1);
            if (sum > b.sum) {
                b.sum = sum;
                b.w = w;
            }
            if (k + 1 < ch.count) w = next_same_weight(w);
        }
        best[idx] = b;
    });

    std::vector<std::pair<ScanChunk, ChunkBest>> out;
    out.reserve(chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) out.emplace_back(chunks[i], best[i]);
    return out;
}

inline StrengthResult scan_result_from(int n, std::uint64_t sum, std::uint64_t w, double ms) {
    StrengthResult r;
    std::uint64_t x = (w << 1) | 1, y = w << 1;
    r.value = sum;
    r.witness_u = static_cast<std::size_t>(x);
    r.witness_v = static_cast<std::size_t>(y);
    r.witness_strings = {BitString::from_word(n, x), BitString::from_word(n, y)};
    r.method = StrengthMethod::pair_scan;
    r.elapsed_ms = ms;
    return r;
}

} // namespace detail

/// Exact strength of the canonical labeling on Q_n via the reduction to the
/// 2^{n-1} edges {w1, w0}: every maximum is attained on one of them. The
/// witness is the pair with lexicographically smallest w among the maxima.
/// Requires n <= 34; internally data-parallel with a deterministic reduction.
inline StrengthResult strf_hypercube_scan(int n) {
    Stopwatch timer;
    if (n < 1) throw std::invalid_argument("strf_hypercube_scan: n must be >= 1");
    if (n > 34) throw std::invalid_argument("strf_hypercube_scan: n > 34 (scan guard)");
    if (n == 1) {
        LabelEvaluator f(1);
        return detail::scan_result_from(1, f.label(1) + f.label(0), 0, timer.elapsed_ms());
    }
    auto chunked = detail::scan_pairs_chunked(n);
    std::uint64_t best = 0, best_w = 0;
    for (const auto& [ch, b] : chunked) {
        if (b.sum > best || (b.sum == best && b.w < best_w)) {
            best = b.sum;
            best_w = b.w;
        }
    }
    return detail::scan_result_from(n, best, best_w, timer.elapsed_ms());
}

/// Per-weight-class maxima of f(w1)+f(w0), one row per weight of w. Lets
/// reports record which class attains the overall maximum.
struct ClassScanRow {
    int w_weight = 0;       // weight of the (n-1)-bit prefix w
    int odd_end_weight = 0; // weight of the odd-weight endpoint of {w1, w0}
    BigInt value;
    BitString w;
};

inline std::vector<ClassScanRow> strf_hypercube_scan_by_class(int n) {
    if (n < 2) throw std::invalid_argument("strf_hypercube_scan_by_class: n must be >= 2");
    if (n > 34) throw std::invalid_argument("strf_hypercube_scan_by_class: n > 34 (scan guard)");
    auto chunked = detail::scan_pairs_chunked(n);
    std::vector<ClassScanRow> rows(static_cast<std::size_t>(n)); // classes 0..n-1
    std::vector<bool> init(static_cast<std::size_t>(n), false);
    for (const auto& [ch, b] : chunked) {
        auto& row = rows[static_cast<std::size_t>(ch.w_weight)];
        if (!init[static_cast<std::size_t>(ch.w_weight)] || b.sum > row.value ||
            (BigInt(b.sum) == row.value && BitString::from_word(n - 1, b.w) < row.w)) {
            row.w_weight = ch.w_weight;
            row.odd_end_weight = ch.w_weight % 2 == 0 ? ch.w_weight + 1 : ch.w_weight;
            row.value = b.sum;
            row.w = BitString::from_word(n - 1, b.w);
            init[static_cast<std::size_t>(ch.w_weight)] = true;
        }
    }
    return rows;
}

/// f(w1) + f(w0) computed from Succ/Prec counts and a binomial instead of
/// two label evaluations; w must make w1 odd-weight (weight of w even).
inline BigInt pair_sum(int n, const BitString& w) {
    if (n < 1) throw std::invalid_argument("pair_sum: n must be >= 1");
    if (w.length() != n - 1)
        throw std::invalid_argument("pair_sum: w must have length n-1");
    if (w.weight() % 2 != 0)
        throw std::invalid_argument("pair_sum: w1 must have odd weight (weight of w even)");
    int i = w.weight() + 1;
    BitString x = w.with_suffix(true);
    BitString y = w.with_suffix(false);
    return pow2(n) + binomial(n - 1, i) - succ_count(x, Order::revlex) +
           prec_count(y, Order::lex) + 1;
}

} // namespace qstr
