#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qstr/graph.hpp"
#include "qstr/labeling.hpp"
#include "qstr/strength.hpp"

namespace qstr {

/// Search budget; at least one limit must be set.
struct SolveBudget {
    std::optional<std::chrono::milliseconds> time_limit;
    std::optional<std::uint64_t> node_limit;

    static SolveBudget with_time(std::chrono::milliseconds ms) { return {ms, std::nullopt}; }
    static SolveBudget with_nodes(std::uint64_t nodes) { return {std::nullopt, nodes}; }
};

enum class FeasibleStatus { yes, no, timeout };

struct FeasibleResult {
    FeasibleStatus status = FeasibleStatus::timeout;
    std::vector<std::uint32_t> labeling; // label per vertex when status == yes
    std::uint64_t nodes_explored = 0;
};

enum class SolveStatus { optimal, feasible_only, timeout };

inline const char* to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::feasible_only: return "feasible_only";
    case SolveStatus::timeout: return "timeout";
    }
    return "?";
}

inline const char* to_string(FeasibleStatus s) {
    switch (s) {
    case FeasibleStatus::yes: return "yes";
    case FeasibleStatus::no: return "no";
    case FeasibleStatus::timeout: return "timeout";
    }
    return "?";
}

struct SolveOutcome {
    SolveStatus status = SolveStatus::timeout;
    std::uint64_t best_value = 0;
    std::vector<std::uint32_t> best_labeling;
    std::uint64_t nodes_explored = 0;
    double elapsed_ms = 0.0;
};

namespace detail {

// Decision search for "is there a labeling with every edge sum <= s".
// Labels are assigned N, N-1, ... downward: the large labels are the binding
// constraints, so placing them first maximizes pruning. A vertex whose
// neighbor holds label t can only receive labels <= s - t (its cap); a Hall
// check on the multiset of caps fails fast when the remaining small labels
// cannot fit.
class ThresholdSearch {
public:
    ThresholdSearch(const Graph& g, std::uint64_t s, const SolveBudget& budget)
        : n_(static_cast<int>(g.vertex_count)), s_(s), g_(g) {
        if (g.vertex_count > 64)
            throw std::invalid_argument("exact solver supports at most 64 vertices");
        if (!budget.time_limit && !budget.node_limit)
            throw std::invalid_argument("SolveBudget: at least one limit must be set");
        adj_.fill(0);
        for (auto [u, v] : g.edges) {
            adj_[u] |= 1ull << v;
            adj_[v] |= 1ull << u;
        }
        if (budget.time_limit)
            deadline_ = std::chrono::steady_clock::now() + *budget.time_limit;
        node_limit_ = budget.node_limit;
    }

    FeasibleResult run() {
        label_of_vertex_.assign(static_cast<std::size_t>(n_), 0);
        cap_.fill(std::numeric_limits<std::uint32_t>::max());
        unlabeled_ = (n_ == 64) ? ~0ull : (1ull << n_) - 1;
        nodes_ = 0;
        out_of_budget_ = false;
        bool found = place(static_cast<std::uint32_t>(n_));
        FeasibleResult r;
        r.nodes_explored = nodes_;
        if (found) {
            r.status = FeasibleStatus::yes;
            r.labeling = label_of_vertex_;
        } else {
            r.status = out_of_budget_ ? FeasibleStatus::timeout : FeasibleStatus::no;
        }
        return r;
    }

private:
    bool budget_exceeded() {
        if (node_limit_ && nodes_ >= *node_limit_) return true;
        if (deadline_ && (nodes_ & 1023) == 0 &&
            std::chrono::steady_clock::now() >= *deadline_)
            return true;
        return false;
    }

    // Hall condition on caps: the labels 1..v must fit the v unlabeled
    // vertices, where a vertex with cap c only accepts labels <= c.
    bool caps_admit(std::uint32_t v) const {
        std::array<std::uint32_t, 66> cnt{};
        std::uint64_t rest = unlabeled_;
        while (rest != 0) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t c = std::min<std::uint64_t>(cap_[static_cast<std::size_t>(u)], v);
            if (c == 0) return false;
            ++cnt[static_cast<std::size_t>(c)];
        }
        std::uint32_t below = 0;
        for (std::uint32_t t = 1; t <= v; ++t) {
            below += cnt[t];
            if (below > t) return false; // more vertices capped at <= t than labels
        }
        return true;
    }

    bool place(std::uint32_t v) {
        if (v == 0) return true;
        if (out_of_budget_) return false;

        std::uint64_t candidates = unlabeled_;
        // Symmetry reduction, sound only for the full label range:
        // vertex-transitivity lets label N sit on vertex 0; for hypercubes the
        // stabilizer of vertex 0 is the coordinate permutations, whose orbits
        // on the remaining vertices are the weight classes, so label N-1 can
        // be confined to the packed representative of each weight.
        if (v == static_cast<std::uint32_t>(n_) && g_.vertex_transitive) {
            candidates = 1ull;
        } else if (v + 1 == static_cast<std::uint32_t>(n_) && g_.hypercube_dim > 0 &&
                   label_of_vertex_[0] == static_cast<std::uint32_t>(n_)) {
            std::uint64_t reps = 0;
            for (int k = 1; k <= g_.hypercube_dim; ++k) reps |= 1ull << ((1ull << k) - 1);
            candidates &= reps;
        }

        while (candidates != 0) {
            int u = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (cap_[static_cast<std::size_t>(u)] < v) continue;

            ++nodes_;
            if (budget_exceeded()) {
                out_of_budget_ = true;
                return false;
            }

            label_of_vertex_[static_cast<std::size_t>(u)] = v;
            unlabeled_ &= ~(1ull << u);
            std::uint64_t touched = 0;
            std::array<std::uint32_t, 64> saved{};
            std::uint64_t nb = adj_[static_cast<std::size_t>(u)] & unlabeled_;
            std::uint64_t new_cap = s_ >= v ? s_ - v : 0;
            while (nb != 0) {
                int t = std::countr_zero(nb);
                nb &= nb - 1;
                if (cap_[static_cast<std::size_t>(t)] > new_cap) {
                    touched |= 1ull << t;
                    saved[static_cast<std::size_t>(t)] = cap_[static_cast<std::size_t>(t)];
                    cap_[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(new_cap);
                }
            }

            if (caps_admit(v - 1) && place(v - 1)) return true;

            while (touched != 0) {
                int t = std::countr_zero(touched);
                touched &= touched - 1;
                cap_[static_cast<std::size_t>(t)] = saved[static_cast<std::size_t>(t)];
            }
            unlabeled_ |= 1ull << u;
            label_of_vertex_[static_cast<std::size_t>(u)] = 0;
            if (out_of_budget_) return false;
        }
        return false;
    }

    int n_;
    std::uint64_t s_;
    const Graph& g_;
    std::array<std::uint64_t, 64> adj_{};
    std::array<std::uint32_t, 64> cap_{};
    std::vector<std::uint32_t> label_of_vertex_;
    std::uint64_t unlabeled_ = 0;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::optional<std::uint64_t> node_limit_;
};

inline std::uint64_t labeling_strength(const Graph& g, const std::vector<std::uint32_t>& lab) {
    std::vector<std::uint64_t> wide(lab.begin(), lab.end());
    return static_cast<std::uint64_t>(strength_of_labeling(g, wide).value);
}

// Degree floor on the strength. The highest label on a non-isolated vertex
// is at least N - #isolated, and that vertex meets a neighbor labeled at
// least its degree. Reduces to N + min_degree when nothing is isolated.
inline std::uint64_t strength_floor(const Graph& g) {
    std::vector<std::size_t> deg(g.vertex_count, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::size_t isolated = 0, min_positive = g.vertex_count;
    for (std::size_t d : deg) {
        if (d == 0)
            ++isolated;
        else
            min_positive = std::min(min_positive, d);
    }
    return g.vertex_count - isolated + min_positive;
}

} // namespace detail

/// Decide whether some bijective labeling keeps every edge sum <= s.
/// "yes" carries a witness labeling; "no" is a certified exhaustion.
inline FeasibleResult feasible(const Graph& g, std::uint64_t s, const SolveBudget& budget) {
    if (g.edges.empty()) throw std::invalid_argument("feasible: graph has no edges");
    detail::ThresholdSearch search(g, s, budget);
    return search.run();
}

/// Exact minimum strength by downward linear threshold search from a
/// feasible seed labeling. Every "yes" tightens the bound; the first
/// certified "no" (or reaching the degree floor N + min_degree) proves
/// optimality.
inline SolveOutcome min_strength(const Graph& g, const SolveBudget& budget,
                                 const std::vector<std::uint32_t>* seed = nullptr) {
    Stopwatch timer;
    if (g.edges.empty()) throw std::invalid_argument("min_strength: graph has no edges");
    if (g.vertex_count > 64)
        throw std::invalid_argument("exact solver supports at most 64 vertices");
    if (!budget.time_limit && !budget.node_limit)
        throw std::invalid_argument("SolveBudget: at least one limit must be set");

    const auto n = static_cast<std::uint32_t>(g.vertex_count);
    std::vector<std::uint32_t> best;
    if (seed != nullptr) {
        best = *seed;
    } else if (g.hypercube_dim > 0) {
        Labeling lab = canonical_labeling(g.hypercube_dim);
        best.assign(lab.forward.begin(), lab.forward.end());
    } else {
        best.resize(g.vertex_count);
        for (std::uint32_t i = 0; i < n; ++i) best[i] = i + 1;
    }
    std::uint64_t best_value = detail::labeling_strength(g, best); // validates the labeling

    const std::uint64_t floor = detail::strength_floor(g);
    SolveOutcome out;
    out.nodes_explored = 0;

    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (budget.time_limit) deadline = std::chrono::steady_clock::now() + *budget.time_limit;
    std::optional<std::uint64_t> nodes_left = budget.node_limit;

    while (best_value > floor) {
        SolveBudget remaining;
        if (deadline) {
            auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                *deadline - std::chrono::steady_clock::now());
            if (left.count() <= 0) {
                out.status = SolveStatus::timeout;
                out.best_value = best_value;
                out.best_labeling = best;
                out.elapsed_ms = timer.elapsed_ms();
                return out;
            }
            remaining.time_limit = left;
        }
        if (nodes_left) remaining.node_limit = *nodes_left;

        FeasibleResult r = feasible(g, best_value - 1, remaining);
        out.nodes_explored += r.nodes_explored;
        if (nodes_left) *nodes_left -= std::min(*nodes_left, r.nodes_explored);

        if (r.status == FeasibleStatus::yes) {
            best = r.labeling;
            best_value = detail::labeling_strength(g, best);
        } else if (r.status == FeasibleStatus::no) {
            break; // certified: nothing below best_value is feasible
        } else {
            bool time_ran_out = deadline && std::chrono::steady_clock::now() >= *deadline;
            out.status = time_ran_out ? SolveStatus::timeout : SolveStatus::feasible_only;
            out.best_value = best_value;
            out.best_labeling = best;
            out.elapsed_ms = timer.elapsed_ms();
            return out;
        }
    }

    out.status = SolveStatus::optimal;
    out.best_value = best_value;
    out.best_labeling = best;
    out.elapsed_ms = timer.elapsed_ms();
    return out;
}

} // namespace qstr
