#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qstr {

/// Finite simple graph: vertex count plus an edge list of 0-based index
/// pairs, each stored with u < v. Builders set the metadata flags the exact
/// solver uses for symmetry reduction.
struct Graph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    bool vertex_transitive = false;
    int hypercube_dim = 0; // > 0 when built as a hypercube Q_n
    std::string name = "generic";

    std::size_t min_degree() const {
        std::vector<std::size_t> deg(vertex_count, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
    }
};

/// Validating constructor for arbitrary graphs: rejects self-loops,
/// duplicate edges and out-of-range endpoints.
inline Graph make_graph(std::size_t vertex_count,
                        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    Graph g;
    g.vertex_count = vertex_count;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("make_graph: self-loop");
        if (u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("make_graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("make_graph: duplicate edge");
    g.edges = std::move(edges);
    return g;
}

enum class GraphKind { hypercube, path, cycle };

/// hypercube: Q_n on 2^n vertices (vertex index = binary value of the
/// string), n*2^{n-1} edges between strings at Hamming distance one.
/// path: n vertices, n-1 edges. cycle: n vertices, n edges, n >= 3.
inline Graph build_graph(GraphKind kind, int n) {
    if (n < 1) throw std::invalid_argument("build_graph: n must be >= 1");
    Graph g;
    switch (kind) {
    case GraphKind::hypercube: {
        if (n > 20) throw std::invalid_argument("build_graph: hypercube n > 20 not supported");
        std::size_t vertices = std::size_t{1} << n;
        g.vertex_count = vertices;
        g.edges.reserve(vertices / 2 * static_cast<std::size_t>(n));
        for (std::uint32_t v = 0; v < vertices; ++v)
            for (int j = 0; j < n; ++j) {
                std::uint32_t u = v ^ (1u << j);
                if (v < u) g.edges.emplace_back(v, u);
            }
        std::sort(g.edges.begin(), g.edges.end());
        g.vertex_transitive = true;
        g.hypercube_dim = n;
        g.name = "Q_" + std::to_string(n);
        return g;
    }
    case GraphKind::path: {
        g.vertex_count = static_cast<std::size_t>(n);
        for (std::uint32_t i = 0; i + 1 < static_cast<std::uint32_t>(n); ++i)
            g.edges.emplace_back(i, i + 1);
        g.name = "P_" + std::to_string(n);
        return g;
    }
    case GraphKind::cycle: {
        if (n < 3) throw std::invalid_argument("build_graph: cycle requires n >= 3");
        g.vertex_count = static_cast<std::size_t>(n);
        for (std::uint32_t i = 0; i + 1 < static_cast<std::uint32_t>(n); ++i)
            g.edges.emplace_back(i, i + 1);
        g.edges.emplace_back(0, static_cast<std::uint32_t>(n - 1));
        std::sort(g.edges.begin(), g.edges.end());
        g.vertex_transitive = true;
        g.name = "C_" + std::to_string(n);
        return g;
    }
    }
    throw std::logic_error("build_graph: unknown kind");
}

} // namespace qstr
