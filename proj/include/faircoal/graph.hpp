// Simple undirected graphs with per-vertex neighbor masks, plus the
// standard family generators and the edge-list text format.
#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "faircoal/errors.hpp"
#include "faircoal/vertex_set.hpp"

namespace faircoal {

class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxOrder) +
                                        ", got " + std::to_string(n));
    }

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return neighbors(v).count(); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }

    int edge_count() const {
        int twice = 0;
        for (const VertexSet& row : adj_) twice += row.count();
        return twice / 2;
    }

    std::vector<int> degree_sequence() const {  // sorted ascending
        std::vector<int> d;
        d.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) d.push_back(degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }

    // degree n-1; vacuously full in K_1
    bool is_full_vertex(int v) const { return neighbors(v) == (vertices() - VertexSet::single(v)); }

    VertexSet full_vertices() const {
        VertexSet out;
        for (int v = 0; v < n_; ++v)
            if (is_full_vertex(v)) out.add(v);
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(n_));
    }

    int n_;
    std::vector<VertexSet> adj_;
};

// --- family generators ------------------------------------------------

inline Graph gen_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires order >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph gen_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph gen_empty(int n) { return Graph(n); }

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- 5+i.
inline Graph gen_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

// G o K_1: one new pendant vertex per original vertex; pendant of v is g.order()+v.
inline Graph corona_k1(const Graph& g) {
    int n = g.order();
    if (2 * n > kMaxOrder)
        throw std::invalid_argument("corona would exceed the order cap");
    Graph h(2 * n);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u))
            if (u < v) h.add_edge(u, v);
        h.add_edge(u, n + u);
    }
    return h;
}

// Uniform random labeled tree via a random Pruefer sequence; deterministic in (n, seed).
inline Graph gen_random_tree(int n, std::uint64_t seed) {
    Graph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (int& x : prufer) x = pick(rng);

    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : prufer) ++deg[static_cast<std::size_t>(x)];
    for (int x : prufer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (deg[static_cast<std::size_t>(leaf)] == 1) {
                g.add_edge(leaf, x);
                --deg[static_cast<std::size_t>(leaf)];
                --deg[static_cast<std::size_t>(x)];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) (a < 0 ? a : b) = v;
    g.add_edge(a, b);
    return g;
}

// --- traversal helpers -------------------------------------------------

inline VertexSet component_of(const Graph& g, int start) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

inline bool is_connected(const Graph& g) { return component_of(g, 0) == g.vertices(); }

// Length of a shortest cycle; 0 when acyclic.
inline int girth(const Graph& g) {
    int n = g.order();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        std::vector<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

// --- edge-list text format ----------------------------------------------
// First line: order n. Each further line: "u v" with 0 <= u,v < n, u != v.
// Duplicate edges collapse; line order is irrelevant. Blank lines and
// '#' comments are ignored.

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    int lineno = 0;
    Graph g(1);
    while (std::getline(in, line)) {
        ++lineno;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (n < 0) {
            std::size_t used = 0;
            try {
                n = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw parse_error(parse_error::Kind::bad_token,
                                  "expected order on line 1, got '" + tok + "'");
            }
            if (used != tok.size())
                throw parse_error(parse_error::Kind::bad_token,
                                  "expected order on line 1, got '" + tok + "'");
            if (n < 1 || n > kMaxOrder)
                throw parse_error(parse_error::Kind::order_out_of_range,
                                  "order " + std::to_string(n) + " outside 1.." +
                                      std::to_string(kMaxOrder));
            std::string extra;
            if (ls >> extra)
                throw parse_error(parse_error::Kind::bad_token,
                                  "unexpected token '" + extra + "' after order");
            g = Graph(n);
            continue;
        }
        int uv[2];
        for (int i = 0; i < 2; ++i) {
            if (i == 1 && !(ls >> tok))
                throw parse_error(parse_error::Kind::bad_token,
                                  "line " + std::to_string(lineno) + ": missing endpoint");
            std::size_t used = 0;
            try {
                uv[i] = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw parse_error(parse_error::Kind::bad_token,
                                  "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
        }
        std::string extra;
        if (ls >> extra)
            throw parse_error(parse_error::Kind::bad_token,
                              "line " + std::to_string(lineno) + ": unexpected token '" + extra + "'");
        if (uv[0] == uv[1])
            throw parse_error(parse_error::Kind::loop_edge,
                              "line " + std::to_string(lineno) + ": loop at vertex " +
                                  std::to_string(uv[0]));
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
            throw parse_error(parse_error::Kind::vertex_out_of_range,
                              "line " + std::to_string(lineno) + ": endpoint outside 0.." +
                                  std::to_string(n - 1));
        g.add_edge(uv[0], uv[1]);
    }
    if (n < 0) throw parse_error(parse_error::Kind::bad_header, "empty edge-list input");
    return g;
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace faircoal
