// Fair dominating sets: recognition, the minimum-size invariants
// (gamma, gamma_f, fd_i), minimum fair dominating subsets, and the fair
// domatic number with witness partition.
//
// A set D is fair dominating when every vertex outside D has the same
// number k >= 1 of neighbors in D; D = V qualifies vacuously.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "faircoal/graph.hpp"
#include "faircoal/partition.hpp"

namespace faircoal {

struct FdStatus {
    enum class Kind { not_dominating, not_fair, fair, fair_vacuous };

    Kind kind;
    int k = 0;           // fairness constant, set for Kind::fair
    int witness_a = -1;  // undominated vertex / first vertex of an uneven pair
    int witness_b = -1;  // second vertex of an uneven pair
    int count_a = 0;     // neighbor counts behind a not_fair verdict
    int count_b = 0;

    bool is_fd() const { return kind == Kind::fair || kind == Kind::fair_vacuous; }
};

inline int domination_count(const Graph& g, VertexSet d, int v) {
    return (g.neighbors(v) & d).count();
}

// Lean recognition kernel: k >= 1 when d is a kFD-set, 0 when d = V, -1 otherwise.
inline int fair_constant(const Graph& g, VertexSet d) {
    VertexSet outside = g.vertices() - d;
    if (outside.empty()) return 0;
    int k = -1;
    for (int v : outside) {
        int c = (g.neighbors(v) & d).count();
        if (c == 0) return -1;
        if (k < 0)
            k = c;
        else if (c != k)
            return -1;
    }
    return k;
}

inline bool is_fd_set(const Graph& g, VertexSet d) { return fair_constant(g, d) >= 0; }

inline FdStatus fd_status(const Graph& g, VertexSet d) {
    VertexSet outside = g.vertices() - d;
    if (outside.empty()) return {FdStatus::Kind::fair_vacuous};
    // an undominated vertex beats an uneven pair as the reported verdict
    for (int v : outside)
        if ((g.neighbors(v) & d).count() == 0) return {FdStatus::Kind::not_dominating, 0, v};
    int first = outside.first();
    int k = (g.neighbors(first) & d).count();
    for (int v : outside) {
        int c = (g.neighbors(v) & d).count();
        if (c != k) {
            FdStatus s{FdStatus::Kind::not_fair};
            s.witness_a = first;
            s.witness_b = v;
            s.count_a = k;
            s.count_b = c;
            return s;
        }
    }
    FdStatus s{FdStatus::Kind::fair};
    s.k = k;
    return s;
}

namespace detail {

// Visit subsets of `universe` by ascending cardinality, lexicographic within
// each size; stops at the first subset accepted by the predicate.
template <typename Pred>
std::optional<VertexSet> first_subset(const std::vector<int>& universe, Pred&& accept) {
    int m = static_cast<int>(universe.size());
    for (int size = 1; size <= m; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet s;
            for (int i : idx) s.add(universe[static_cast<std::size_t>(i)]);
            if (accept(s)) return s;
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline bool is_dominating(const Graph& g, VertexSet d) {
    for (int v : g.vertices() - d)
        if (!g.neighbors(v).intersects(d)) return false;
    return true;
}

inline int gamma(const Graph& g) {
    std::vector<int> all = g.vertices().to_vector();
    auto d = detail::first_subset(all, [&](VertexSet s) { return is_dominating(g, s); });
    return d ? d->count() : g.order();  // V always dominates, so d is engaged
}

inline VertexSet gamma_f_witness(const Graph& g) {
    std::vector<int> all = g.vertices().to_vector();
    auto d = detail::first_subset(all, [&](VertexSet s) { return is_fd_set(g, s); });
    return *d;  // V is vacuously fair dominating
}

inline int gamma_f(const Graph& g) { return gamma_f_witness(g).count(); }

// Minimum size of an iFD-set; V is an iFD-set for every i vacuously, so a
// value always exists for the nonempty graphs this library admits.
inline int fd_i(const Graph& g, int i) {
    if (i < 1) throw std::invalid_argument("fairness constant must be >= 1");
    std::vector<int> all = g.vertices().to_vector();
    auto d = detail::first_subset(all, [&](VertexSet s) {
        int k = fair_constant(g, s);
        return k == 0 || k == i;
    });
    return d->count();
}

// Minimum-cardinality fair dominating subset of s, which is therefore a
// minimal one: no proper subset can be fair dominating. Fair domination is
// not monotone, so minimality by single-vertex removal would not give that.
inline std::optional<VertexSet> min_fd_subset(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("min_fd_subset needs a nonempty set");
    std::vector<int> members = s.to_vector();
    return detail::first_subset(members, [&](VertexSet c) { return is_fd_set(g, c); });
}

struct FairDomaticResult {
    int value = 1;
    Partition witness;
};

namespace detail {

// Branch and bound over restricted-growth assignments. Classes only grow
// along a branch, so once a vertex and all its neighbors are assigned its
// neighbor count toward every other class is frozen; a class whose frozen
// counts are uneven or zero can never end up fair dominating, and once any
// vertex is settled no freshly opened class can dominate it.
struct DomaticSearch {
    const Graph& g;
    int n;
    std::vector<int> settle_depth;   // assigning vertex d settles u when settle_depth[u] == d
    std::vector<int> assigned_class;
    std::vector<VertexSet> classes;
    // per-class frozen-count requirement: -2 none, -1 dead, k >= 1 required
    std::vector<int> req;
    int settled_count = 0;
    int best = 0;
    std::vector<VertexSet> best_classes;

    explicit DomaticSearch(const Graph& graph) : g(graph), n(graph.order()) {
        settle_depth.resize(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            int last = u;
            for (int w : g.neighbors(u)) last = std::max(last, w);
            settle_depth[static_cast<std::size_t>(u)] = last;
        }
        assigned_class.assign(static_cast<std::size_t>(n), -1);
    }

    void run() {
        dfs(0);
    }

    void dfs(int v) {
        int k = static_cast<int>(classes.size());
        if (v == n) {
            if (k > best) {
                best = k;
                best_classes = classes;
            }
            return;
        }
        if (k + (n - v) <= best) return;
        bool may_open = settled_count == 0;  // a new class cannot dominate a settled vertex
        for (int c = 0; c < k + (may_open ? 1 : 0); ++c) {
            if (c == k) {
                classes.push_back(VertexSet::single(v));
                req.push_back(-2);
            } else {
                classes[static_cast<std::size_t>(c)].add(v);
            }
            assigned_class[static_cast<std::size_t>(v)] = c;

            std::vector<std::pair<int, int>> undo;  // (class, previous req)
            bool dead = false;
            int newly_settled = 0;
            for (int u = 0; u < n && !dead; ++u) {
                if (settle_depth[static_cast<std::size_t>(u)] != v) continue;
                ++newly_settled;
                int cu = assigned_class[static_cast<std::size_t>(u)];
                int kk = static_cast<int>(classes.size());
                for (int i = 0; i < kk; ++i) {
                    if (i == cu) continue;
                    int cnt = (g.neighbors(u) & classes[static_cast<std::size_t>(i)]).count();
                    int& r = req[static_cast<std::size_t>(i)];
                    int old = r;
                    if (cnt == 0)
                        r = -1;
                    else if (r == -2)
                        r = cnt;
                    else if (r >= 1 && r != cnt)
                        r = -1;
                    if (r != old) undo.emplace_back(i, old);
                    if (r == -1) {
                        dead = true;
                        break;
                    }
                }
            }
            settled_count += newly_settled;

            if (!dead) dfs(v + 1);

            settled_count -= newly_settled;
            for (auto it = undo.rbegin(); it != undo.rend(); ++it)
                req[static_cast<std::size_t>(it->first)] = it->second;
            assigned_class[static_cast<std::size_t>(v)] = -1;
            if (c == k) {
                classes.pop_back();
                req.pop_back();
            } else {
                classes[static_cast<std::size_t>(c)].remove(v);
            }
        }
    }
};

}  // namespace detail

// Exact fair domatic number with a witness partition into fair dominating
// sets. {V} always qualifies, so the value is at least 1.
inline FairDomaticResult fair_domatic_number(const Graph& g) {
    detail::DomaticSearch search(g);
    search.run();
    FairDomaticResult out;
    out.value = search.best;
    out.witness.classes = search.best_classes;
    return out;
}

}  // namespace faircoal
