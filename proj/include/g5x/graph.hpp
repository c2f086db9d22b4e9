#pragma once

// Bitset-backed simple-graph kernel for graphs on at most 64 vertices,
// with the counting primitives used throughout the girth-5 machinery:
// second degrees, radius-2 balls, 3-vertex path counters, and induced
// subgraph extraction. One machine word per adjacency row keeps every
// counter a handful of popcounts.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g5x {

/// Subset of {0, ..., 63} as a single machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    /// {0, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    VertexSet& insert(int v) {
        bits_ |= std::uint64_t{1} << v;
        return *this;
    }
    VertexSet& erase(int v) {
        bits_ &= ~(std::uint64_t{1} << v);
        return *this;
    }

    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

    /// Iterates set members in increasing order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        friend bool operator!=(iterator a, iterator b) { return a.rest_ != b.rest_; }

    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertex ids 0..n-1, n <= 64.
/// Adjacency is symmetric and irreflexive by construction. Graphs are
/// treated as immutable once built; mutation is limited to the
/// construction phase of whoever owns the object.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;

    explicit Graph(int order) : n_(order) {
        if (order < 0 || order > kMaxOrder)
            throw std::invalid_argument("Graph: order must be in [0, 64]");
    }

    static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(order);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }

    /// Number of edges.
    int size() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return neighbourhood_[u].contains(v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
        if (neighbourhood_[u].contains(v)) return;
        neighbourhood_[u].insert(v);
        neighbourhood_[v].insert(u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (!neighbourhood_[u].contains(v)) return;
        neighbourhood_[u].erase(v);
        neighbourhood_[v].erase(u);
        --m_;
    }

    /// S(v), the open neighbourhood.
    VertexSet neighbourhood(int v) const {
        check_vertex(v);
        return neighbourhood_[v];
    }

    /// B(v) = S(v) + v, the closed neighbourhood.
    VertexSet closed_neighbourhood(int v) const { return neighbourhood(v) | VertexSet::single(v); }

    int degree(int v) const { return neighbourhood(v).count(); }

    VertexSet vertex_set() const { return VertexSet::first_n(n_); }

    /// Same graph plus one new vertex (id = old order) adjacent to `back`.
    Graph extended(VertexSet back) const {
        if (n_ >= kMaxOrder) throw std::invalid_argument("Graph: capacity exceeded");
        if (!back.is_subset_of(vertex_set()))
            throw std::invalid_argument("Graph: back-neighbours out of range");
        Graph g(*this);
        g.n_ = n_ + 1;
        int w = n_;
        for (int u : back) {
            g.neighbourhood_[u].insert(w);
            g.neighbourhood_[w].insert(u);
            ++g.m_;
        }
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (!(a.neighbourhood_[v] == b.neighbourhood_[v])) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex id out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::array<VertexSet, kMaxOrder> neighbourhood_{};
};

/// True iff the graph has no 3- or 4-cycle: every adjacent pair has zero
/// common neighbours and every non-adjacent pair has at most one.
inline bool girth_at_least_5(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u) {
        VertexSet nu = g.neighbourhood(u);
        for (int v = u + 1; v < n; ++v) {
            int common = (nu & g.neighbourhood(v)).count();
            if (nu.contains(v)) {
                if (common != 0) return false;  // triangle
            } else if (common > 1) {
                return false;  // 4-cycle
            }
        }
    }
    return true;
}

/// Exact girth via BFS from every vertex; nullopt for acyclic graphs.
/// Not used on hot paths, only for reporting.
inline std::optional<int> girth(const Graph& g) {
    int n = g.order();
    int best = -1;
    std::array<int, Graph::kMaxOrder> dist{};
    std::array<int, Graph::kMaxOrder> parent{};
    std::array<int, Graph::kMaxOrder> queue{};
    for (int root = 0; root < n; ++root) {
        for (int i = 0; i < n; ++i) dist[i] = -1;
        dist[root] = 0;
        parent[root] = -1;
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            int x = queue[head++];
            for (int y : g.neighbourhood(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue[tail++] = y;
                } else if (y != parent[x]) {
                    // non-tree edge closes a cycle through the BFS tree
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

/// Second degree: sum of deg(w) over the neighbours w of v.
inline int deg2(const Graph& g, int v) {
    int total = 0;
    for (int w : g.neighbourhood(v)) total += g.degree(w);
    return total;
}

/// B(v; 2), the radius-2 ball around v. Always contains v itself.
inline VertexSet ball2(const Graph& g, int v) {
    VertexSet out = VertexSet::single(v);
    if (v < 0 || v >= g.order()) throw std::out_of_range("ball2: vertex id out of range");
    for (int w : g.neighbourhood(v)) out |= g.closed_neighbourhood(w);
    return out;
}

/// Ordered 3-vertex paths (a, b, c) with a in w1, b in w2, c in w3,
/// a-b and b-c edges, and a != c. Paths, not walks.
inline long long p3_count(const Graph& g, VertexSet w1, VertexSet w2, VertexSet w3) {
    VertexSet full = g.vertex_set();
    w1 &= full;
    w2 &= full;
    w3 &= full;
    long long total = 0;
    for (int b : w2) {
        VertexSet nb = g.neighbourhood(b);
        long long left = (nb & w1).count();
        long long right = (nb & w3).count();
        long long both = (nb & w1 & w3).count();
        total += left * right - both;  // remove a == c coincidences
    }
    return total;
}

/// p(U, W) = p3(W, U, W) / 2: unordered 3-vertex paths with middle vertex
/// in u and both end vertices in w.
inline long long p_count(const Graph& g, VertexSet u, VertexSet w) {
    return p3_count(g, w, u, w) / 2;
}

/// |E(U, W)| for disjoint U, W.
inline int edges_between(const Graph& g, VertexSet u, VertexSet w) {
    if (u.intersects(w)) throw std::invalid_argument("edges_between: sets must be disjoint");
    VertexSet full = g.vertex_set();
    u &= full;
    w &= full;
    int total = 0;
    for (int v : u) total += (g.neighbourhood(v) & w).count();
    return total;
}

/// Induced subgraph on the complement of a deleted set, with the vertex
/// relabelling that compaction applies.
struct InducedSubgraph {
    Graph graph;
    std::array<int, Graph::kMaxOrder> old_to_new;  // -1 for deleted vertices
    std::array<int, Graph::kMaxOrder> new_to_old;
};

inline InducedSubgraph delete_vertices(const Graph& g, VertexSet s) {
    s &= g.vertex_set();
    InducedSubgraph out;
    out.old_to_new.fill(-1);
    out.new_to_old.fill(-1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        out.old_to_new[v] = next;
        out.new_to_old[next] = v;
        ++next;
    }
    Graph h(next);
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        for (int w : g.neighbourhood(v)) {
            if (w > v && !s.contains(w)) h.add_edge(out.old_to_new[v], out.old_to_new[w]);
        }
    }
    out.graph = std::move(h);
    return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
    return delete_vertices(g, g.vertex_set() - keep);
}

/// Vertices whose degree satisfies the predicate, e.g. V' and V'' splits.
template <class Pred>
VertexSet degree_class(const Graph& g, Pred pred) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (pred(g.degree(v))) out.insert(v);
    return out;
}

inline VertexSet vertices_with_degree(const Graph& g, int d) {
    return degree_class(g, [d](int x) { return x == d; });
}

/// Degree sequence s(G) = (n_0, n_1, ...): count[i] vertices of degree i.
struct DegreeSequence {
    std::vector<int> count;

    int order() const {
        int total = 0;
        for (int c : count) total += c;
        return total;
    }

    /// Sum of i * n_i, i.e. 2e.
    long long degree_sum() const {
        long long total = 0;
        for (std::size_t i = 0; i < count.size(); ++i) total += static_cast<long long>(i) * count[i];
        return total;
    }

    int min_degree() const {
        for (std::size_t i = 0; i < count.size(); ++i)
            if (count[i] > 0) return static_cast<int>(i);
        return 0;
    }

    int max_degree() const {
        for (std::size_t i = count.size(); i-- > 0;)
            if (count[i] > 0) return static_cast<int>(i);
        return 0;
    }

    friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
        std::size_t n = std::max(a.count.size(), b.count.size());
        for (std::size_t i = 0; i < n; ++i) {
            int x = i < a.count.size() ? a.count[i] : 0;
            int y = i < b.count.size() ? b.count[i] : 0;
            if (x != y) return false;
        }
        return true;
    }
};

inline DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence s;
    int maxdeg = 0;
    for (int v = 0; v < g.order(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
    s.count.assign(static_cast<std::size_t>(maxdeg) + 1, 0);
    for (int v = 0; v < g.order(); ++v) ++s.count[static_cast<std::size_t>(g.degree(v))];
    return s;
}

/// Connected components as vertex sets, in order of smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int v = 0; v < g.order(); ++v) {
        if (seen.contains(v)) continue;
        VertexSet comp = VertexSet::single(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int x : frontier) next |= g.neighbourhood(x);
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(comp);
        seen |= comp;
    }
    return out;
}

/// BFS distance; -1 if u and v are in different components.
inline int graph_distance(const Graph& g, int u, int v) {
    if (u == v) return 0;
    std::array<int, Graph::kMaxOrder> dist{};
    for (int i = 0; i < g.order(); ++i) dist[i] = -1;
    dist[u] = 0;
    std::array<int, Graph::kMaxOrder> queue{};
    int head = 0, tail = 0;
    queue[tail++] = u;
    while (head < tail) {
        int x = queue[head++];
        for (int y : g.neighbourhood(x)) {
            if (dist[y] >= 0) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            queue[tail++] = y;
        }
    }
    return -1;
}

inline bool is_regular(const Graph& g, int k) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

}  // namespace g5x
