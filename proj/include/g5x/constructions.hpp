#pragma once

// The Hoffman-Singleton graph with its explicit two-sided labeling
// (five pentagons, five pentagrams, shifted cross edges), the peeled
// extremal subgraphs of orders 40..49, and the order-46 claw removal.
//
// Vertex numbering is fixed so that peels and emitted files are
// deterministic: pentagon vertex c_i^(nu) gets id 5*nu + (i-1) and
// pentagram vertex d_{l,j} gets id 25 + 5*l + (j-1), indices i, j
// running 1..5 and interpreted modulo 5.

#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "g5x/graph.hpp"

namespace g5x {

struct HsName {
    bool pentagon = true;  // c-side if true, d-side (pentagram) if false
    int block = 0;         // nu (pentagon) or l (pentagram), 0..4
    int index = 1;         // i or j, 1..5

    std::string text() const {
        if (pentagon) return "c" + std::to_string(index) + "^(" + std::to_string(block) + ")";
        return "d(" + std::to_string(block) + "," + std::to_string(index) + ")";
    }
    friend bool operator==(const HsName&, const HsName&) = default;
};

/// Bijection between vertex ids 0..49 and the c/d names.
struct HsLabeling {
    static HsName name_of(int v) {
        if (v < 0 || v >= 50) throw std::out_of_range("HsLabeling: vertex id out of range");
        HsName n;
        n.pentagon = v < 25;
        int r = n.pentagon ? v : v - 25;
        n.block = r / 5;
        n.index = r % 5 + 1;
        return n;
    }
    static int vertex_of(const HsName& n) {
        if (n.block < 0 || n.block > 4 || n.index < 1 || n.index > 5)
            throw std::out_of_range("HsLabeling: name out of range");
        int base = n.pentagon ? 0 : 25;
        return base + 5 * n.block + (n.index - 1);
    }
};

namespace detail {
inline int wrap5(int x) { return (x - 1) % 5 + 1 + ((x - 1) % 5 < 0 ? 5 : 0); }
inline int c_vertex(int nu, int i) { return HsLabeling::vertex_of({true, nu, detail::wrap5(i)}); }
inline int d_vertex(int l, int j) { return HsLabeling::vertex_of({false, l, detail::wrap5(j)}); }
}  // namespace detail

struct HoffmanSingleton {
    Graph graph;
    HsLabeling labeling;
};

/// The Hoffman-Singleton graph: 50 vertices, 175 edges, 7-regular,
/// girth 5. Pentagon edges step by 1, pentagram edges step by 2, and
/// c_i^(nu) is joined to d_{l, i + nu*l mod 5}.
inline HoffmanSingleton hoffman_singleton() {
    using detail::c_vertex;
    using detail::d_vertex;
    Graph g(50);
    for (int nu = 0; nu < 5; ++nu)
        for (int i = 1; i <= 5; ++i) g.add_edge(c_vertex(nu, i), c_vertex(nu, i + 1));
    for (int l = 0; l < 5; ++l)
        for (int j = 1; j <= 5; ++j) g.add_edge(d_vertex(l, j), d_vertex(l, j + 2));
    for (int nu = 0; nu < 5; ++nu)
        for (int l = 0; l < 5; ++l)
            for (int i = 1; i <= 5; ++i) g.add_edge(c_vertex(nu, i), d_vertex(l, i + nu * l));
    return {g, HsLabeling{}};
}

/// The Petersen graph, presented as one pentagon, one pentagram, and
/// the five spokes (the induced subgraph of HS on pentagon 0 and
/// pentagram 0, relabelled to 0..9).
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

enum class HsPart { pentagons, pentagrams };

/// Which vertices to remove from HS: first a prefix of one 5-cycle,
/// then (only once the first cycle is fully removed) a prefix of a
/// 5-cycle of the opposite side. Removal follows the induced cycle, so
/// each removed vertex after the first is adjacent to the previous
/// one; this is what makes the intermediate sizes extremal.
struct PeelSpec {
    HsPart part = HsPart::pentagons;
    int cycle = 4;
    int count = 5;
    int second_cycle = -1;  // -1: no second peel
    int second_count = 0;
};

struct PeeledGraph {
    Graph graph;
    std::vector<HsName> names;  // name of each surviving vertex
    PeelSpec spec;

    int vertex_of(const HsName& n) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        return -1;
    }
};

namespace detail {
// Pentagon cycles run in index order; pentagram cycles (edges at index
// distance 2) run 1, 3, 5, 2, 4.
inline std::array<int, 5> cycle_removal_ids(HsPart part, int cycle) {
    std::array<int, 5> out{};
    if (part == HsPart::pentagons) {
        for (int k = 0; k < 5; ++k) out[k] = c_vertex(cycle, k + 1);
    } else {
        for (int k = 0; k < 5; ++k) out[k] = d_vertex(cycle, wrap5(1 + 2 * k));
    }
    return out;
}
}  // namespace detail

inline PeeledGraph peel(const PeelSpec& spec) {
    if (spec.cycle < 0 || spec.cycle > 4 || spec.count < 0 || spec.count > 5)
        throw std::invalid_argument("peel: first peel out of range");
    if (spec.second_count < 0 || spec.second_count > 5)
        throw std::invalid_argument("peel: second peel count out of range");
    if (spec.second_count > 0) {
        if (spec.count != 5) throw std::invalid_argument("peel: second peel requires a full first peel");
        if (spec.second_cycle < 0 || spec.second_cycle > 4)
            throw std::invalid_argument("peel: second peel cycle out of range");
    }

    VertexSet removed;
    auto first = detail::cycle_removal_ids(spec.part, spec.cycle);
    for (int k = 0; k < spec.count; ++k) removed.insert(first[k]);
    if (spec.second_count > 0) {
        HsPart other = spec.part == HsPart::pentagons ? HsPart::pentagrams : HsPart::pentagons;
        auto second = detail::cycle_removal_ids(other, spec.second_cycle);
        for (int k = 0; k < spec.second_count; ++k) removed.insert(second[k]);
    }

    auto hs = hoffman_singleton();
    auto sub = delete_vertices(hs.graph, removed);
    PeeledGraph out;
    out.graph = sub.graph;
    out.spec = spec;
    out.names.resize(static_cast<std::size_t>(sub.graph.order()));
    for (int v = 0; v < sub.graph.order(); ++v)
        out.names[static_cast<std::size_t>(v)] = HsLabeling::name_of(sub.new_to_old[v]);
    return out;
}

/// HS minus a claw K_{1,3}: the pentagon vertex c_1^(0) and three of
/// its pentagram neighbours d_{l,1} with distinct l. Order 46, size
/// 150, minimum degree 6.
inline Graph hs_minus_claw() {
    using detail::c_vertex;
    using detail::d_vertex;
    auto hs = hoffman_singleton();
    VertexSet claw = VertexSet::of(
        {c_vertex(0, 1), d_vertex(0, 1), d_vertex(1, 1), d_vertex(2, 1)});
    return delete_vertices(hs.graph, claw).graph;
}

/// The distance-3 classes of the order-45 peel: partition of V6 (the
/// pentagram side) into five 5-sets, the neighbour sets of the removed
/// pentagon's vertices. Every within-class pair is at distance 3; all
/// other pairs are at distance <= 2.
inline std::array<VertexSet, 5> distance3_classes(const PeeledGraph& g45) {
    const PeelSpec& s = g45.spec;
    if (s.part != HsPart::pentagons || s.count != 5 || s.second_count != 0 ||
        g45.graph.order() != 45 || g45.graph.size() != 145)
        throw std::invalid_argument("distance3_classes: input is not the labeled order-45 peel");
    int nu = s.cycle;
    std::array<VertexSet, 5> classes;
    for (int i = 1; i <= 5; ++i) {
        VertexSet cls;
        for (int l = 0; l < 5; ++l) {
            int v = g45.vertex_of({false, l, detail::wrap5(i + nu * l)});
            if (v < 0) throw std::logic_error("distance3_classes: labeling lost");
            cls.insert(v);
        }
        classes[static_cast<std::size_t>(i - 1)] = cls;
    }
    return classes;
}

/// An extremal girth-5 graph of order n for 40 <= n <= 50, of size
/// exactly the known maximum: HS itself at 50, peels elsewhere, and
/// the claw removal at 46.
inline Graph extremal_graph(int n) {
    if (n < 40 || n > 50) throw std::invalid_argument("extremal_graph: order must be in [40, 50]");
    if (n == 50) return hoffman_singleton().graph;
    if (n == 46) return hs_minus_claw();
    PeelSpec spec;
    if (n >= 45) {
        spec.count = 50 - n;
    } else {
        spec.count = 5;
        spec.second_cycle = 4;
        spec.second_count = 45 - n;
    }
    return peel(spec).graph;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::kMaxOrder)
        throw std::invalid_argument("disjoint_union: capacity exceeded");
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v : a.neighbourhood(u))
            if (v > u) g.add_edge(u, v);
    for (int u = 0; u < b.order(); ++u)
        for (int v : b.neighbourhood(u))
            if (v > u) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

/// True iff inserting edge (u, v) keeps the girth at least 5, i.e. the
/// endpoints are currently at distance >= 4.
inline bool edge_keeps_girth5(const Graph& g, int u, int v) {
    if (u == v || g.adjacent(u, v)) return false;
    VertexSet nu = g.neighbourhood(u);
    VertexSet nv = g.neighbourhood(v);
    if (nu.intersects(nv)) return false;  // distance 2
    for (int x : nu)
        if (g.neighbourhood(x).intersects(nv)) return false;  // distance 3
    return true;
}

/// Random girth-5 graph on n vertices: random admissible edge
/// insertions. `attempts` failed or successful picks bound the work.
template <class Rng>
Graph random_girth5_graph(Rng& rng, int n, int attempts) {
    Graph g(n);
    if (n < 2) return g;
    for (int t = 0; t < attempts; ++t) {
        int u = static_cast<int>(rng() % static_cast<unsigned long long>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned long long>(n));
        if (edge_keeps_girth5(g, u, v)) g.add_edge(u, v);
    }
    return g;
}

/// Random induced subgraph of HS (girth >= 5 for free).
template <class Rng>
Graph random_hs_subgraph(Rng& rng, int order) {
    if (order < 0 || order > 50) throw std::invalid_argument("random_hs_subgraph: bad order");
    static const Graph hs = hoffman_singleton().graph;
    std::array<int, 50> ids{};
    for (int i = 0; i < 50; ++i) ids[static_cast<std::size_t>(i)] = i;
    for (int i = 49; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<unsigned long long>(i + 1));
        std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
    VertexSet keep;
    for (int i = 0; i < order; ++i) keep.insert(ids[static_cast<std::size_t>(i)]);
    return induced_subgraph(hs, keep).graph;
}

}  // namespace g5x
