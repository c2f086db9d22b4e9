#pragma once

// The bound calculus around T(C<=4; n): the Dutton-Brigham bound, the
// standard recursive argument, the two-sided path-count estimates, the
// virtual-degree-sequence machinery with its deviation decomposition,
// and the table of known values and ranges. All arithmetic is exact;
// the only non-integer quantities in the source material are
// half-integers, and every comparison here is arranged to stay in
// integers (tests double both sides where halves occur).

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "g5x/graph.hpp"

namespace g5x {

inline long long isqrt(long long x) {
    if (x < 0) throw std::invalid_argument("isqrt: negative input");
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

/// floor(0.5 * n * sqrt(n - 1)), the theoretical upper bound on the
/// size of a girth-5 graph of order n, computed without floating-point
/// error: floor(sqrt(n^2 (n-1)) / 2).
inline long long dutton_brigham(long long n) {
    if (n < 1) throw std::invalid_argument("dutton_brigham: order must be positive");
    return isqrt(n * n * (n - 1)) / 2;
}

enum class TableProvenance { table1, table2, table3, computed };

struct TuranEntry {
    int n = 0;
    int lower = 0;
    int upper = 0;
    TableProvenance provenance = TableProvenance::computed;
    bool fully_proven = true;

    bool exact() const { return lower == upper; }
};

/// Known exact values and [lower, upper] ranges of T(C<=4; n).
class TuranTable {
public:
    bool has(int n) const { return entries_.count(n) > 0; }

    const TuranEntry& entry(int n) const {
        auto it = entries_.find(n);
        if (it == entries_.end()) throw std::out_of_range("TuranTable: no entry for n=" + std::to_string(n));
        return it->second;
    }

    int lower(int n) const { return entry(n).lower; }
    int upper(int n) const { return entry(n).upper; }

    void set(const TuranEntry& e) {
        if (e.lower > e.upper) throw std::invalid_argument("TuranTable: lower exceeds upper");
        entries_[e.n] = e;
    }

    std::vector<TuranEntry> rows() const {
        std::vector<TuranEntry> out;
        out.reserve(entries_.size());
        for (const auto& [n, e] : entries_) out.push_back(e);
        return out;
    }

private:
    std::map<int, TuranEntry> entries_;
};

/// The published values: exact for n <= 32 and 40 <= n <= 50, ranges
/// for 33..39. The intermediate ranges rest partly on announced but
/// unproven values, hence fully_proven = false on those rows.
inline TuranTable known_table() {
    static const int low[] = {0,  1,  2,  3,  5,  6,  8,  10, 12, 15, 16, 18, 21, 23, 26, 28,
                              31, 34, 38, 41, 44, 47, 50, 54, 57, 61, 65, 68, 72, 76, 80, 85};
    static const int high_n0 = 40;
    static const int high[] = {120, 124, 129, 134, 139, 145, 150, 156, 162, 168, 175};
    static const int mid_lo[] = {87, 90, 95, 99, 104, 109, 114};
    static const int mid_hi[] = {89, 93, 98, 103, 107, 112, 116};

    TuranTable t;
    for (int n = 1; n <= 32; ++n)
        t.set({n, low[n - 1], low[n - 1], TableProvenance::table1, true});
    for (int n = 33; n <= 39; ++n)
        t.set({n, mid_lo[n - 33], mid_hi[n - 33], TableProvenance::table3, false});
    for (int n = high_n0; n <= 50; ++n)
        t.set({n, high[n - high_n0], high[n - high_n0], TableProvenance::table2, true});
    return t;
}

/// Largest e admitted by the standard argument
///   floor(2e/n) >= delta >= e - T(C<=4; n-1),
/// scanning down from the Dutton-Brigham bound. Uses the table's upper
/// value for n-1.
inline int standard_upper(int n, const TuranTable& table) {
    if (n < 2) throw std::invalid_argument("standard_upper: need n >= 2");
    int prev = table.upper(n - 1);
    for (long long e = dutton_brigham(n); e > 0; --e) {
        if (2 * e / n >= e - prev) return static_cast<int>(e);
    }
    return 0;
}

/// e(G) <= T(C<=4; n - Delta - 1) + n - 1 (delete a closed
/// neighbourhood of a maximum-degree vertex).
inline int neighbourhood_deletion_upper(int n, int delta_max, const TuranTable& table) {
    return table.upper(n - delta_max - 1) + n - 1;
}

struct PathCountBounds {
    long long lower = 0;
    long long upper = 0;
};

inline long long choose2(long long x) { return x * (x - 1) / 2; }

/// The two-sided estimate for p(U, W) over disjoint U, W with
/// z = |E(U, W)| and e_w = e(G[W]), evaluated verbatim for any natural
/// r and s; individual terms may be negative, the bounds still hold.
inline PathCountBounds path_count_bounds(long long size_u, long long size_w, long long z,
                                      long long e_w, int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("path_count_bounds: r, s must be natural");
    PathCountBounds b;
    b.lower = ((r + 1) * size_u - z) * choose2(r) + (z - r * size_u) * choose2(r + 1);
    b.upper = choose2(size_w) - e_w - ((s + 1) * size_w - 2 * e_w) * choose2(s) -
              (2 * e_w - s * size_w) * choose2(s + 1);
    return b;
}

/// A virtual degree sequence: any vector t with t.u = n and t.w = 2e.
/// Entries may be negative. All instances arising here are integral,
/// so components are exact integers.
struct VirtualDegreeSequence {
    std::vector<long long> t;  // t[i] = multiplicity of degree i

    long long dot_u() const {
        long long s = 0;
        for (long long x : t) s += x;
        return s;
    }
    long long dot_w() const {
        long long s = 0;
        for (std::size_t i = 0; i < t.size(); ++i) s += static_cast<long long>(i) * t[i];
        return s;
    }
    long long at(int i) const {
        return i >= 0 && static_cast<std::size_t>(i) < t.size() ? t[static_cast<std::size_t>(i)] : 0;
    }

    friend bool operator==(const VirtualDegreeSequence& a, const VirtualDegreeSequence& b) {
        std::size_t n = std::max(a.t.size(), b.t.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.at(static_cast<int>(i)) != b.at(static_cast<int>(i))) return false;
        return true;
    }
};

// linear functionals of the (6,7) split
inline long long vds_n_lo(const VirtualDegreeSequence& s) {  // n'
    long long out = 0;
    for (int i = 0; i <= 6; ++i) out += s.at(i);
    return out;
}
inline long long vds_n_hi(const VirtualDegreeSequence& s) {  // n''
    long long out = 0;
    for (std::size_t i = 7; i < s.t.size(); ++i) out += s.t[i];
    return out;
}
inline long long vds_a(const VirtualDegreeSequence& s) {
    long long out = 0;
    for (int i = 0; i <= 5; ++i) out += (6 - i) * s.at(i);
    return out;
}
inline long long vds_b(const VirtualDegreeSequence& s) {
    long long out = 0;
    for (std::size_t i = 8; i < s.t.size(); ++i) out += (static_cast<long long>(i) - 7) * s.t[i];
    return out;
}

/// The globally most even degree distribution for (n, e): mass only on
/// k = floor(2e/n) and k+1.
inline VirtualDegreeSequence s_bar(int n, long long e) {
    if (n < 1 || e < 0) throw std::invalid_argument("s_bar: bad parameters");
    long long k = 2 * e / n;
    long long hi = 2 * e - k * n;  // count at degree k+1
    VirtualDegreeSequence s;
    s.t.assign(static_cast<std::size_t>(k) + 2, 0);
    s.t[static_cast<std::size_t>(k)] = n - hi;
    s.t[static_cast<std::size_t>(k) + 1] = hi;
    return s;
}

/// Coefficients of s(G) - s_bar over the elementary deviations, all
/// non-negative: the counts n_i outside the pivot band, plus
/// a = sum (k - i) n_i over i < k and b = sum (i - k - 1) n_i over
/// i > k + 1, where (k, k+1) is the pivot.
struct DeviationDecomposition {
    int pivot = 6;                        // k: the lower pivot degree
    std::map<int, long long> outer;      // n_i for i <= k-2 and i >= k+3
    long long a = 0;
    long long b = 0;

    /// Reassemble s_bar + sum of coefficient * elementary deviation.
    VirtualDegreeSequence reconstruct(int n, long long e) const {
        VirtualDegreeSequence s = s_bar(n, e);
        int k = pivot;
        std::size_t need = static_cast<std::size_t>(k) + 3;
        for (const auto& [i, c] : outer) need = std::max(need, static_cast<std::size_t>(i) + 1);
        if (s.t.size() < need) s.t.resize(need, 0);

        // d_{k-1} = (..., 1, -2, 1, ...) at (k-1, k, k+1), coefficient a
        s.t[static_cast<std::size_t>(k - 1)] += a;
        s.t[static_cast<std::size_t>(k)] -= 2 * a;
        s.t[static_cast<std::size_t>(k + 1)] += a;
        // d_{k+2} at (k, k+1, k+2), coefficient b
        s.t[static_cast<std::size_t>(k)] += b;
        s.t[static_cast<std::size_t>(k + 1)] -= 2 * b;
        s.t[static_cast<std::size_t>(k + 2)] += b;
        for (const auto& [i, c] : outer) {
            if (i < k - 1) {
                // d_i: 1 at i, -(k-i) at k-1, (k-1-i) at k
                s.t[static_cast<std::size_t>(i)] += c;
                s.t[static_cast<std::size_t>(k - 1)] -= (k - i) * c;
                s.t[static_cast<std::size_t>(k)] += (k - 1 - i) * c;
            } else {
                // d_i for i > k+2: (i-k-2) at k+1, -(i-k-1) at k+2, 1 at i
                s.t[static_cast<std::size_t>(k + 1)] += (i - k - 2) * c;
                s.t[static_cast<std::size_t>(k + 2)] -= (i - k - 1) * c;
                s.t[static_cast<std::size_t>(i)] += c;
            }
        }
        return s;
    }
};

/// Decompose a degree sequence against the pivot pair
/// (pivot, pivot+1); the sequence's own (n, 2e) must put floor(2e/n)
/// in the pivot band, otherwise the decomposition identity cannot
/// hold and the input is rejected.
inline DeviationDecomposition decompose(const DegreeSequence& s, int pivot = 6) {
    for (int c : s.count)
        if (c < 0) throw std::invalid_argument("decompose: negative count");
    int n = s.order();
    if (n == 0) throw std::invalid_argument("decompose: empty sequence");
    long long two_e = s.degree_sum();
    if (two_e % 2 != 0) throw std::invalid_argument("decompose: odd degree sum");
    // s_bar must be supported on {pivot, pivot+1}
    long long k = two_e / n;
    if (!(k == pivot || two_e == static_cast<long long>(pivot + 1) * n))
        throw std::invalid_argument("decompose: sequence is not consistent with the pivot");

    DeviationDecomposition d;
    d.pivot = pivot;
    for (std::size_t i = 0; i < s.count.size(); ++i) {
        int deg = static_cast<int>(i);
        long long c = s.count[i];
        if (c == 0) continue;
        if (deg <= pivot - 1) d.a += (pivot - deg) * c;
        if (deg >= pivot + 2) d.b += (deg - pivot - 1) * c;
        if (deg <= pivot - 2 || deg >= pivot + 3) d.outer[deg] = c;
    }

    // the decomposition is an identity; verify the reconstruction
    VirtualDegreeSequence expect;
    expect.t.assign(s.count.size(), 0);
    for (std::size_t i = 0; i < s.count.size(); ++i) expect.t[i] = s.count[i];
    if (!(d.reconstruct(n, two_e / 2) == expect))
        throw std::logic_error("decompose: reconstruction mismatch");
    return d;
}

/// The summary statistics of the degree split at the (6,7) pivot:
/// n' = |V_{<=6}|, n'' = |V_{>=7}|, z = |E(V', V'')|,
/// a = sum over V' of (6 - deg), b = sum over V'' of (deg - 7),
/// f = 20 - n'', e' = e(G[V']), e'' = e(G[V'']).
struct AbfStats {
    int n_lo = 0, n_hi = 0;
    long long z = 0, a = 0, b = 0, f = 0;
    long long e_lo = 0, e_hi = 0;
};

inline AbfStats abf_stats(const Graph& g) {
    VertexSet lo = degree_class(g, [](int d) { return d <= 6; });
    VertexSet hi = g.vertex_set() - lo;
    AbfStats st;
    st.n_lo = lo.count();
    st.n_hi = hi.count();
    st.z = edges_between(g, lo, hi);
    for (int v : lo) st.a += 6 - g.degree(v);
    for (int v : hi) st.b += g.degree(v) - 7;
    st.f = 20 - st.n_hi;
    st.e_lo = induced_subgraph(g, lo).graph.size();
    st.e_hi = induced_subgraph(g, hi).graph.size();
    // degree-sum consistency: z = 7 n'' + b - 2 e''
    if (st.z != 7 * st.n_hi + st.b - 2 * st.e_hi)
        throw std::logic_error("abf_stats: edge accounting mismatch");
    return st;
}

struct InequalityCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool satisfied = false;  // the evaluated relation, recorded with both sides
};

struct AuditReport {
    AbfStats stats;
    std::vector<InequalityCheck> checks;

    bool all_satisfied() const {
        for (const auto& c : checks)
            if (!c.satisfied) return false;
        return true;
    }
};

/// Evaluate the (45, 145) inequality battery on a concrete graph.
/// These are theorems, so a violation on a valid input signals an
/// implementation defect, not an interesting graph.
inline AuditReport audit_inequalities_45(const Graph& g) {
    if (g.order() != 45 || g.size() != 145 || !girth_at_least_5(g))
        throw std::invalid_argument("audit_inequalities_45: need a girth-5 graph with n=45, e=145");
    AuditReport r;
    r.stats = abf_stats(g);
    const auto& st = r.stats;
    int delta_max = degree_sequence(g).max_degree();

    r.checks.push_back({"z >= 100 + 2b", st.z, 100 + 2 * st.b, st.z >= 100 + 2 * st.b});
    r.checks.push_back({"n'' <= 28", st.n_hi, 28, st.n_hi <= 28});
    long long rhs32 = (st.n_hi - 20) * (st.n_hi - 30);
    r.checks.push_back({"11b <= (n''-20)(n''-30)", 11 * st.b, rhs32, 11 * st.b <= rhs32});
    r.checks.push_back({"a >= 6*Delta - 44", st.a, 6LL * delta_max - 44, st.a >= 6LL * delta_max - 44});
    long long ceil_b = st.n_hi > 0 ? (st.b + st.n_hi - 1) / st.n_hi : 0;
    r.checks.push_back({"Delta >= 7 + ceil(b/n'')", delta_max, 7 + ceil_b, delta_max >= 7 + ceil_b});
    r.checks.push_back({"f >= 0", st.f, 0, st.f >= 0});
    r.checks.push_back({"n'' + b - a == 20", st.n_hi + st.b - st.a, 20, st.n_hi + st.b - st.a == 20});
    return r;
}

/// Maximum number of 3-sets of an n5-set pairwise sharing at most one
/// element: floor(n5/3 * floor((n5-1)/2)) - eps, eps = 1 iff
/// n5 = 5 (mod 6).
inline long long triple_packing_bound(long long n5) {
    if (n5 < 0) throw std::invalid_argument("triple_packing_bound: negative input");
    long long eps = n5 % 6 == 5 ? 1 : 0;
    return n5 * ((n5 - 1) / 2) / 3 - eps;
}

}  // namespace g5x
