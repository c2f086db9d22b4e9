#pragma once

// Canonical forms by individualisation-refinement with backtracking.
// The canonical form is the minimum, over the leaves of the refinement
// tree, of a byte encoding of the relabelled adjacency matrix; two
// graphs get equal forms iff they are isomorphic. Automorphisms
// discovered from equal leaves prune sibling branches: a candidate in
// the same orbit (under automorphisms fixing the branch prefix) as an
// already explored sibling is skipped, and an in-flight branch is
// abandoned once such an automorphism turns up. That keeps highly
// symmetric inputs (the Hoffman-Singleton graph has 252000
// automorphisms) tractable without an external canonical-labelling
// dependency.

#include <algorithm>
#include <climits>
#include <cstring>
#include <stdexcept>
#include <string>

#include "g5x/graph.hpp"

namespace g5x {

struct CanonicalLabeling {
    std::string form;
    std::vector<int> new_to_old;
    std::vector<int> old_to_new;
};

namespace detail {

class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbourhood(v).bits();
        code_len_ = 1 + (n_ * (n_ - 1) / 2 + 7) / 8;
    }

    CanonicalLabeling run() {
        Part root;
        for (int i = 0; i < n_; ++i) root.vtx[i] = static_cast<std::uint8_t>(i);
        for (int i = 0; i < n_; ++i) root.last[i] = false;
        if (n_ > 0) root.last[n_ - 1] = true;

        if (n_ == 0) {
            CanonicalLabeling out;
            out.form.assign(1, '\0');
            return out;
        }

        dfs(root, 0);

        CanonicalLabeling out;
        out.form.assign(reinterpret_cast<const char*>(best_code_.data()),
                        static_cast<std::size_t>(code_len_));
        out.new_to_old.resize(static_cast<std::size_t>(n_));
        out.old_to_new.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            out.new_to_old[static_cast<std::size_t>(i)] = best_perm_[i];
            out.old_to_new[static_cast<std::size_t>(best_perm_[i])] = i;
        }
        return out;
    }

private:
    struct Part {
        std::array<std::uint8_t, 64> vtx;
        std::array<bool, 64> last;
    };

    // Equitable refinement: repeatedly split cells by the number of
    // neighbours in each cell, stable within cells. Purely a function
    // of the ordered partition, so it commutes with isomorphisms.
    void refine(Part& p) const {
        bool again = true;
        while (again) {
            again = false;
            std::uint64_t splitters[64];
            int nsplit = 0;
            for (int pos = 0; pos < n_;) {
                std::uint64_t mask = 0;
                int end = pos;
                while (true) {
                    mask |= std::uint64_t{1} << p.vtx[end];
                    if (p.last[end]) break;
                    ++end;
                }
                splitters[nsplit++] = mask;
                pos = end + 1;
            }
            for (int si = 0; si < nsplit; ++si) {
                std::uint64_t s = splitters[si];
                for (int pos = 0; pos < n_;) {
                    int end = pos;
                    while (!p.last[end]) ++end;
                    if (end > pos) {
                        int key[64];
                        for (int i = pos; i <= end; ++i)
                            key[i] = std::popcount(adj_[p.vtx[i]] & s);
                        // stable insertion sort of the slice by key
                        for (int i = pos + 1; i <= end; ++i) {
                            int kv = key[i];
                            std::uint8_t vv = p.vtx[i];
                            int j = i - 1;
                            while (j >= pos && key[j] > kv) {
                                key[j + 1] = key[j];
                                p.vtx[j + 1] = p.vtx[j];
                                --j;
                            }
                            key[j + 1] = kv;
                            p.vtx[j + 1] = vv;
                        }
                        for (int i = pos; i < end; ++i) {
                            if (key[i] != key[i + 1] && !p.last[i]) {
                                p.last[i] = true;
                                again = true;
                            }
                        }
                    }
                    pos = end + 1;
                }
            }
        }
    }

    void dfs(Part part, int depth) {
        refine(part);

        int cell_begin = -1;
        for (int pos = 0; pos < n_;) {
            int end = pos;
            while (!part.last[end]) ++end;
            if (end > pos) {
                cell_begin = pos;
                break;
            }
            pos = end + 1;
        }
        if (cell_begin < 0) {
            leaf(part, depth);
            return;
        }
        int cell_end = cell_begin;
        while (!part.last[cell_end]) ++cell_end;

        Level& lvl = levels_[depth];
        for (int i = 0; i < n_; ++i) lvl.uf[i] = static_cast<std::uint8_t>(i);
        lvl.nproc = 0;

        for (int idx = cell_begin; idx <= cell_end; ++idx) {
            int v = part.vtx[idx];
            bool dominated = false;
            for (int j = 0; j < lvl.nproc && !dominated; ++j)
                dominated = uf_find(lvl.uf, lvl.processed[j]) == uf_find(lvl.uf, v);
            if (dominated) continue;

            lvl.chosen = static_cast<std::uint8_t>(v);
            Part child = part;
            // move v to the front of the cell and split it off
            for (int i = idx; i > cell_begin; --i) child.vtx[i] = child.vtx[i - 1];
            child.vtx[cell_begin] = static_cast<std::uint8_t>(v);
            child.last[cell_begin] = true;

            dfs(child, depth + 1);

            lvl.processed[lvl.nproc++] = static_cast<std::uint8_t>(v);
            if (abort_depth_ < depth) return;       // an ancestor branch is redundant
            if (abort_depth_ == depth) abort_depth_ = INT_MAX;
        }
    }

    void leaf(const Part& part, int depth) {
        unsigned char code[1 + (64 * 63 / 2 + 7) / 8];
        std::memset(code, 0, static_cast<std::size_t>(code_len_));
        code[0] = static_cast<unsigned char>(n_);
        int bitpos = 0;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = adj_[part.vtx[i]];
            for (int j = i + 1; j < n_; ++j) {
                if ((row >> part.vtx[j]) & 1)
                    code[1 + (bitpos >> 3)] |= static_cast<unsigned char>(0x80u >> (bitpos & 7));
                ++bitpos;
            }
        }

        if (!have_best_) {
            std::memcpy(best_code_.data(), code, static_cast<std::size_t>(code_len_));
            for (int i = 0; i < n_; ++i) best_perm_[i] = part.vtx[i];
            have_best_ = true;
            return;
        }
        int cmp = std::memcmp(code, best_code_.data(), static_cast<std::size_t>(code_len_));
        if (cmp < 0) {
            std::memcpy(best_code_.data(), code, static_cast<std::size_t>(code_len_));
            for (int i = 0; i < n_; ++i) best_perm_[i] = part.vtx[i];
            return;
        }
        if (cmp > 0) return;

        // tie: the two labelings differ by an automorphism
        std::uint8_t gamma[64];
        for (int i = 0; i < n_; ++i) gamma[best_perm_[i]] = part.vtx[i];
        for (int v = 0; v < n_; ++v) {
            std::uint64_t row = adj_[v];
            for (int w = v + 1; w < n_; ++w) {
                bool a = (row >> w) & 1;
                bool b = (adj_[gamma[v]] >> gamma[w]) & 1;
                if (a != b) throw std::logic_error("canonical: tie produced a non-automorphism");
            }
        }

        // apply at the shallowest level whose individualised vertex moves;
        // gamma fixes every individualisation above it
        for (int lvl = 0; lvl < depth; ++lvl) {
            int c = levels_[lvl].chosen;
            if (gamma[c] == c) continue;
            auto& uf = levels_[lvl].uf;
            for (int x = 0; x < n_; ++x)
                if (gamma[x] != x) uf_union(uf, x, gamma[x]);
            for (int j = 0; j < levels_[lvl].nproc; ++j) {
                if (uf_find(uf, levels_[lvl].processed[j]) == uf_find(uf, c)) {
                    if (lvl < abort_depth_) abort_depth_ = lvl;
                    break;
                }
            }
            break;
        }
    }

    static int uf_find(std::array<std::uint8_t, 64>& uf, int x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    }
    static void uf_union(std::array<std::uint8_t, 64>& uf, int a, int b) {
        a = uf_find(uf, a);
        b = uf_find(uf, b);
        if (a != b) uf[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
    }

    struct Level {
        std::array<std::uint8_t, 64> uf;
        std::array<std::uint8_t, 64> processed;
        std::uint8_t chosen = 0;
        int nproc = 0;
    };

    const Graph& g_;
    int n_;
    std::array<std::uint64_t, 64> adj_{};
    int code_len_;

    bool have_best_ = false;
    std::array<unsigned char, 1 + (64 * 63 / 2 + 7) / 8> best_code_{};
    std::array<std::uint8_t, 64> best_perm_{};
    std::array<Level, 65> levels_{};
    int abort_depth_ = INT_MAX;
};

}  // namespace detail

/// Canonical labeling; `max_order` guards against inputs beyond the
/// supported capacity (default: the full 64-vertex capacity).
inline CanonicalLabeling canonical_labeling(const Graph& g, int max_order = Graph::kMaxOrder) {
    if (g.order() > max_order) throw std::invalid_argument("canonical: order exceeds configured maximum");
    return detail::Canonicalizer(g).run();
}

/// Canonical byte string: equal strings iff isomorphic graphs.
inline std::string canonical_form(const Graph& g, int max_order = Graph::kMaxOrder) {
    return canonical_labeling(g, max_order).form;
}

inline bool isomorphic(const Graph& a, const Graph& b, int max_order = Graph::kMaxOrder) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace g5x
