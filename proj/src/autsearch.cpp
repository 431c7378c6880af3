#include "stab/autsearch.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "stab/graph.hpp"

namespace stab {

unsigned long long default_node_budget() {
    if (const char* env = std::getenv("STAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000ULL;
}

Partition Partition::unit(int n) {
    Partition p;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    p.cells.push_back(std::move(all));
    return p;
}

Partition Partition::from_cells(int n, const std::vector<std::vector<int>>& given) {
    Partition p;
    std::vector<char> seen(n, 0);
    for (const auto& cell : given) {
        if (cell.empty()) continue;
        std::vector<int> c = cell;
        std::sort(c.begin(), c.end());
        for (int v : c) {
            if (v < 0 || v >= n || seen[v]) fail(Errc::bad_parameters, "invalid partition cell");
            seen[v] = 1;
        }
        p.cells.push_back(std::move(c));
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) fail(Errc::bad_parameters, "partition does not cover all vertices");
    return p;
}

bool Partition::discrete() const {
    for (const auto& c : cells)
        if (c.size() > 1) return false;
    return true;
}

std::vector<int> Partition::shape() const {
    std::vector<int> s;
    s.reserve(cells.size());
    for (const auto& c : cells) s.push_back(static_cast<int>(c.size()));
    return s;
}

void refine_equitable(const Graph& g, Partition& p) {
    const int n = g.order();
    std::vector<int> cell_of(n);
    std::vector<int> rows;
    for (;;) {
        const int k = static_cast<int>(p.cells.size());
        if (k == n) return; // discrete
        for (int ci = 0; ci < k; ++ci)
            for (int v : p.cells[ci]) cell_of[v] = ci;
        rows.assign(static_cast<std::size_t>(n) * k, 0);
        for (int v = 0; v < n; ++v) {
            const VertexSet& nb = g.neighbors(v);
            for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
                ++rows[static_cast<std::size_t>(v) * k + cell_of[u]];
        }
        auto row_less = [&](int a, int b) {
            const int* ra = &rows[static_cast<std::size_t>(a) * k];
            const int* rb = &rows[static_cast<std::size_t>(b) * k];
            for (int i = 0; i < k; ++i)
                if (ra[i] != rb[i]) return ra[i] < rb[i];
            return a < b;
        };
        auto row_eq = [&](int a, int b) {
            const int* ra = &rows[static_cast<std::size_t>(a) * k];
            const int* rb = &rows[static_cast<std::size_t>(b) * k];
            for (int i = 0; i < k; ++i)
                if (ra[i] != rb[i]) return false;
            return true;
        };
        std::vector<std::vector<int>> next;
        next.reserve(p.cells.size());
        bool changed = false;
        for (auto& cell : p.cells) {
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            std::sort(cell.begin(), cell.end(), row_less);
            std::size_t start = 0;
            for (std::size_t i = 1; i <= cell.size(); ++i) {
                if (i == cell.size() || !row_eq(cell[start], cell[i])) {
                    next.emplace_back(cell.begin() + start, cell.begin() + i);
                    if (i - start != cell.size()) changed = true;
                    start = i;
                }
            }
        }
        p.cells = std::move(next);
        if (!changed) return;
    }
}

namespace {

// Individualize vertex v out of cell t: {v} keeps position t, remainder
// follows at t+1.
Partition individualize(const Partition& p, int t, int v) {
    Partition q;
    q.cells.reserve(p.cells.size() + 1);
    for (int i = 0; i < static_cast<int>(p.cells.size()); ++i) {
        if (i != t) {
            q.cells.push_back(p.cells[i]);
            continue;
        }
        q.cells.push_back({v});
        std::vector<int> rest;
        rest.reserve(p.cells[i].size() - 1);
        for (int x : p.cells[i])
            if (x != v) rest.push_back(x);
        q.cells.push_back(std::move(rest));
    }
    return q;
}

// First smallest non-singleton cell, or -1 when discrete.
int pick_target_cell(const Partition& p) {
    int best = -1;
    std::size_t best_size = 0;
    for (int i = 0; i < static_cast<int>(p.cells.size()); ++i) {
        std::size_t s = p.cells[i].size();
        if (s < 2) continue;
        if (best < 0 || s < best_size) {
            best = i;
            best_size = s;
        }
    }
    return best;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet& nb = g.neighbors(u);
        for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v))
            if (!g.adjacent(p.of(u), p.of(static_cast<int>(v)))) return false;
    }
    return true;
}

class AutSearch {
public:
    AutSearch(const Graph& g, Partition initial, Budget& budget) : g_(g), budget_(budget) {
        refine_equitable(g_, initial);
        nu_.push_back(std::move(initial));
        while (!nu_.back().discrete()) {
            int t = pick_target_cell(nu_.back());
            int b = nu_.back().cells[t][0];
            target_.push_back(t);
            base_.push_back(b);
            Partition next = individualize(nu_.back(), t, b);
            refine_equitable(g_, next);
            nu_.push_back(std::move(next));
        }
    }

    std::vector<Permutation> run() {
        identity_level(0);
        return gens_;
    }

private:
    // Explores the subtree where base_[0..level-1] are all mapped to
    // themselves. Records one generator per essentially-new coset at each
    // deeper level.
    void identity_level(std::size_t level) {
        if (level == base_.size()) return; // identity leaf
        identity_level(level + 1);
        const int t = target_[level];
        const int b = base_[level];
        const auto& candidates = nu_[level].cells[t];
        VertexSet done(g_.order());
        done.set(b);
        for (int c : candidates) {
            if (c == b) continue;
            if (orbit_closure_hits(done, level, c)) continue;
            budget_.tick();
            Partition img = individualize(nu_[level], t, c);
            refine_equitable(g_, img);
            if (img.shape() == nu_[level + 1].shape()) coset_search(level + 1, img, level);
            done.set(c);
        }
    }

    // Finds at most one automorphism extending the current partial map;
    // records it as a generator spawned at `spawn`.
    bool coset_search(std::size_t level, const Partition& img, std::size_t spawn) {
        if (level == base_.size()) {
            std::vector<int> tbl(g_.order());
            for (std::size_t i = 0; i < img.cells.size(); ++i)
                tbl[nu_.back().cells[i][0]] = img.cells[i][0];
            Permutation p{std::move(tbl)};
            if (!is_automorphism(g_, p)) return false;
            gens_.push_back(p);
            spawn_.push_back(static_cast<int>(spawn));
            return true;
        }
        const int t = target_[level];
        for (int c : img.cells[t]) {
            budget_.tick();
            Partition next = individualize(img, t, c);
            refine_equitable(g_, next);
            if (next.shape() != nu_[level + 1].shape()) continue;
            if (coset_search(level + 1, next, spawn)) return true;
        }
        return false;
    }

    // True when c lies in the orbit of `done` under the generators usable at
    // this level (those fixing base_[0..level-1], i.e. spawned at >= level).
    bool orbit_closure_hits(const VertexSet& done, std::size_t level, int c) {
        VertexSet orbit = done;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                if (spawn_[gi] < static_cast<int>(level)) continue;
                for (auto v = orbit.find_first(); v != VertexSet::npos; v = orbit.find_next(v)) {
                    int w = gens_[gi].of(static_cast<int>(v));
                    if (!orbit.test(w)) {
                        orbit.set(w);
                        grew = true;
                    }
                }
            }
        }
        return orbit.test(c);
    }

    const Graph& g_;
    Budget& budget_;
    std::vector<Partition> nu_;
    std::vector<int> target_;
    std::vector<int> base_;
    std::vector<Permutation> gens_;
    std::vector<int> spawn_;
};

} // namespace

PermGroup automorphism_group(const Graph& g, const std::vector<std::vector<int>>& initial_cells,
                             Budget& budget) {
    AutSearch search(g, Partition::from_cells(g.order(), initial_cells), budget);
    PermGroup grp;
    grp.degree = g.order();
    grp.generators = search.run();
    grp.order = group_order(grp.degree, grp.generators);
    return grp;
}

PermGroup automorphism_group(const Graph& g, Budget& budget) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return automorphism_group(g, {all}, budget);
}

std::optional<Permutation> isomorphism_backtrack(const Graph& g, const Graph& h,
                                                 unsigned long long node_budget) {
    if (g.order() != h.order()) return std::nullopt;
    Budget budget(node_budget ? node_budget : default_node_budget());

    // Domain path on g.
    Partition dom = Partition::unit(g.order());
    refine_equitable(g, dom);
    Partition img0 = Partition::unit(h.order());
    refine_equitable(h, img0);
    if (dom.shape() != img0.shape()) return std::nullopt;

    std::vector<Partition> nu{dom};
    std::vector<int> target, base;
    while (!nu.back().discrete()) {
        int t = pick_target_cell(nu.back());
        int b = nu.back().cells[t][0];
        target.push_back(t);
        base.push_back(b);
        Partition next = individualize(nu.back(), t, b);
        refine_equitable(g, next);
        nu.push_back(std::move(next));
    }

    std::optional<Permutation> found;
    // DFS mapping the domain path into h.
    auto rec = [&](auto&& self, std::size_t level, const Partition& img) -> bool {
        if (level == base.size()) {
            std::vector<int> tbl(g.order());
            for (std::size_t i = 0; i < img.cells.size(); ++i)
                tbl[nu.back().cells[i][0]] = img.cells[i][0];
            Permutation p{std::move(tbl)};
            if (!is_isomorphism(g, h, p)) return false;
            found = p;
            return true;
        }
        const int t = target[level];
        for (int c : img.cells[t]) {
            budget.tick();
            Partition next = individualize(img, t, c);
            refine_equitable(h, next);
            if (next.shape() != nu[level + 1].shape()) continue;
            if (self(self, level + 1, next)) return true;
        }
        return false;
    };
    rec(rec, 0, img0);
    return found;
}

} // namespace stab
