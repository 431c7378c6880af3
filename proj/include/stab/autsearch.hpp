#pragma once

#include <optional>
#include <vector>

#include "stab/error.hpp"
#include "stab/perm.hpp"

namespace stab {

class Graph;

// Node budget shared by all backtracking searches. Exhausting it throws
// Error(SearchBudgetExceeded); find-style callers catch and report
// Inconclusive instead of guessing.
struct Budget {
    unsigned long long limit;
    unsigned long long used = 0;
    explicit Budget(unsigned long long lim) : limit(lim) {}
    void tick() {
        if (++used > limit) fail(Errc::search_budget_exceeded, "search node budget exhausted");
    }
};

// Default node cap: STAB_BUDGET env override, else 10^7.
unsigned long long default_node_budget();

// Ordered partition of {0..n-1}; cells sorted internally, cell order is part
// of the value (automorphisms must preserve cell positions).
struct Partition {
    std::vector<std::vector<int>> cells;

    static Partition unit(int n);
    static Partition from_cells(int n, const std::vector<std::vector<int>>& given);
    bool discrete() const;
    std::vector<int> shape() const;
};

// Equitable refinement: splits cells by neighbor counts against every cell
// until stable. Deterministic and isomorphism-equivariant (split keys are
// count vectors over cell positions, emitted in ascending key order).
void refine_equitable(const Graph& g, Partition& p);

// Automorphism group of g, optionally restricted to permutations preserving
// each cell of an initial ordered partition setwise. Generators are verified
// adjacency-preserving; the order is recomputed independently via a
// stabilizer chain over the returned generators.
PermGroup automorphism_group(const Graph& g, Budget& budget);
PermGroup automorphism_group(const Graph& g, const std::vector<std::vector<int>>& initial_cells,
                             Budget& budget);

// Partition-backtracking isomorphism search (general fallback).
std::optional<Permutation> isomorphism_backtrack(const Graph& g, const Graph& h,
                                                 unsigned long long node_budget);

} // namespace stab
