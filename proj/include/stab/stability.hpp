#pragma once

#include <optional>

#include "stab/autsearch.hpp"
#include "stab/graph.hpp"

namespace stab {

enum class Verdict { Stable, TriviallyUnstable, NontriviallyUnstable };
enum class TrivialReason { Disconnected, RThick, BipartiteWithNontrivialAut };

const char* verdict_name(Verdict v);
const char* trivial_reason_name(TrivialReason r);

struct StabilityVerdict {
    Verdict verdict;
    std::optional<TrivialReason> reason; // set iff TriviallyUnstable
    BigInt aut_order;
    BigInt double_cover_aut_order;
    bool stable() const { return verdict == Verdict::Stable; }
};

enum class TwoFoldRole { TF, TFS };

struct TwoFoldPair {
    Permutation alpha;
    Permutation beta;
    TwoFoldRole role = TwoFoldRole::TF;
    bool nontrivial() const { return !(alpha == beta); }
};

enum class Outcome { Yes, No, Inconclusive };
const char* outcome_name(Outcome o);

struct TfSearchOutcome {
    Outcome outcome = Outcome::No;
    std::optional<TwoFoldPair> witness;
};

struct PairStabilityReport {
    bool stable = false;
    BigInt product_aut_order;
    BigInt left_aut_order;
    BigInt right_aut_order;
};

// Canonical double cover g x K2 with vertex (v, layer) -> layer*n + v.
Graph double_cover(const Graph& g);

// Verdict by exact group-order comparison: stable iff
// |Aut(g x K2)| = 2 |Aut(g)|. Trivial-instability reason is the first match
// among Disconnected, RThick, BipartiteWithNontrivialAut.
StabilityVerdict stability_status(const Graph& g, Budget& budget);
StabilityVerdict stability_status(const Graph& g);

// Pair stability: |Aut(g x h)| = |Aut(g)| |Aut(h)|.
PairStabilityReport pair_stability(const Graph& g, const Graph& h, Budget& budget);
PairStabilityReport pair_stability(const Graph& g, const Graph& h);

// Checks the defining conditions of the pair's role on every ordered pair.
bool verify_two_fold(const Graph& g, const TwoFoldPair& pair);

// TF-morphism search, realized as an automorphism search on the double cover
// restricted to layer-preserving maps. constraint_cells, when present, is a
// partition of the vertices that both alpha and beta must preserve cell-wise
// (Type I searches pass {evens, odds}).
TfSearchOutcome find_tf_morphism(const Graph& g, bool require_nontrivial,
                                 const std::optional<std::vector<std::vector<int>>>& constraint_cells,
                                 Budget& budget);

// TFS-morphism search via complement TF-morphisms with derangement
// alpha beta^-1 (the two notions are dual in that exact sense).
TfSearchOutcome find_tfs_morphism(const Graph& g, Budget& budget);

// Shared layered-search utility: given a graph on 2*half vertices whose
// layer-preserving automorphisms decompose as (first component on 0..half-1,
// second on half..2*half-1), finds an element whose components differ.
// cells must already separate the layers.
struct LayeredWitness {
    Outcome outcome = Outcome::No;
    std::optional<std::pair<Permutation, Permutation>> components;
};
LayeredWitness find_distinct_layered_pair(const Graph& two_layer, int half,
                                          const std::vector<std::vector<int>>& cells,
                                          Budget& budget);

} // namespace stab
