#pragma once

#include <map>
#include <string>

#include "stab/stability.hpp"

namespace stab {

// Subgroup of Z_n; every subgroup is dZ_n for a divisor d.
struct Subgroup {
    int n = 0;
    std::vector<int> elems; // sorted, contains 0

    static Subgroup by_divisor(int n, int d);
    static Subgroup generated(int n, int g);

    int order() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const;
    VertexSet mask() const;
};

std::vector<int> divisors(int n); // ascending

// ---- Wilson-style conditions (even order only; odd order reports all No) --

struct WilsonReport {
    Outcome c1 = Outcome::No;
    int c1_h = -1;
    Outcome c2 = Outcome::No;
    int c2_h = -1;
    Outcome c3 = Outcome::No;
    Subgroup c3_H;
    std::vector<int> c3_R;
    int c3_d = 0;
    Outcome c4 = Outcome::No;
    int c4_r = -1;
};

WilsonReport wilson_conditions(const CirculantSpec& spec);

// ---- Subgroup-pair condition -----------------------------------------------

struct T32Result {
    Outcome outcome = Outcome::No;
    int clause = 0; // 1 or 2
    Subgroup H, K;
};

T32Result hmm_t32(const CirculantSpec& spec, Budget& budget);

// ---- Shifted-connection-set isomorphism ------------------------------------

struct P37Result {
    Outcome outcome = Outcome::No;
    std::optional<Permutation> iso;
};

P37Result hmm_p37(const CirculantSpec& spec, Budget& budget);

// ---- Even-subgraph TF lift --------------------------------------------------

struct P312Result {
    Outcome outcome = Outcome::No;
    Subgroup H;
    // Witness TF pair on the even subgraph, in its induced (reindexed)
    // vertex numbering: vertex i of the subgraph is residue 2i.
    std::optional<TwoFoldPair> pair;
};

P312Result hmm_p312(const CirculantSpec& spec, Budget& budget);

// ---- Stabilizer-moves-the-involution condition ------------------------------

struct NconResult {
    Outcome outcome = Outcome::No;
    std::optional<Permutation> sigma; // fixes 0, moves m, on the shifted graph
};

NconResult ncon_check(const CirculantSpec& spec, Budget& budget);

// ---- Consolidated three-clause condition ------------------------------------

struct HmmtypeResult {
    Outcome outcome = Outcome::No;
    bool clause_i = false, clause_ii = false, clause_iii = false;
    Subgroup i_K, i_H;
    std::vector<int> clauses() const;
};

HmmtypeResult theorem_hmmtype(const CirculantSpec& spec, Budget& budget);

// ---- Explicit shifted-graph automorphism from a subgroup pair ---------------

struct OldtonewResult {
    bool holds = false;          // hypothesis inclusion
    bool sigma_verified = false; // constructed map is an automorphism fixing 0, moving 2h
    std::optional<Permutation> sigma;
};

// Requires n = 4h and |K| = 2 * odd.
OldtonewResult oldtonew_check(const CirculantSpec& spec, int h, const Subgroup& K);

// Survey flag: does some K of twice-odd order satisfy the hypothesis at
// h = n/4? (Only applicable when 4 | n.)
struct OldtonewFlag {
    Outcome outcome = Outcome::No;
    Subgroup K;
};
OldtonewFlag oldtonew_hypothesis(const CirculantSpec& spec);

// ---- Cross-check of overlapping conditions ----------------------------------

struct EquiReport {
    int clause = 0; // 1..4
    bool verified = false;
};

// Pre: (spec, H, K) satisfies one of the hmm_t32 clauses (re-checked; throws
// HypothesisNotSatisfied otherwise).
EquiReport equi_cross_check(const CirculantSpec& spec, const Subgroup& H, const Subgroup& K,
                            Budget& budget);

// ---- Odd-part automorphism pair ---------------------------------------------

struct PreservingResult {
    Outcome outcome = Outcome::No;
    std::optional<std::pair<Permutation, Permutation>> pair; // (sigma, rho)
};

PreservingResult preserving_check(const CirculantSpec& spec, Budget& budget);

// ---- Type classification ----------------------------------------------------

enum class TypeKind { Stable, TriviallyUnstable, TypeI, TypeII, Unknown };
const char* type_kind_name(TypeKind k);

struct TypeVerdict {
    TypeKind kind = TypeKind::Unknown;
    std::optional<TwoFoldPair> witness; // Type I: both components preserve evens
    std::optional<StabilityVerdict> stability;
    bool via_even_subgraph_shortcut = false;
};

TypeVerdict classify_type(const CirculantSpec& spec, Budget& budget);
TypeVerdict classify_type(const CirculantSpec& spec, const StabilityVerdict& stability,
                          Budget& budget);

// ---- Full per-spec condition battery ----------------------------------------

struct ConditionReport {
    WilsonReport wilson;
    T32Result t32;
    P37Result p37;
    P312Result p312;
    NconResult ncon;
    HmmtypeResult hmmtype;
    OldtonewFlag oldtonew;
    bool any_yes() const;
};

ConditionReport run_conditions(const CirculantSpec& spec, Budget& budget);

// ---- Catalogued constructions ------------------------------------------------

struct Construction {
    std::string name;
    Graph graph = Graph(1);            // product / bundle / complement form
    std::optional<CirculantSpec> spec; // when an explicit connection set exists,
                                       // verified isomorphic to `graph`
};

Construction construct_example(const std::string& name, const std::map<std::string, int>& params);
std::vector<std::string> construct_example_names();

} // namespace stab
