#pragma once

#include <iosfwd>
#include <string>

#include "stab/circulant_lab.hpp"

namespace stab {

enum class DedupMode { None, MultiplierOrbit };

struct SurveyOptions {
    int max_order = 10;
    unsigned long long budget = 0; // 0 = default node cap
    int jobs = 1;                  // 0 = all hardware threads
    DedupMode dedup = DedupMode::None;
    std::string out_path; // empty = no file, records only returned
    bool resume = false;  // reuse records already present in out_path
};

struct SurveyRecord {
    CirculantSpec spec;
    bool decided = false; // stability decided within budget
    std::optional<StabilityVerdict> stability;
    TypeKind type = TypeKind::Unknown;
    ConditionReport conditions;
    bool soundness_ok = true; // condition Yes implies unstable, re-checked at write time

    std::string to_jsonl() const; // one canonical JSON line, fixed key order
};

struct SurveySummary {
    int max_order = 0;
    long long records = 0;
    long long stable = 0, trivially_unstable = 0, nontrivially_unstable = 0, undecided = 0;
    long long type_i = 0, type_ii = 0, type_unknown = 0;
    long long cond_yes[10] = {0}; // c1,c2,c3,c4,t32,p37,p312,ncon,hmmtype,oldtonew
    long long soundness_violations = 0;
    // Nontrivially unstable specs with all of t32/p37/p312/ncon = No: the
    // survey's discovery counter.
    long long unexplained_nontrivial = 0;

    std::string to_json() const;
};

// Canonical JSON for a condition report (the `conditions` CLI output).
std::string conditions_to_json(const CirculantSpec& spec, const ConditionReport& rep);

// All inverse-closed nonempty connection sets for modulus n, lexicographic by
// canonical form; with MultiplierOrbit dedup only orbit-least representatives
// under S -> rS (units r) are kept.
std::vector<CirculantSpec> enumerate_connection_sets(int n, DedupMode dedup = DedupMode::None);

// Classifies one spec with a fresh budget; never throws on budget exhaustion.
SurveyRecord classify_spec(const CirculantSpec& spec, unsigned long long budget_limit);

// Runs the survey over orders 2..max_order. Deterministic output order
// (n, then canonical s) regardless of worker count; one JSONL line per spec
// plus a trailing summary line when out_path is set.
SurveySummary survey(const SurveyOptions& opts, std::vector<SurveyRecord>* sink = nullptr);

} // namespace stab
