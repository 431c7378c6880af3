#include "stab/survey.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

namespace stab {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json perm_json(const Permutation& p) {
    ordered_json a = ordered_json::array();
    for (int x : p.images()) a.push_back(x);
    return a;
}

ordered_json pair_json(const TwoFoldPair& p) {
    ordered_json o;
    o["alpha"] = perm_json(p.alpha);
    o["beta"] = perm_json(p.beta);
    return o;
}

const char* type_json_name(TypeKind k) { return type_kind_name(k); }

} // namespace

std::vector<CirculantSpec> enumerate_connection_sets(int n, DedupMode dedup) {
    std::vector<std::pair<int, int>> atoms; // {r, n-r}; r == n-r for the involution
    for (int r = 1; 2 * r <= n; ++r) atoms.emplace_back(r, (n - r) % n);
    const int k = static_cast<int>(atoms.size());

    std::vector<CirculantSpec> all;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        CirculantSpec spec;
        spec.n = n;
        VertexSet bits(n);
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) {
                bits.set(atoms[i].first);
                bits.set(atoms[i].second);
            }
        for (int x = 1; x < n; ++x)
            if (bits.test(x)) spec.s.push_back(x);
        all.push_back(std::move(spec));
    }
    std::sort(all.begin(), all.end());

    if (dedup == DedupMode::MultiplierOrbit) {
        std::vector<CirculantSpec> kept;
        for (const CirculantSpec& spec : all) {
            bool least = true;
            for (int r = 2; r < n && least; ++r) {
                if (std::gcd(r, n) != 1) continue;
                std::vector<int> mapped;
                for (int s : spec.s) mapped.push_back(s * r % n);
                std::sort(mapped.begin(), mapped.end());
                if (mapped < spec.s) least = false;
            }
            if (least) kept.push_back(spec);
        }
        return kept;
    }
    return all;
}

SurveyRecord classify_spec(const CirculantSpec& spec, unsigned long long budget_limit) {
    if (budget_limit == 0) budget_limit = default_node_budget();
    SurveyRecord rec;
    rec.spec = spec;

    Budget stability_budget(budget_limit);
    try {
        rec.stability = stability_status(circulant(spec), stability_budget);
        rec.decided = true;
    } catch (const Error& e) {
        if (e.code() != Errc::search_budget_exceeded) throw;
    }

    Budget cond_budget(budget_limit);
    rec.conditions = run_conditions(spec, cond_budget);

    if (spec.n % 2 == 0) {
        if (rec.decided) {
            Budget type_budget(budget_limit);
            try {
                rec.type = classify_type(spec, *rec.stability, type_budget).kind;
            } catch (const Error& e) {
                if (e.code() != Errc::search_budget_exceeded) throw;
                rec.type = TypeKind::Unknown;
            }
        }
    } else if (rec.decided) {
        // Odd order: the Type I/II split presupposes the index-2 even
        // subgroup; mirror the stability verdict instead.
        switch (rec.stability->verdict) {
            case Verdict::Stable: rec.type = TypeKind::Stable; break;
            case Verdict::TriviallyUnstable: rec.type = TypeKind::TriviallyUnstable; break;
            case Verdict::NontriviallyUnstable: rec.type = TypeKind::Unknown; break;
        }
    }

    // Write-time soundness: a Yes condition on a stable graph would refute a
    // theorem; surfaced, never silently dropped.
    if (rec.decided && rec.stability->stable() && rec.conditions.any_yes())
        rec.soundness_ok = false;
    if (rec.decided && rec.stability->verdict == Verdict::NontriviallyUnstable &&
        !(rec.stability->double_cover_aut_order > 2 * rec.stability->aut_order))
        rec.soundness_ok = false;
    return rec;
}

namespace {

ordered_json conditions_json_fields(const ConditionReport& conditions) {
    ordered_json cond;
    cond["c1"] = outcome_name(conditions.wilson.c1);
    cond["c2"] = outcome_name(conditions.wilson.c2);
    cond["c3"] = outcome_name(conditions.wilson.c3);
    cond["c4"] = outcome_name(conditions.wilson.c4);
    cond["t32"] = outcome_name(conditions.t32.outcome);
    cond["p37"] = outcome_name(conditions.p37.outcome);
    cond["p312"] = outcome_name(conditions.p312.outcome);
    cond["ncon"] = outcome_name(conditions.ncon.outcome);
    cond["hmmtype"] = conditions.hmmtype.clauses();
    cond["oldtonew"] = outcome_name(conditions.oldtonew.outcome);
    return cond;
}

ordered_json witnesses_json_fields(const ConditionReport& conditions) {
    ordered_json wit = ordered_json::object();
    if (conditions.wilson.c1 == Outcome::Yes) wit["c1_h"] = conditions.wilson.c1_h;
    if (conditions.wilson.c2 == Outcome::Yes) wit["c2_h"] = conditions.wilson.c2_h;
    if (conditions.wilson.c3 == Outcome::Yes) {
        wit["c3_H"] = conditions.wilson.c3_H.elems;
        wit["c3_R"] = conditions.wilson.c3_R;
        wit["c3_d"] = conditions.wilson.c3_d;
    }
    if (conditions.wilson.c4 == Outcome::Yes) wit["c4_r"] = conditions.wilson.c4_r;
    if (conditions.t32.outcome == Outcome::Yes) {
        wit["t32_clause"] = conditions.t32.clause;
        wit["t32_H"] = conditions.t32.H.elems;
        wit["t32_K"] = conditions.t32.K.elems;
    }
    if (conditions.p37.outcome == Outcome::Yes && conditions.p37.iso)
        wit["p37_iso"] = perm_json(*conditions.p37.iso);
    if (conditions.p312.outcome == Outcome::Yes) {
        wit["p312_H"] = conditions.p312.H.elems;
        if (conditions.p312.pair) wit["p312_pair"] = pair_json(*conditions.p312.pair);
    }
    if (conditions.ncon.outcome == Outcome::Yes && conditions.ncon.sigma)
        wit["ncon_sigma"] = perm_json(*conditions.ncon.sigma);
    if (conditions.hmmtype.clause_i) {
        wit["hmmtype_i_K"] = conditions.hmmtype.i_K.elems;
        wit["hmmtype_i_H"] = conditions.hmmtype.i_H.elems;
    }
    if (conditions.oldtonew.outcome == Outcome::Yes)
        wit["oldtonew_K"] = conditions.oldtonew.K.elems;
    return wit;
}

} // namespace

std::string conditions_to_json(const CirculantSpec& spec, const ConditionReport& rep) {
    ordered_json o;
    o["n"] = spec.n;
    o["s"] = spec.s;
    o["conditions"] = conditions_json_fields(rep);
    o["witnesses"] = witnesses_json_fields(rep);
    return o.dump();
}

std::string SurveyRecord::to_jsonl() const {
    ordered_json o;
    o["n"] = spec.n;
    o["s"] = spec.s;
    if (decided) {
        o["verdict"] = verdict_name(stability->verdict);
        o["reason"] = stability->reason ? trivial_reason_name(*stability->reason) : "";
        o["aut_order"] = stability->aut_order.str();
        o["double_cover_aut_order"] = stability->double_cover_aut_order.str();
    } else {
        o["verdict"] = "Inconclusive";
        o["reason"] = "";
        o["aut_order"] = "";
        o["double_cover_aut_order"] = "";
    }
    o["type"] = type_json_name(type);
    o["conditions"] = conditions_json_fields(conditions);
    o["witnesses"] = witnesses_json_fields(conditions);
    o["soundness_ok"] = soundness_ok;
    return o.dump();
}

std::string SurveySummary::to_json() const {
    ordered_json o;
    o["summary"]["max_order"] = max_order;
    o["summary"]["records"] = records;
    o["summary"]["verdicts"]["stable"] = stable;
    o["summary"]["verdicts"]["trivially_unstable"] = trivially_unstable;
    o["summary"]["verdicts"]["nontrivially_unstable"] = nontrivially_unstable;
    o["summary"]["verdicts"]["inconclusive"] = undecided;
    o["summary"]["types"]["type_i"] = type_i;
    o["summary"]["types"]["type_ii"] = type_ii;
    o["summary"]["types"]["unknown"] = type_unknown;
    const char* keys[10] = {"c1",  "c2",   "c3",   "c4",      "t32",
                            "p37", "p312", "ncon", "hmmtype", "oldtonew"};
    for (int i = 0; i < 10; ++i) o["summary"]["conditions_yes"][keys[i]] = cond_yes[i];
    o["summary"]["soundness_violations"] = soundness_violations;
    o["summary"]["unexplained_nontrivial"] = unexplained_nontrivial;
    return o.dump();
}

SurveySummary survey(const SurveyOptions& opts, std::vector<SurveyRecord>* sink) {
    if (opts.max_order < 2) fail(Errc::bad_parameters, "survey needs max_order >= 2");
    std::vector<CirculantSpec> specs;
    for (int n = 2; n <= opts.max_order; ++n) {
        auto batch = enumerate_connection_sets(n, opts.dedup);
        specs.insert(specs.end(), batch.begin(), batch.end());
    }

    // Resume: reuse serialized lines for specs already present in the file.
    std::map<std::string, std::string> existing; // spec string -> line
    if (opts.resume && !opts.out_path.empty()) {
        std::ifstream in(opts.out_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("n") || !j.contains("s")) continue;
            CirculantSpec key;
            key.n = j["n"].get<int>();
            key.s = j["s"].get<std::vector<int>>();
            existing[key.to_string()] = line;
        }
    }

    std::vector<std::string> lines(specs.size());
    std::vector<SurveyRecord> records(sink ? specs.size() : 0);

    const long long total = static_cast<long long>(specs.size());
#ifdef _OPENMP
    int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (long long i = 0; i < total; ++i) {
        auto hit = existing.find(specs[i].to_string());
        if (hit != existing.end() && !sink) {
            lines[i] = hit->second;
            continue;
        }
        try {
            SurveyRecord rec = classify_spec(specs[i], opts.budget);
            lines[i] = rec.to_jsonl();
            if (sink) records[i] = std::move(rec);
        } catch (const std::exception&) {
            // A record must never take down the run; emit it undecided.
            SurveyRecord rec;
            rec.spec = specs[i];
            lines[i] = rec.to_jsonl();
            if (sink) records[i] = std::move(rec);
        }
    }

    SurveySummary sum;
    sum.max_order = opts.max_order;
    for (long long i = 0; i < total; ++i) {
        // The summary is accumulated from the canonical lines so that resumed
        // and fresh runs agree exactly.
        auto j = nlohmann::json::parse(lines[i]);
        std::string verdict = j["verdict"].get<std::string>();
        ++sum.records;
        if (verdict == "Stable") ++sum.stable;
        else if (verdict == "TriviallyUnstable") ++sum.trivially_unstable;
        else if (verdict == "NontriviallyUnstable") ++sum.nontrivially_unstable;
        else ++sum.undecided;
        std::string type = j["type"].get<std::string>();
        if (type == "TypeI") ++sum.type_i;
        else if (type == "TypeII") ++sum.type_ii;
        else if (type == "Unknown") ++sum.type_unknown;
        auto cond = j["conditions"];
        const char* keys[10] = {"c1",  "c2",   "c3",   "c4",      "t32",
                                "p37", "p312", "ncon", "hmmtype", "oldtonew"};
        for (int ci = 0; ci < 10; ++ci) {
            if (ci == 8) {
                if (!cond["hmmtype"].empty()) ++sum.cond_yes[ci];
            } else if (cond[keys[ci]] == "yes") {
                ++sum.cond_yes[ci];
            }
        }
        if (!j["soundness_ok"].get<bool>()) ++sum.soundness_violations;
        if (verdict == "NontriviallyUnstable" && cond["t32"] == "no" && cond["p37"] == "no" &&
            cond["p312"] == "no" && cond["ncon"] == "no")
            ++sum.unexplained_nontrivial;
    }

    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path, std::ios::trunc);
        if (!out) fail(Errc::bad_parameters, "cannot open output file " + opts.out_path);
        for (const std::string& line : lines) out << line << '\n';
        out << sum.to_json() << '\n';
    }
    if (sink) *sink = std::move(records);
    return sum;
}

} // namespace stab
