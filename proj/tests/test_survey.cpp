#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stab/survey.hpp"

using namespace stab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("enumerate_connection_sets") {
    auto n4 = enumerate_connection_sets(4);
    REQUIRE(n4.size() == 3);
    CHECK(n4[0].s == std::vector<int>{1, 2, 3});
    CHECK(n4[1].s == std::vector<int>{1, 3});
    CHECK(n4[2].s == std::vector<int>{2});

    auto n5 = enumerate_connection_sets(5);
    REQUIRE(n5.size() == 3);
    CHECK(n5[0].s == std::vector<int>{1, 2, 3, 4});
    CHECK(n5[1].s == std::vector<int>{1, 4});
    CHECK(n5[2].s == std::vector<int>{2, 3});

    auto n5d = enumerate_connection_sets(5, DedupMode::MultiplierOrbit);
    REQUIRE(n5d.size() == 2);
    CHECK(n5d[0].s == std::vector<int>{1, 2, 3, 4});
    CHECK(n5d[1].s == std::vector<int>{1, 4}); // 2{1,4} = {2,3} is dropped

    auto n2 = enumerate_connection_sets(2);
    REQUIRE(n2.size() == 1);
    CHECK(n2[0].s == std::vector<int>{1});
}

TEST_CASE("every enumerated set is inverse-closed and unique") {
    for (int n = 2; n <= 12; ++n) {
        auto specs = enumerate_connection_sets(n);
        CHECK(specs.size() == (1u << (n / 2)) - 1);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            for (int s : specs[i].s) CHECK(std::binary_search(specs[i].s.begin(), specs[i].s.end(), (n - s) % n));
            if (i) CHECK(specs[i - 1] < specs[i]);
        }
    }
}

TEST_CASE("classify_spec known records") {
    SurveyRecord sigma = classify_spec(CirculantSpec::make(10, {1, 2}), 0);
    REQUIRE(sigma.decided);
    CHECK(sigma.stability->verdict == Verdict::NontriviallyUnstable);
    CHECK(sigma.soundness_ok);

    SurveyRecord c6 = classify_spec(CirculantSpec::make(6, {1}), 0);
    REQUIRE(c6.decided);
    CHECK(c6.stability->verdict == Verdict::TriviallyUnstable);
    CHECK(*c6.stability->reason == TrivialReason::BipartiteWithNontrivialAut);
}

TEST_CASE("record JSON shape is stable") {
    SurveyRecord rec = classify_spec(CirculantSpec::make(6, {1}), 0);
    auto j = nlohmann::json::parse(rec.to_jsonl());
    CHECK(j["n"] == 6);
    CHECK(j["s"] == std::vector<int>{1, 5});
    CHECK(j["verdict"] == "TriviallyUnstable");
    CHECK(j["conditions"].contains("t32"));
    CHECK(j["conditions"].contains("oldtonew"));
    CHECK(j.contains("witnesses"));
    CHECK(j["soundness_ok"] == true);
}

TEST_CASE("survey output is deterministic across worker counts") {
    SurveyOptions a;
    a.max_order = 10;
    a.jobs = 1;
    a.out_path = "survey_det_a.jsonl";
    SurveyOptions b = a;
    b.jobs = 0; // all hardware threads
    b.out_path = "survey_det_b.jsonl";
    survey(a);
    survey(b);
    CHECK(slurp(a.out_path) == slurp(b.out_path));
    std::remove(a.out_path.c_str());
    std::remove(b.out_path.c_str());
}

TEST_CASE("survey resume reproduces the same bytes") {
    SurveyOptions full;
    full.max_order = 8;
    full.jobs = 1;
    full.out_path = "survey_resume.jsonl";
    survey(full);
    std::string reference = slurp(full.out_path);

    // Truncate to half the lines and resume.
    std::istringstream in(reference);
    std::ostringstream partial;
    std::string line;
    int kept = 0;
    while (std::getline(in, line) && kept < 10) {
        partial << line << '\n';
        ++kept;
    }
    {
        std::ofstream out(full.out_path, std::ios::trunc);
        out << partial.str();
    }
    SurveyOptions resume = full;
    resume.resume = true;
    survey(resume);
    CHECK(slurp(full.out_path) == reference);
    std::remove(full.out_path.c_str());
}

TEST_CASE("survey summary and record-level soundness") {
    SurveyOptions opts;
    opts.max_order = 10;
    opts.jobs = 0;
    std::vector<SurveyRecord> records;
    SurveySummary sum = survey(opts, &records);
    CHECK(sum.records == static_cast<long long>(records.size()));
    CHECK(sum.soundness_violations == 0);
    CHECK(sum.unexplained_nontrivial == 0);

    long long nontrivial = 0;
    bool saw_sigma = false;
    for (const SurveyRecord& rec : records) {
        if (!rec.decided) continue;
        if (rec.stability->verdict == Verdict::NontriviallyUnstable) {
            ++nontrivial;
            CHECK(rec.stability->double_cover_aut_order > 2 * rec.stability->aut_order);
        }
        if (rec.spec == CirculantSpec::make(10, {1, 2})) {
            saw_sigma = true;
            CHECK(rec.stability->verdict == Verdict::NontriviallyUnstable);
        }
        CHECK(rec.soundness_ok);
    }
    CHECK(saw_sigma);
    CHECK(nontrivial == sum.nontrivially_unstable);
}

TEST_CASE("conditions_to_json shape") {
    CirculantSpec spec = CirculantSpec::make(8, {1, 2});
    Budget b(default_node_budget());
    ConditionReport rep = run_conditions(spec, b);
    auto j = nlohmann::json::parse(conditions_to_json(spec, rep));
    CHECK(j["conditions"]["p37"] == "yes");
    CHECK(j["witnesses"].contains("p37_iso"));
    CHECK_FALSE(j.contains("verdict"));
}
