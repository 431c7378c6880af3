// Command-line surface: classify, conditions, survey, product, skeleton,
// construct. Exit codes: 0 ok, 2 invalid input, 3 budget exhausted on a
// classify/conditions call.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stab/circulant_lab.hpp"
#include "stab/products.hpp"
#include "stab/skeleton.hpp"
#include "stab/survey.hpp"

using nlohmann::ordered_json;
using namespace stab;

namespace {

// A graph argument is a circulant spec string ("c:..."), "-" for stdin, or a
// path to a graph text file.
Graph load_graph(const std::string& arg) {
    if (arg.rfind("c:", 0) == 0) return circulant(CirculantSpec::parse(arg));
    if (arg == "-") return read_graph_text(std::cin);
    std::ifstream in(arg);
    if (!in) fail(Errc::parse_error, "cannot open " + arg);
    return read_graph_text(in);
}

ordered_json perm_json(const Permutation& p) {
    ordered_json a = ordered_json::array();
    for (int x : p.images()) a.push_back(x);
    return a;
}

int run_classify(const std::string& arg, unsigned long long budget_limit) {
    Graph g = load_graph(arg);
    Budget budget(budget_limit);
    StabilityVerdict v = stability_status(g, budget);
    ordered_json o;
    o["verdict"] = verdict_name(v.verdict);
    o["reason"] = v.reason ? trivial_reason_name(*v.reason) : "";
    o["aut_order"] = v.aut_order.str();
    o["double_cover_aut_order"] = v.double_cover_aut_order.str();
    if (v.verdict != Verdict::Stable) {
        Budget wb(budget_limit);
        TfSearchOutcome tf = find_tf_morphism(g, true, std::nullopt, wb);
        if (tf.outcome == Outcome::Yes) {
            o["witness"]["alpha"] = perm_json(tf.witness->alpha);
            o["witness"]["beta"] = perm_json(tf.witness->beta);
        }
    }
    std::cout << o.dump(2) << '\n';
    return 0;
}

int run_conditions_cmd(const std::string& arg, unsigned long long budget_limit) {
    CirculantSpec spec = CirculantSpec::parse(arg);
    Budget budget(budget_limit);
    ConditionReport rep = stab::run_conditions(spec, budget);
    std::cout << conditions_to_json(spec, rep) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph stability workbench"};
    app.require_subcommand(1);
    unsigned long long budget_limit = default_node_budget();

    std::string graph_arg;
    auto* classify = app.add_subcommand("classify", "stability verdict for a graph or c-spec");
    classify->add_option("input", graph_arg, "graph file, '-', or c:<n>:<s,..>")->required();
    classify->add_option("--budget", budget_limit, "backtracking node cap");

    std::string cond_arg;
    auto* conditions = app.add_subcommand("conditions", "full condition report for a c-spec");
    conditions->add_option("spec", cond_arg, "c:<n>:<s,..>")->required();
    conditions->add_option("--budget", budget_limit, "backtracking node cap");

    SurveyOptions sopts;
    std::string dedup_name = "none";
    auto* surv = app.add_subcommand("survey", "exhaustive classification up to an order");
    surv->add_option("--max-order", sopts.max_order, "largest modulus")->required();
    surv->add_option("--jobs", sopts.jobs, "worker count (0 = hardware)");
    surv->add_option("--dedup", dedup_name, "none|mult");
    surv->add_option("--out", sopts.out_path, "JSONL output path");
    surv->add_option("--budget", sopts.budget, "per-spec node cap");
    surv->add_flag("--resume", sopts.resume, "reuse records already in --out");

    std::string kind_name, left_arg, right_arg;
    auto* prod = app.add_subcommand("product", "emit a graph product in text format");
    prod->add_option("--kind", kind_name, "direct|cartesian|strong|semistrong|lex")->required();
    prod->add_option("left", left_arg, "left factor")->required();
    prod->add_option("right", right_arg, "right factor")->required();

    std::string skel_arg;
    auto* skel = app.add_subcommand("skeleton", "emit Boolean square and Cartesian skeleton");
    skel->add_option("input", skel_arg, "graph file, '-', or c-spec")->required();

    std::string cname;
    int cn = 0, cm = 0, ccycle = 0;
    bool emit_graph = false;
    auto* cons = app.add_subcommand("construct", "catalogued unstable constructions");
    cons->add_option("name", cname, "cpc1|cpc2|cpc3|strpex|strex|semiex1|semiex2|semiex3|lexiex|k2n")
        ->required();
    cons->add_option("--n", cn, "main parameter");
    cons->add_option("--m", cm, "half order of the complete/cycle right factor");
    cons->add_option("--cycle", ccycle, "odd cycle length (k2n)");
    cons->add_flag("--graph", emit_graph, "emit the graph even when a spec exists");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(graph_arg, budget_limit);
        if (conditions->parsed()) return run_conditions_cmd(cond_arg, budget_limit);
        if (surv->parsed()) {
            if (dedup_name == "mult") sopts.dedup = DedupMode::MultiplierOrbit;
            else if (dedup_name != "none") fail(Errc::parse_error, "dedup must be none or mult");
            SurveySummary sum = survey(sopts);
            std::cout << sum.to_json() << '\n';
            return 0;
        }
        if (prod->parsed()) {
            Graph l = load_graph(left_arg), r = load_graph(right_arg);
            ProductGraph pg = product(l, r, parse_product_kind(kind_name));
            write_graph_text(std::cout, pg.graph);
            return 0;
        }
        if (skel->parsed()) {
            Graph g = load_graph(skel_arg);
            std::cout << "# boolean_square\n";
            write_graph_text(std::cout, boolean_square(g));
            std::cout << "# cartesian_skeleton\n";
            write_graph_text(std::cout, cartesian_skeleton(g));
            return 0;
        }
        if (cons->parsed()) {
            std::map<std::string, int> params;
            if (cons->count("--n")) params["n"] = cn;
            if (cons->count("--m")) params["m"] = cm;
            if (cons->count("--cycle")) params["cycle"] = ccycle;
            Construction c = construct_example(cname, params);
            if (c.spec && !emit_graph) std::cout << c.spec->to_string() << '\n';
            else write_graph_text(std::cout, c.graph);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == Errc::search_budget_exceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
