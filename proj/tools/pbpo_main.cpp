// Command-line front end: encode TRS rules, decode graphs, run rewrite
// steps, zoning analysis and the randomized property suites.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "pbpo/check.hpp"
#include "pbpo/encoding.hpp"
#include "pbpo/engine.hpp"
#include "pbpo/io.hpp"
#include "pbpo/zoning.hpp"

namespace fs = std::filesystem;
using namespace pbpo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

void write_dot(const std::string& dir, const std::string& name, const LabeledGraph& g,
               std::optional<int> root = std::nullopt, const Zoning* z = nullptr) {
    fs::create_directories(dir);
    write_file((fs::path(dir) / (name + ".dot")).string(), to_dot(g, root, z));
}

int cmd_encode(const std::string& trs_file, int rule_index, const std::string& out_dir,
               const std::string& dot_dir) {
    Trs trs = parse_trs(read_file(trs_file));
    std::string stem = fs::path(trs_file).stem().string();
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        if (rule_index >= 0 && static_cast<std::size_t>(rule_index) != i) continue;
        EncodedRule erule = encode_rule(trs.signature, trs.rules[i]);
        CospanResult rp = derived_replacement(erule.rule);
        LabeledGraph rp_graph = rp.apex;
        rp_graph.set_name("Rp");

        std::string rule_text = rule_to_text(erule.rule);
        std::string rp_text = graph_to_text(rp_graph);
        if (out_dir.empty()) {
            std::cout << "# rule " << i << ": " << trs.rules[i].str() << "\n"
                      << rule_text << "\n" << rp_text << "\n";
        } else {
            fs::create_directories(out_dir);
            std::string base = stem + "_rule" + std::to_string(i);
            write_file((fs::path(out_dir) / (base + ".pbporule")).string(), rule_text);
            write_file((fs::path(out_dir) / (base + "_Rp.graph")).string(), rp_text);
        }
        if (!dot_dir.empty()) {
            std::string base = stem + "_rule" + std::to_string(i) + "_";
            write_dot(dot_dir, base + "L", erule.rule.L, erule.root_L());
            write_dot(dot_dir, base + "K", erule.rule.K);
            write_dot(dot_dir, base + "R", erule.rule.R, erule.r_encoding.rooted.root);
            write_dot(dot_dir, base + "Lp", erule.rule.Lp);
            write_dot(dot_dir, base + "Kp", erule.rule.Kp);
            write_dot(dot_dir, base + "Rp", rp_graph);
        }
    }
    if (rule_index >= 0 && static_cast<std::size_t>(rule_index) >= trs.rules.size()) {
        std::cerr << "error: rule index " << rule_index << " out of range\n";
        return kExitInputError;
    }
    return kExitOk;
}

int cmd_decode(const std::string& trs_file, const std::string& graph_file) {
    Trs trs = parse_trs(read_file(trs_file));
    GraphFile gf = parse_graph(read_file(graph_file));
    std::optional<Term> t = gf.root ? decode_term(trs.signature, gf.rooted())
                                    : decode_term(trs.signature, gf.graph);
    if (!t) {
        std::cout << "not a term encoding\n";
        return kExitCounterexample;
    }
    std::cout << t->str() << "\n";
    return kExitOk;
}

int cmd_step(const std::string& rule_file, const std::string& graph_file, int match_index,
             const std::string& dot_dir) {
    PbpoRule rule = parse_rule(read_file(rule_file));
    GraphFile gf = parse_graph(read_file(graph_file));
    auto matches = find_matches(rule, gf.graph);
    std::cout << matches.size() << " match(es)\n";
    if (matches.empty()) return kExitOk;
    if (match_index < 0 || static_cast<std::size_t>(match_index) >= matches.size()) {
        std::cerr << "error: match index out of range\n";
        return kExitInputError;
    }
    RewriteStep step = apply_step(rule, gf.graph, matches[match_index]);
    LabeledGraph out = step.GR;
    out.set_name("GR");
    std::cout << graph_to_text(out);
    if (!dot_dir.empty()) {
        write_dot(dot_dir, "GL", step.GL);
        write_dot(dot_dir, "GK", step.GK);
        write_dot(dot_dir, "GR", step.GR);
    }
    return kExitOk;
}

int cmd_run(const std::vector<std::string>& files, std::size_t max_steps,
            const std::string& strategy, const std::string& dot_dir) {
    if (files.size() < 2) {
        std::cerr << "error: run needs at least one rule file and a graph file\n";
        return kExitInputError;
    }
    std::vector<PbpoRule> rules;
    for (std::size_t i = 0; i + 1 < files.size(); ++i)
        rules.push_back(parse_rule(read_file(files[i])));
    GraphFile gf = parse_graph(read_file(files.back()));

    Strategy strat;
    if (strategy == "first")
        strat = Strategy::FirstMatch;
    else if (strategy == "bfs")
        strat = Strategy::AllBranchesBfs;
    else {
        std::cerr << "error: unknown strategy '" << strategy << "'\n";
        return kExitInputError;
    }
    RewriteTrace trace = rewrite_bounded(rules, gf.graph, max_steps, strat);
    if (strat == Strategy::FirstMatch) {
        std::cout << trace.steps.size() << " step(s), bound "
                  << (trace.bound_hit ? "hit" : "not hit") << "\n";
        LabeledGraph out = trace.final_graph;
        out.set_name("final");
        std::cout << graph_to_text(out);
        if (!dot_dir.empty()) write_dot(dot_dir, "final", out);
    } else {
        std::cout << trace.explored << " graph(s) explored, depth " << trace.max_depth_reached
                  << ", bound " << (trace.bound_hit ? "hit" : "not hit") << "\n";
        std::cout << trace.normal_forms.size() << " normal form(s)\n";
        for (std::size_t i = 0; i < trace.normal_forms.size(); ++i) {
            LabeledGraph out = trace.normal_forms[i];
            out.set_name("nf" + std::to_string(i));
            std::cout << graph_to_text(out);
            if (!dot_dir.empty()) write_dot(dot_dir, out.name(), out);
        }
    }
    return kExitOk;
}

int cmd_zones(const std::string& trs_file, const std::string& graph_file,
              const std::string& dot_file) {
    Trs trs = parse_trs(read_file(trs_file));
    GraphFile gf = parse_graph(read_file(graph_file));
    Zoning z = compute_zoning(trs.signature, gf.graph);
    for (const auto& zid : z.zone_ids()) {
        std::cout << "zone " << zid << ":";
        for (const auto& [vn, id] : z.zone_of_vertex)
            if (id == zid) std::cout << " " << vn;
        auto root = z.roots.at(zid);
        std::cout << " | root " << (root ? *root : std::string("(none)"));
        auto term = zone_to_term(trs.signature, gf.graph, z, zid);
        std::cout << " | term " << (term ? term->str() : std::string("(cyclic)")) << "\n";
    }
    std::cout << "bridges:";
    for (const auto& b : z.bridges) std::cout << " " << b;
    std::cout << "\n";
    if (!dot_file.empty()) write_file(dot_file, to_dot(gf.graph, gf.root, &z));
    return kExitOk;
}

int cmd_dropcycles(const std::string& graph_file) {
    GraphFile gf = parse_graph(read_file(graph_file));
    LabeledGraph out = drop_cycles(gf.graph);
    std::cout << graph_to_text(out, gf.root);
    return kExitOk;
}

int cmd_check(const std::string& trs_file, std::uint64_t seed, int samples, int max_size,
              const std::string& probe_file) {
    Trs trs = parse_trs(read_file(trs_file));
    RandomGen gen(seed);
    std::vector<SuiteResult> results;
    results.push_back(check_step_preserving(trs, gen, samples, max_size));
    results.push_back(check_closed(trs, gen, std::max(1, samples / 4), max_size, 3));
    results.push_back(check_match_determinism(trs, gen, samples, max_size));
    results.push_back(check_drop_cycles(trs, gen, samples, max_size));
    results.push_back(check_zoning(trs, gen, samples, max_size));
    results.push_back(check_bad_node_relabel(trs, gen, std::max(1, samples / 2), max_size));
    results.push_back(check_match_zone_boundary(trs, gen, samples, max_size));

    bool failed = false;
    for (const auto& r : results) {
        std::cout << r.name << ": " << r.samples << " samples, " << r.failures << " failure(s)\n";
        for (const auto& m : r.messages) std::cout << "  counterexample: " << m << "\n";
        failed |= !r.passed();
    }
    if (!probe_file.empty()) {
        GraphFile gf = parse_graph(read_file(probe_file));
        std::vector<PbpoRule> rules;
        for (const auto& er : encode_system(trs)) rules.push_back(er.rule);
        RewriteTrace trace = rewrite_bounded(rules, gf.graph, 50, Strategy::AllBranchesBfs);
        std::cout << "probe: " << trace.normal_forms.size() << " normal form(s)\n";
        for (const auto& nf : trace.normal_forms) {
            auto t = decode_term(trs.signature, nf);
            if (t)
                std::cout << "  normal form: " << t->str() << "\n";
            else
                std::cout << "  normal form (not a term encoding):\n" << graph_to_text(nf);
        }
    }
    return failed ? kExitCounterexample : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PBPO+ rewriting over lattice-labeled graphs"};
    app.require_subcommand(1);

    std::string trs_file, graph_file, rule_file, out_dir, dot_dir, dot_file, probe_file;
    std::vector<std::string> run_files;
    int rule_index = -1, match_index = 0;
    std::size_t max_steps = 1000;
    std::string strategy = "first";
    std::uint64_t seed = 2024;
    int samples = 200;
    int max_size = 8;

    auto* enc = app.add_subcommand("encode", "Encode TRS rules as PBPO+ rules");
    enc->add_option("trs", trs_file, "TRS file")->required();
    enc->add_option("--rule", rule_index, "only this rule index");
    enc->add_option("--out-dir", out_dir, "write rule/graph files here");
    enc->add_option("--dot-dir", dot_dir, "write DOT files here");

    auto* dec = app.add_subcommand("decode", "Decode a graph back to a term");
    dec->add_option("trs", trs_file, "TRS file (signature)")->required();
    dec->add_option("graph", graph_file, "graph file")->required();

    auto* stp = app.add_subcommand("step", "Apply one rule step to a graph");
    stp->add_option("rule", rule_file, "PBPO+ rule file")->required();
    stp->add_option("graph", graph_file, "graph file")->required();
    stp->add_option("--match", match_index, "match index (default 0)");
    stp->add_option("--dot-dir", dot_dir, "write DOT files here");

    auto* run = app.add_subcommand("run", "Rewrite a graph with rule files");
    run->add_option("files", run_files, "rule files..., then the graph file")->required();
    run->add_option("--max-steps", max_steps, "step/depth bound (default 1000)");
    run->add_option("--strategy", strategy, "first|bfs (default first)");
    run->add_option("--dot-dir", dot_dir, "write DOT files here");

    auto* zon = app.add_subcommand("zones", "Zoning analysis of a graph");
    zon->add_option("trs", trs_file, "TRS file (signature)")->required();
    zon->add_option("graph", graph_file, "graph file")->required();
    zon->add_option("--dot", dot_file, "write a clustered DOT file");

    auto* dc = app.add_subcommand("dropcycles", "Remove all undirected cycle edges");
    dc->add_option("graph", graph_file, "graph file")->required();

    auto* chk = app.add_subcommand("check", "Run the randomized property suites");
    chk->add_option("trs", trs_file, "TRS file")->required();
    chk->add_option("--seed", seed, "RNG seed (default 2024)");
    chk->add_option("--samples", samples, "samples per suite (default 200)");
    chk->add_option("--max-size", max_size, "max term symbols / graph vertices (default 8)");
    chk->add_option("--probe-graph", probe_file, "explore this graph and report normal forms");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed()) return cmd_encode(trs_file, rule_index, out_dir, dot_dir);
        if (dec->parsed()) return cmd_decode(trs_file, graph_file);
        if (stp->parsed()) return cmd_step(rule_file, graph_file, match_index, dot_dir);
        if (run->parsed()) return cmd_run(run_files, max_steps, strategy, dot_dir);
        if (zon->parsed()) return cmd_zones(trs_file, graph_file, dot_file);
        if (dc->parsed()) return cmd_dropcycles(graph_file);
        if (chk->parsed()) return cmd_check(trs_file, seed, samples, max_size, probe_file);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCounterexample;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
