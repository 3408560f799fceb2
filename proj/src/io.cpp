#include "pbpo/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace pbpo {

RootedGraph GraphFile::rooted() const {
    if (!root) throw std::invalid_argument("graph '" + graph.name() + "' has no root line");
    return RootedGraph{graph, *root};
}

namespace {

Label parse_label_or_throw(int lineno, const std::string& text) {
    auto l = Label::parse(text);
    if (!l) throw ParseError(lineno, "bad label '" + text + "'");
    return *l;
}

// '#' starts a comment only at a token boundary; freshened identifiers like
// "x#1" contain '#' mid-token.
std::vector<std::string> tokenize_line(std::string line) {
    auto hash = line.find('#');
    while (hash != std::string::npos && hash > 0 &&
           !std::isspace(static_cast<unsigned char>(line[hash - 1])))
        hash = line.find('#', hash + 1);
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    GraphFile out;
    bool have_header = false;
    std::optional<std::string> root_name;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = tokenize_line(line);
        if (t.empty()) continue;
        try {
            if (t[0] == "graph" && t.size() == 2) {
                if (have_header) throw ParseError(lineno, "second 'graph' header");
                out.graph.set_name(t[1]);
                have_header = true;
            } else if (t[0] == "v" && t.size() == 3) {
                out.graph.add_vertex(t[1], parse_label_or_throw(lineno, t[2]));
            } else if (t[0] == "e" && t.size() == 5) {
                out.graph.add_edge(t[1], t[2], t[3], parse_label_or_throw(lineno, t[4]));
            } else if (t[0] == "root" && t.size() == 2) {
                root_name = t[1];
            } else {
                throw ParseError(lineno, "unrecognized graph line");
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_header) throw ParseError(1, "missing 'graph <name>' header");
    if (root_name) {
        auto r = out.graph.vertex(*root_name);
        if (!r) throw ParseError(lineno, "root '" + *root_name + "' is not a vertex");
        out.root = *r;
    }
    return out;
}

std::string graph_to_text(const LabeledGraph& g, std::optional<int> root) {
    std::string out = "graph " + g.name() + "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "v " + g.vertex_name(v) + " " + g.vertex_label(v).str() + "\n";
    for (int e = 0; e < g.edge_count(); ++e)
        out += "e " + g.edge_name(e) + " " + g.vertex_name(g.src(e)) + " " +
               g.vertex_name(g.tgt(e)) + " " + g.edge_label(e).str() + "\n";
    if (root) out += "root " + g.vertex_name(*root) + "\n";
    return out;
}

PbpoRule parse_rule(const std::string& text) {
    // Split into sections on 'graph'/'morphism' headers.
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::map<std::string, LabeledGraph> graphs;
    struct MorphismLines {
        int lineno;
        std::string dom, cod;
        std::vector<std::pair<std::string, std::string>> vpairs, epairs;
    };
    std::map<std::string, MorphismLines> morphisms;
    std::string section;       // "graph" or "morphism"
    std::string section_name;  // graph name or morphism name

    auto handle = [&](const std::vector<std::string>& t) {
        if (t[0] == "graph") {
            if (t.size() != 2) throw ParseError(lineno, "expected 'graph <name>'");
            if (graphs.count(t[1])) throw ParseError(lineno, "duplicate graph '" + t[1] + "'");
            graphs.emplace(t[1], LabeledGraph(t[1]));
            section = "graph";
            section_name = t[1];
        } else if (t[0] == "morphism") {
            if (t.size() != 4) throw ParseError(lineno, "expected 'morphism <name> <dom> <cod>'");
            if (morphisms.count(t[1]))
                throw ParseError(lineno, "duplicate morphism '" + t[1] + "'");
            morphisms[t[1]] = MorphismLines{lineno, t[2], t[3], {}, {}};
            section = "morphism";
            section_name = t[1];
        } else if (section == "graph") {
            LabeledGraph& g = graphs.at(section_name);
            if (t[0] == "v" && t.size() == 3)
                g.add_vertex(t[1], parse_label_or_throw(lineno, t[2]));
            else if (t[0] == "e" && t.size() == 5)
                g.add_edge(t[1], t[2], t[3], parse_label_or_throw(lineno, t[4]));
            else if (t[0] == "root" && t.size() == 2)
                ;  // roots are not part of the rule proper; tolerated
            else
                throw ParseError(lineno, "unrecognized graph line");
        } else if (section == "morphism") {
            MorphismLines& m = morphisms.at(section_name);
            if (t[0] == "v" && t.size() == 3)
                m.vpairs.emplace_back(t[1], t[2]);
            else if (t[0] == "e" && t.size() == 3)
                m.epairs.emplace_back(t[1], t[2]);
            else
                throw ParseError(lineno, "unrecognized morphism line");
        } else {
            throw ParseError(lineno, "expected a 'graph' or 'morphism' header");
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto t = tokenize_line(line);
        if (t.empty()) continue;
        try {
            handle(t);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }

    for (const char* need : {"L", "K", "R", "Lp", "Kp"})
        if (!graphs.count(need)) throw ParseError(lineno, std::string("missing graph ") + need);

    auto build = [&](const char* name, const LabeledGraph& dom,
                     const LabeledGraph& cod) -> GraphMorphism {
        auto it = morphisms.find(name);
        if (it == morphisms.end())
            throw ParseError(lineno, std::string("missing morphism ") + name);
        const MorphismLines& m = it->second;
        if (m.dom != dom.name() || m.cod != cod.name())
            throw ParseError(m.lineno, std::string("morphism ") + name + " must map " +
                                           dom.name() + " to " + cod.name());
        GraphMorphism f{dom, cod, std::vector<int>(dom.vertex_count(), -1),
                        std::vector<int>(dom.edge_count(), -1)};
        for (const auto& [from, to] : m.vpairs) {
            auto dv = dom.vertex(from), cv = cod.vertex(to);
            if (!dv) throw ParseError(m.lineno, "unknown vertex '" + from + "' in " + dom.name());
            if (!cv) throw ParseError(m.lineno, "unknown vertex '" + to + "' in " + cod.name());
            f.vmap[*dv] = *cv;
        }
        for (const auto& [from, to] : m.epairs) {
            auto de = dom.edge(from), ce = cod.edge(to);
            if (!de) throw ParseError(m.lineno, "unknown edge '" + from + "' in " + dom.name());
            if (!ce) throw ParseError(m.lineno, "unknown edge '" + to + "' in " + cod.name());
            f.emap[*de] = *ce;
        }
        for (int v = 0; v < dom.vertex_count(); ++v)
            if (f.vmap[v] < 0)
                throw ParseError(m.lineno, std::string("morphism ") + name +
                                               " misses vertex '" + dom.vertex_name(v) + "'");
        for (int e = 0; e < dom.edge_count(); ++e)
            if (f.emap[e] < 0)
                throw ParseError(m.lineno, std::string("morphism ") + name + " misses edge '" +
                                               dom.edge_name(e) + "'");
        return f;
    };

    PbpoRule rule;
    rule.L = graphs.at("L");
    rule.K = graphs.at("K");
    rule.R = graphs.at("R");
    rule.Lp = graphs.at("Lp");
    rule.Kp = graphs.at("Kp");
    rule.l = build("l", rule.K, rule.L);
    rule.r = build("r", rule.K, rule.R);
    rule.lp = build("lp", rule.Kp, rule.Lp);
    rule.tL = build("tL", rule.L, rule.Lp);
    rule.tK = build("tK", rule.K, rule.Kp);

    auto problems = validate_rule(rule);
    if (!problems.empty()) throw ParseError(lineno, "invalid rule: " + problems.front());
    return rule;
}

namespace {

std::string morphism_block(const char* name, const GraphMorphism& f, const std::string& dom,
                           const std::string& cod) {
    std::string out = std::string("morphism ") + name + " " + dom + " " + cod + "\n";
    for (int v = 0; v < f.dom.vertex_count(); ++v)
        out += "v " + f.dom.vertex_name(v) + " " + f.cod.vertex_name(f.vmap[v]) + "\n";
    for (int e = 0; e < f.dom.edge_count(); ++e)
        out += "e " + f.dom.edge_name(e) + " " + f.cod.edge_name(f.emap[e]) + "\n";
    return out;
}

}  // namespace

std::string rule_to_text(const PbpoRule& rule) {
    std::string out;
    auto block = [&](const char* name, const LabeledGraph& g) {
        LabeledGraph copy = g;
        copy.set_name(name);
        out += graph_to_text(copy) + "\n";
    };
    block("L", rule.L);
    block("K", rule.K);
    block("R", rule.R);
    block("Lp", rule.Lp);
    block("Kp", rule.Kp);
    out += morphism_block("l", rule.l, "K", "L") + "\n";
    out += morphism_block("r", rule.r, "K", "R") + "\n";
    out += morphism_block("lp", rule.lp, "Kp", "Lp") + "\n";
    out += morphism_block("tL", rule.tL, "L", "Lp") + "\n";
    out += morphism_block("tK", rule.tK, "K", "Kp");
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const LabeledGraph& g, std::optional<int> root, const Zoning* zoning) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(g.name()) << "\" {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";

    auto vertex_line = [&](int v, const std::string& indent) {
        out << indent << "\"" << dot_escape(g.vertex_name(v)) << "\" [label=\""
            << dot_escape(g.vertex_name(v) + "^" + g.vertex_label(v).str()) << "\"";
        if (g.vertex_label(v).is_top()) out << ", color=gray60, fontcolor=gray60";
        if (root && *root == v) out << ", peripheries=2";
        out << "];\n";
    };

    if (zoning) {
        int cluster = 0;
        for (const auto& zid : zoning->zone_ids()) {
            out << "  subgraph cluster_" << cluster++ << " {\n";
            out << "    label=\"zone " << dot_escape(zid) << "\"; color=gray;\n";
            for (int v = 0; v < g.vertex_count(); ++v)
                if (zoning->zone_of_vertex.at(g.vertex_name(v)) == zid) vertex_line(v, "    ");
            out << "  }\n";
        }
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) vertex_line(v, "  ");
    }

    for (int e = 0; e < g.edge_count(); ++e) {
        out << "  \"" << dot_escape(g.vertex_name(g.src(e))) << "\" -> \""
            << dot_escape(g.vertex_name(g.tgt(e))) << "\" [label=\""
            << dot_escape(g.edge_label(e).str()) << "\"";
        if (g.edge_label(e).is_top()) out << ", color=gray60, fontcolor=gray60";
        if (zoning && zoning->bridges.count(g.edge_name(e))) out << ", style=dotted";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace pbpo
