#include "pbpo/encoding.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pbpo {

std::optional<int> TermEncoding::vertex_at(const Position& p) const {
    for (const auto& [name, pos] : position_of)
        if (pos == p) return rooted.graph.vertex(name);
    return std::nullopt;
}

TermEncoding encode_term(const Signature& sig, const Term& t) {
    check_term(sig, t);
    if (!is_linear(t))
        throw std::invalid_argument("cannot encode non-linear term " + t.str());

    TermEncoding enc;
    LabeledGraph g("enc");
    std::function<std::string(const Term&, const Position&)> build =
        [&](const Term& u, const Position& p) -> std::string {
        if (u.is_var()) {
            std::string name = g.fresh_vertex_name(u.head());
            g.add_vertex(name, Label::bottom());
            enc.position_of[name] = p;
            enc.variable_heads.insert(name);
            enc.head_of_variable[u.head()] = name;
            return name;
        }
        std::string name = position_str(p);
        g.add_vertex(name, Label::symbol(u.head()));
        enc.position_of[name] = p;
        for (std::size_t i = 0; i < u.args().size(); ++i) {
            Position q = p;
            q.push_back(static_cast<int>(i + 1));
            std::string child = build(u.args()[i], q);
            g.add_edge(g.fresh_edge_name(name + ">" + child), name, child,
                       Label::index(static_cast<int>(i + 1)));
        }
        return name;
    };
    std::string root = build(t, {});
    int root_idx = *g.vertex(root);
    enc.rooted = RootedGraph{std::move(g), root_idx};
    return enc;
}

namespace {

std::optional<Term> decode_impl(const Signature& sig, const LabeledGraph& g, int root) {
    if (g.in_degree(root) != 0) return std::nullopt;

    std::vector<bool> visited(g.vertex_count(), false);
    std::vector<std::string> leaf_names;  // leftmost order
    bool uses_fallback_names = false;

    std::function<std::optional<Term>(int)> build = [&](int v) -> std::optional<Term> {
        if (visited[v]) return std::nullopt;  // sharing or a cycle
        visited[v] = true;
        const Label& l = g.vertex_label(v);
        if (l.is_bottom()) {
            if (g.out_degree(v) != 0) return std::nullopt;
            leaf_names.push_back(g.vertex_name(v));
            const std::string& n = g.vertex_name(v);
            if (!is_identifier(n) || sig.contains(n)) uses_fallback_names = true;
            return Term::var(n);
        }
        if (!l.is_base() || l.is_index() || !sig.contains(l.base)) return std::nullopt;
        int n = sig.arity(l.base);
        if (g.out_degree(v) != n) return std::nullopt;
        std::vector<int> child(n, -1);
        for (int e : g.out_edges(v)) {
            auto idx = g.edge_label(e).index_value();
            if (!idx || *idx < 1 || *idx > n || child[*idx - 1] != -1) return std::nullopt;
            child[*idx - 1] = g.tgt(e);
        }
        std::vector<Term> args;
        for (int i = 0; i < n; ++i) {
            // Non-root vertices of a tree have exactly one incoming edge.
            if (g.in_degree(child[i]) != 1) return std::nullopt;
            auto sub = build(child[i]);
            if (!sub) return std::nullopt;
            args.push_back(std::move(*sub));
        }
        return Term::app(l.base, std::move(args));
    };

    auto term = build(root);
    if (!term) return std::nullopt;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!visited[v]) return std::nullopt;  // disconnected part

    if (uses_fallback_names) {
        std::map<std::string, Term> rename;
        int next = 1;
        for (const std::string& leaf : leaf_names) {
            std::string fresh;
            do {
                fresh = "x" + std::to_string(next++);
            } while (sig.contains(fresh));
            rename.emplace(leaf, Term::var(fresh));
        }
        term = apply_substitution(*term, rename);
    }
    return term;
}

}  // namespace

std::optional<Term> decode_term(const Signature& sig, const RootedGraph& g) {
    return decode_impl(sig, g.graph, g.root);
}

std::optional<Term> decode_term(const Signature& sig, const LabeledGraph& g) {
    int root = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.in_degree(v) == 0) {
            if (root != -1) return std::nullopt;
            root = v;
        }
    }
    if (root == -1) return std::nullopt;
    return decode_impl(sig, g, root);
}

ClosureResult upper_context_closure(const RootedGraph& g) {
    ClosureResult res;
    LabeledGraph cg = g.graph;
    std::string c = cg.fresh_vertex_name("C");
    cg.add_vertex(c, Label::top());
    res.context_edge = cg.fresh_edge_name(c + ">" + g.root_name());
    cg.add_edge(res.context_edge, c, g.root_name(), Label::top());
    res.context_loop = cg.fresh_edge_name(c + ">" + c);
    cg.add_edge(res.context_loop, c, c, Label::top());
    res.context_vertex = c;
    res.rooted = RootedGraph{std::move(cg), g.root};
    return res;
}

ClosureResult lower_context_closure(const RootedGraph& g, const std::set<std::string>& xs) {
    ClosureResult res;
    LabeledGraph cg = g.graph;
    for (const std::string& x : xs) {
        auto v = cg.vertex(x);
        if (!v) throw std::invalid_argument("lower closure: unknown vertex '" + x + "'");
        cg = cg.with_vertex_label(*v, Label::top());
        std::string primed = cg.fresh_vertex_name(x + "'");
        cg.add_vertex(primed, Label::top());
        std::string link = cg.fresh_edge_name(x + ">" + primed);
        cg.add_edge(link, x, primed, Label::top());
        std::string loop = cg.fresh_edge_name(primed + ">" + primed);
        cg.add_edge(loop, primed, primed, Label::top());
        res.primed_of[x] = primed;
        res.link_edge_of[x] = link;
        res.loop_edge_of[x] = loop;
    }
    res.rooted = RootedGraph{std::move(cg), g.root};
    return res;
}

namespace {

struct Interface {
    RootedGraph rooted;
    std::map<std::string, std::string> vertex_of_variable;
};

Interface build_interface(const Term& t) {
    Interface iface;
    LabeledGraph g("iface");
    g.add_vertex("eps", Label::bottom());
    for (const std::string& x : variables_of(t)) {
        std::string name = g.fresh_vertex_name(x);
        g.add_vertex(name, Label::bottom());
        iface.vertex_of_variable[x] = name;
    }
    iface.rooted = RootedGraph{std::move(g), 0};
    return iface;
}

}  // namespace

RootedGraph interface_graph(const Term& t) { return build_interface(t).rooted; }

EncodedRule encode_rule(const Signature& sig, const TrsRule& rule) {
    check_rule(sig, rule);

    EncodedRule enc;
    enc.signature = sig;
    enc.source_rule = rule;
    enc.l_encoding = encode_term(sig, rule.lhs);
    enc.r_encoding = encode_term(sig, rule.rhs);
    Interface iface = build_interface(rule.rhs);

    PbpoRule& rho = enc.rule;
    rho.L = enc.l_encoding.graph();
    rho.L.set_name("L");
    rho.R = enc.r_encoding.graph();
    rho.R.set_name("R");
    rho.K = iface.rooted.graph;
    rho.K.set_name("K");

    ClosureResult lower_l =
        lower_context_closure(enc.l_encoding.rooted, enc.l_encoding.variable_heads);
    ClosureResult upper_l = upper_context_closure(lower_l.rooted);
    rho.Lp = upper_l.rooted.graph;
    rho.Lp.set_name("Lp");

    std::set<std::string> iface_vars;
    for (const auto& [var, vn] : iface.vertex_of_variable) iface_vars.insert(vn);
    ClosureResult lower_k = lower_context_closure(iface.rooted, iface_vars);
    ClosureResult upper_k = upper_context_closure(lower_k.rooted);
    rho.Kp = upper_k.rooted.graph;
    rho.Kp.set_name("Kp");

    auto map_by_name = [](const LabeledGraph& dom, const LabeledGraph& cod) {
        GraphMorphism f{dom, cod, {}, {}};
        f.vmap.resize(dom.vertex_count());
        f.emap.resize(dom.edge_count());
        for (int v = 0; v < dom.vertex_count(); ++v) f.vmap[v] = *cod.vertex(dom.vertex_name(v));
        for (int e = 0; e < dom.edge_count(); ++e) f.emap[e] = *cod.edge(dom.edge_name(e));
        return f;
    };

    // Typings are inclusions: closures only added elements and raised labels.
    rho.tL = map_by_name(rho.L, rho.Lp);
    rho.tK = map_by_name(rho.K, rho.Kp);

    // l and r map the interface root to the encoding root and each interface
    // variable to the corresponding variable head.
    auto interface_into = [&](const TermEncoding& target, const LabeledGraph& cod) {
        GraphMorphism f{rho.K, cod, {}, {}};
        f.vmap.resize(rho.K.vertex_count());
        f.vmap[iface.rooted.root] = target.rooted.root;
        for (const auto& [var, vn] : iface.vertex_of_variable)
            f.vmap[*rho.K.vertex(vn)] = *cod.vertex(target.head_of_variable.at(var));
        return f;
    };
    rho.l = interface_into(enc.l_encoding, rho.L);
    rho.r = interface_into(enc.r_encoding, rho.R);

    // lp: root to root, interface variables to the matching heads, closure
    // elements to their counterparts recorded by the closure results.
    GraphMorphism lp{rho.Kp, rho.Lp, {}, {}};
    lp.vmap.assign(rho.Kp.vertex_count(), -1);
    lp.emap.assign(rho.Kp.edge_count(), -1);
    lp.vmap[*rho.Kp.vertex("eps")] = *rho.Lp.vertex(enc.l_encoding.rooted.root_name());
    lp.vmap[*rho.Kp.vertex(upper_k.context_vertex)] = *rho.Lp.vertex(upper_l.context_vertex);
    lp.emap[*rho.Kp.edge(upper_k.context_edge)] = *rho.Lp.edge(upper_l.context_edge);
    lp.emap[*rho.Kp.edge(upper_k.context_loop)] = *rho.Lp.edge(upper_l.context_loop);
    for (const auto& [var, vn] : iface.vertex_of_variable) {
        const std::string& head = enc.l_encoding.head_of_variable.at(var);
        lp.vmap[*rho.Kp.vertex(vn)] = *rho.Lp.vertex(head);
        lp.vmap[*rho.Kp.vertex(lower_k.primed_of.at(vn))] =
            *rho.Lp.vertex(lower_l.primed_of.at(head));
        lp.emap[*rho.Kp.edge(lower_k.link_edge_of.at(vn))] =
            *rho.Lp.edge(lower_l.link_edge_of.at(head));
        lp.emap[*rho.Kp.edge(lower_k.loop_edge_of.at(vn))] =
            *rho.Lp.edge(lower_l.loop_edge_of.at(head));
    }
    rho.lp = std::move(lp);
    rho.name = rule.str();

    auto problems = validate_rule(rho);
    if (!problems.empty())
        throw std::logic_error("encode_rule produced an ill-formed rule (" + rule.str() +
                               "): " + problems.front());
    if (!is_mono(rho.l) || !is_mono(rho.lp))
        throw std::logic_error("encode_rule: l or lp unexpectedly non-monic");
    if (is_mono(rho.r) == rule.rhs.is_var())
        throw std::logic_error("encode_rule: r monicity disagrees with rhs shape");
    return enc;
}

std::vector<EncodedRule> encode_system(const Trs& trs) {
    std::vector<EncodedRule> out;
    for (const TrsRule& r : trs.rules) out.push_back(encode_rule(trs.signature, r));
    return out;
}

CospanResult derived_replacement(const PbpoRule& rule) {
    return pushout(rule.r, rule.tK);
}

}  // namespace pbpo
