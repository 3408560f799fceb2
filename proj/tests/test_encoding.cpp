#include <doctest.h>

#include "pbpo/encoding.hpp"
#include "pbpo/morphism_search.hpp"
#include "pbpo/random_gen.hpp"
#include "support/fixtures.hpp"

using namespace pbpo;

namespace {

bool equal_mod_renaming(const Term& a, const Term& b) { return equal_modulo_renaming(a, b); }

}  // namespace

TEST_CASE("encode_term: constant, single variable, figure term") {
    Trs paper = fixtures::paper_rule_trs();
    const Signature& sig = paper.signature;

    TermEncoding ca = encode_term(sig, Term::app("a"));
    CHECK(ca.graph().vertex_count() == 1);
    CHECK(ca.graph().edge_count() == 0);
    CHECK(ca.graph().vertex_name(ca.rooted.root) == "eps");
    CHECK(ca.graph().vertex_label(ca.rooted.root) == Label::symbol("a"));

    TermEncoding cx = encode_term(sig, Term::var("x"));
    CHECK(cx.graph().vertex_count() == 1);
    CHECK(cx.graph().vertex_name(cx.rooted.root) == "x");
    CHECK(cx.graph().vertex_label(cx.rooted.root) == Label::bottom());
    CHECK(cx.variable_heads.count("x") == 1);

    // f(g(x), a, h(y, b)) adjusted to the signature: use h/2 with (y, b).
    Term t = parse_term("f(g(x), a, h(y, b))", sig);
    TermEncoding enc = encode_term(sig, t);
    const LabeledGraph& g = enc.graph();
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 6);
    REQUIRE(g.vertex("eps"));
    CHECK(g.vertex_label(*g.vertex("eps")) == Label::symbol("f"));
    REQUIRE(g.vertex("1"));
    CHECK(g.vertex_label(*g.vertex("1")) == Label::symbol("g"));
    REQUIRE(g.vertex("3"));
    CHECK(g.vertex_label(*g.vertex("3")) == Label::symbol("h"));
    REQUIRE(g.vertex("x"));
    CHECK(g.vertex_label(*g.vertex("x")) == Label::bottom());
    REQUIRE(g.edge("eps>2"));
    CHECK(g.edge_label(*g.edge("eps>2")) == Label::index(2));
    REQUIRE(g.edge("3>y"));
    CHECK(g.edge_label(*g.edge("3>y")) == Label::index(1));
    CHECK(enc.position_of.at("y") == Position{3, 1});
    CHECK(enc.position_of.at("32") == Position{3, 2});
    CHECK(enc.position_of.at("eps") == Position{});

    CHECK_THROWS_AS(encode_term(sig, parse_term("f(x, x, y)", sig)), std::invalid_argument);
}

TEST_CASE("encode_term output satisfies the encoding invariants") {
    RandomGen gen(41);
    for (int i = 0; i < 60; ++i) {
        Signature sig = gen.random_signature();
        int vc = 0;
        Term t = gen.random_linear_term(sig, gen.pick(1, 8), &vc);
        TermEncoding enc = encode_term(sig, t);
        const LabeledGraph& g = enc.graph();
        // Tree: root has in-degree 0, everything else exactly 1.
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(g.in_degree(v) == (v == enc.rooted.root ? 0 : 1));
        // Labels and arity-complete out-edges.
        for (int v = 0; v < g.vertex_count(); ++v) {
            const Label& l = g.vertex_label(v);
            if (enc.variable_heads.count(g.vertex_name(v))) {
                CHECK(l == Label::bottom());
                CHECK(g.out_degree(v) == 0);
            } else {
                REQUIRE(l.is_base());
                int n = sig.arity(l.base);
                CHECK(g.out_degree(v) == n);
                std::set<int> seen;
                for (int e : g.out_edges(v)) {
                    auto idx = g.edge_label(e).index_value();
                    REQUIRE(idx.has_value());
                    CHECK(seen.insert(*idx).second);
                    CHECK(*idx >= 1);
                    CHECK(*idx <= n);
                }
            }
        }
    }
}

TEST_CASE("decode inverts encode up to renaming") {
    RandomGen gen(43);
    for (int i = 0; i < 80; ++i) {
        Signature sig = gen.random_signature();
        int vc = 0;
        Term t = gen.random_linear_term(sig, gen.pick(1, 8), &vc);
        TermEncoding enc = encode_term(sig, t);
        auto back = decode_term(sig, enc.rooted);
        REQUIRE(back.has_value());
        CHECK(equal_mod_renaming(*back, t));
        // Root inference finds the same term.
        auto inferred = decode_term(sig, enc.graph());
        REQUIRE(inferred.has_value());
        CHECK(equal_mod_renaming(*inferred, t));
    }
}

TEST_CASE("decode rejects non-encodings") {
    fixtures::ThreeZone fx;
    CHECK_FALSE(decode_term(fx.sig, fx.g).has_value());  // two roots

    Signature sig;
    sig.add("f", 1);
    sig.add("a", 0);
    LabeledGraph top("t");
    top.add_vertex("eps", Label::symbol("f"));
    top.add_vertex("1", Label::top());
    top.add_edge("eps>1", "eps", "1", Label::index(1));
    CHECK_FALSE(decode_term(sig, top).has_value());  // top label

    LabeledGraph cycle("c");
    cycle.add_vertex("u", Label::symbol("f"));
    cycle.add_vertex("v", Label::symbol("f"));
    cycle.add_edge("e1", "u", "v", Label::index(1));
    cycle.add_edge("e2", "v", "u", Label::index(1));
    CHECK_FALSE(decode_term(sig, cycle).has_value());  // no root

    LabeledGraph miss("m");
    miss.add_vertex("eps", Label::symbol("f"));
    CHECK_FALSE(decode_term(sig, miss).has_value());  // missing argument edge

    LabeledGraph varleaf("v");
    varleaf.add_vertex("w", Label::bottom());
    auto t = decode_term(sig, varleaf);
    REQUIRE(t.has_value());
    CHECK(t->is_var());
}

TEST_CASE("upper context closure") {
    Signature sig;
    sig.add("a", 0);
    TermEncoding enc = encode_term(sig, Term::app("a"));
    ClosureResult up = upper_context_closure(enc.rooted);
    CHECK(up.rooted.graph.vertex_count() == 2);
    CHECK(up.rooted.graph.edge_count() == 2);
    CHECK(up.context_vertex == "C");
    CHECK(up.rooted.root_name() == "eps");
    CHECK(up.rooted.graph.vertex_label(*up.rooted.graph.vertex("C")) == Label::top());

    // Applying twice is not idempotent: a second context vertex appears.
    ClosureResult twice = upper_context_closure(up.rooted);
    CHECK(twice.rooted.graph.vertex_count() == 3);
    CHECK(twice.context_vertex == "C#1");
}

TEST_CASE("lower context closure") {
    Trs paper = fixtures::paper_rule_trs();
    const Signature& sig = paper.signature;
    Term t = parse_term("f(g(x), a, h(y, b))", sig);
    TermEncoding enc = encode_term(sig, t);

    ClosureResult none = lower_context_closure(enc.rooted, {});
    CHECK(none.rooted.graph == enc.graph());

    ClosureResult lo = lower_context_closure(enc.rooted, {"x", "y"});
    const LabeledGraph& g = lo.rooted.graph;
    CHECK(g.vertex_count() == enc.graph().vertex_count() + 2);
    CHECK(g.edge_count() == enc.graph().edge_count() + 4);
    CHECK(g.vertex_label(*g.vertex("x")) == Label::top());
    CHECK(g.vertex_label(*g.vertex("x'")) == Label::top());
    REQUIRE(g.edge("x>x'"));
    REQUIRE(g.edge("y'>y'"));

    // Single variable head.
    Signature s2;
    s2.add("a", 0);
    TermEncoding vx = encode_term(s2, Term::var("x"));
    ClosureResult single = lower_context_closure(vx.rooted, {"x"});
    CHECK(single.rooted.graph.vertex_count() == 2);
    CHECK(single.rooted.graph.vertex_label(*single.rooted.graph.vertex("x")) == Label::top());
}

TEST_CASE("interface graph") {
    Trs paper = fixtures::paper_rule_trs();
    Term r = paper.rules[0].rhs;  // h(g(y), a)
    RootedGraph iface = interface_graph(r);
    CHECK(iface.graph.vertex_count() == 2);
    CHECK(iface.graph.edge_count() == 0);
    CHECK(iface.graph.vertex("eps").has_value());
    CHECK(iface.graph.vertex("y").has_value());
    CHECK(iface.root_name() == "eps");

    RootedGraph ground = interface_graph(Term::app("a"));
    CHECK(ground.graph.vertex_count() == 1);

    RootedGraph var = interface_graph(Term::var("x"));
    CHECK(var.graph.vertex_count() == 2);
}

TEST_CASE("encode_rule reproduces the worked figure") {
    Trs paper = fixtures::paper_rule_trs();
    EncodedRule enc = encode_rule(paper.signature, paper.rules[0]);
    fixtures::PaperRuleFigure fig;

    // Exact vertex/edge sets and labels, not just isomorphism.
    CHECK(enc.rule.L == fig.L);
    CHECK(enc.rule.K == fig.K);
    CHECK(enc.rule.R == fig.R);
    CHECK(enc.rule.Lp == fig.Lp);
    CHECK(enc.rule.Kp == fig.Kp);

    // Morphisms are root-to-root and inclusions otherwise.
    CHECK(enc.rule.l.vertex_image("eps") == enc.rule.L.vertex("eps"));
    CHECK(enc.rule.l.vertex_image("y") == enc.rule.L.vertex("y"));
    CHECK(enc.rule.r.vertex_image("eps") == enc.rule.R.vertex("eps"));
    CHECK(enc.rule.r.vertex_image("y") == enc.rule.R.vertex("y"));
    for (int v = 0; v < enc.rule.L.vertex_count(); ++v)
        CHECK(enc.rule.Lp.vertex_name(enc.rule.tL.vmap[v]) == enc.rule.L.vertex_name(v));
    for (int v = 0; v < enc.rule.K.vertex_count(); ++v)
        CHECK(enc.rule.Kp.vertex_name(enc.rule.tK.vmap[v]) == enc.rule.K.vertex_name(v));
    for (int v = 0; v < enc.rule.Kp.vertex_count(); ++v)
        CHECK(enc.rule.Lp.vertex_name(enc.rule.lp.vmap[v]) == enc.rule.Kp.vertex_name(v));

    // Monicity pattern.
    CHECK(is_mono(enc.rule.tL));
    CHECK(is_mono(enc.rule.tK));
    CHECK(is_mono(enc.rule.l));
    CHECK(is_mono(enc.rule.lp));
    CHECK(is_mono(enc.rule.r));  // rhs is not a variable
    CHECK(enc.rule.is_linear());

    // Derived replacement matches the figure.
    CospanResult rp = derived_replacement(enc.rule);
    CHECK(are_isomorphic(rp.apex, fig.Rp).has_value());
}

TEST_CASE("encode_rule handles a variable rhs") {
    Trs trs;
    trs.signature.add("a", 1);
    trs.signature.add("b", 1);
    trs.signature.add("c", 0);
    TrsRule drop{parse_term("a(x)", trs.signature), Term::var("x")};
    EncodedRule enc = encode_rule(trs.signature, drop);
    // R = x alone; r maps both eps and x onto it.
    CHECK(enc.rule.R.vertex_count() == 1);
    CHECK(enc.rule.r.vertex_image("eps") == enc.rule.R.vertex("x"));
    CHECK(enc.rule.r.vertex_image("x") == enc.rule.R.vertex("x"));
    CHECK_FALSE(is_mono(enc.rule.r));
}

TEST_CASE("encode_rule on a(b(x)) -> b(a(x)) and g(x) -> a") {
    Trs swap = fixtures::swap_trs();
    EncodedRule enc = encode_rule(swap.signature, swap.rules[0]);
    CHECK(enc.rule.L.vertex_count() == 3);  // eps^a -> 1^b -> x^bot
    CHECK(enc.rule.L.edge_count() == 2);
    CHECK(enc.rule.K.vertex_count() == 2);
    CHECK(enc.rule.R.vertex_count() == 3);

    Trs conf = fixtures::ConfluenceFixture().trs;
    EncodedRule gx = encode_rule(conf.signature, conf.rules[0]);  // g(x) -> a
    CHECK(gx.rule.K.vertex_count() == 1);  // interface {eps}
    CHECK(gx.rule.R.vertex_count() == 1);  // a
    CHECK(gx.rule.r.vertex_image("eps") == gx.rule.R.vertex("eps"));
}

TEST_CASE("encode_rule rejects bad rules") {
    Trs trs = fixtures::swap_trs();
    CHECK_THROWS_AS(
        encode_rule(trs.signature, TrsRule{Term::var("x"), Term::var("x")}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        encode_rule(trs.signature,
                    TrsRule{parse_term("a(x)", trs.signature), parse_term("b(y)", trs.signature)}),
        std::invalid_argument);
}

TEST_CASE("encoded rule squares are pullbacks") {
    // The canonical pullback of (tL, lp) must be K with projections (l, tK);
    // validate_rule checks that, and the universal verifier agrees.
    Trs swap = fixtures::swap_trs();
    EncodedRule enc = encode_rule(swap.signature, swap.rules[0]);
    CHECK(validate_rule(enc.rule).empty());
    SpanResult cand{enc.rule.K, enc.rule.l, enc.rule.tK};
    CHECK(verify_pullback_universal(enc.rule.tL, enc.rule.lp, cand));
}

TEST_CASE("monic decomposition: l-image sits at the hole position") {
    RandomGen gen(47);
    int found = 0;
    for (int i = 0; i < 40; ++i) {
        Signature sig = gen.random_signature();
        TrsRule rule = gen.random_linear_rule(sig, 4);
        int vc = 0;
        auto [ctx, hole] = gen.random_context(sig, 3, &vc);
        auto sigma = gen.random_substitution(sig, variables_of(rule.lhs), 2, &vc);
        Term s = replace_at(ctx, hole, apply_substitution(rule.lhs, sigma));
        if (!is_linear(s)) continue;
        ++found;
        TermEncoding enc_l = encode_term(sig, rule.lhs);
        TermEncoding enc_s = encode_term(sig, s);
        auto monos = enumerate_morphisms(enc_l.graph(), enc_s.graph(), /*mono_only=*/true);
        bool at_hole = false;
        for (const auto& m : monos) {
            std::string image = enc_s.graph().vertex_name(m.vmap[enc_l.rooted.root]);
            if (enc_s.position_of.at(image) == hole) at_hole = true;
        }
        CHECK(at_hole);
    }
    CHECK(found > 10);
}

TEST_CASE("compose recovers tL from match and adherence") {
    // For the rule a(x) -> x applied to a(b), tL = alpha . m.
    Trs trs;
    trs.signature.add("a", 1);
    trs.signature.add("b", 0);
    TrsRule rule{parse_term("a(x)", trs.signature), Term::var("x")};
    EncodedRule enc = encode_rule(trs.signature, rule);
    Term s = parse_term("a(b)", trs.signature);
    TermEncoding enc_s = encode_term(trs.signature, s);

    auto monos = enumerate_morphisms(enc.rule.L, enc_s.graph(), /*mono_only=*/true);
    REQUIRE(monos.size() == 1);
    // alpha: eps -> eps, 1 (the b node) -> x (relabeled top in Lp).
    MorphismSearchOptions opt;
    for (int v = 0; v < enc.rule.L.vertex_count(); ++v)
        opt.fixed_vertices[monos[0].vmap[v]] = enc.rule.tL.vmap[v];
    for (int e = 0; e < enc.rule.L.edge_count(); ++e)
        opt.fixed_edges[monos[0].emap[e]] = enc.rule.tL.emap[e];
    auto alphas = enumerate_morphisms(enc_s.graph(), enc.rule.Lp, opt);
    REQUIRE(alphas.size() == 1);
    CHECK(compose(monos[0], alphas[0]) == enc.rule.tL);
}

TEST_CASE("encode_system maps every rule") {
    CHECK(encode_system(Trs{fixtures::swap_trs().signature, {}}).empty());
    CHECK(encode_system(fixtures::ConfluenceFixture().trs).size() == 2);
    CHECK(encode_system(fixtures::swap_trs()).size() == 1);
}
