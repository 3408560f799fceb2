#pragma once

// Hand-built fixture graphs and rules used across tests: the hard-overwrite
// example, the f(x,g(b),y) -> h(g(y),a) encoding, the 3-zone graph and the
// confluence counterexample graph.

#include "pbpo/encoding.hpp"
#include "pbpo/pbpo_rule.hpp"
#include "pbpo/term.hpp"

namespace fixtures {

using namespace pbpo;

inline Label T() { return Label::top(); }
inline Label B() { return Label::bottom(); }
inline Label S(const char* s) { return Label::symbol(s); }
inline Label I(int i) { return Label::index(i); }

// Rule that matches a loopless node x in any context, hard-overwrites its
// label to c and deletes its incident edges. Edges carry top ("unlabeled").
struct HardOverwrite {
    PbpoRule rule;
    LabeledGraph GL, GK_expected, GR_expected, Rp_expected;

    HardOverwrite() {
        LabeledGraph L("L"), K("K"), R("R"), Lp("Lp"), Kp("Kp");
        L.add_vertex("x", B());
        K.add_vertex("x", B());
        R.add_vertex("x", S("c"));
        Lp.add_vertex("x", T());
        Lp.add_vertex("z", T());
        Lp.add_edge("x>z", "x", "z", T());
        Lp.add_edge("z>x", "z", "x", T());
        Lp.add_edge("z>z", "z", "z", T());
        Kp.add_vertex("x", B());
        Kp.add_vertex("z", T());
        Kp.add_edge("z>z", "z", "z", T());

        auto by_name = [](const LabeledGraph& dom, const LabeledGraph& cod) {
            GraphMorphism f{dom, cod, {}, {}};
            f.vmap.resize(dom.vertex_count());
            f.emap.resize(dom.edge_count());
            for (int v = 0; v < dom.vertex_count(); ++v)
                f.vmap[v] = *cod.vertex(dom.vertex_name(v));
            for (int e = 0; e < dom.edge_count(); ++e)
                f.emap[e] = *cod.edge(dom.edge_name(e));
            return f;
        };
        rule.name = "hard-overwrite";
        rule.L = L;
        rule.K = K;
        rule.R = R;
        rule.Lp = Lp;
        rule.Kp = Kp;
        rule.l = by_name(K, L);
        rule.r = by_name(K, R);
        rule.lp = by_name(Kp, Lp);
        rule.tL = by_name(L, Lp);
        rule.tK = by_name(K, Kp);

        GL.set_name("GL");
        GL.add_vertex("x", S("a"));
        GL.add_vertex("z1", S("b"));
        GL.add_vertex("z2", S("c"));
        GL.add_edge("e1", "x", "z1", T());
        GL.add_edge("e2", "x", "z1", T());
        GL.add_edge("e3", "z1", "z2", T());
        GL.add_edge("e4", "z2", "x", T());
        GL.add_edge("e5", "z2", "z2", T());

        GK_expected.set_name("GK");
        GK_expected.add_vertex("x", B());
        GK_expected.add_vertex("z1", S("b"));
        GK_expected.add_vertex("z2", S("c"));
        GK_expected.add_edge("e3", "z1", "z2", T());
        GK_expected.add_edge("e5", "z2", "z2", T());

        GR_expected.set_name("GR");
        GR_expected.add_vertex("x", S("c"));
        GR_expected.add_vertex("z1", S("b"));
        GR_expected.add_vertex("z2", S("c"));
        GR_expected.add_edge("e3", "z1", "z2", T());
        GR_expected.add_edge("e5", "z2", "z2", T());

        Rp_expected.set_name("Rp");
        Rp_expected.add_vertex("x", S("c"));
        Rp_expected.add_vertex("z", T());
        Rp_expected.add_edge("z>z", "z", "z", T());
    }
};

// Signature and rule of the worked encoding figure.
inline Trs paper_rule_trs() {
    Trs trs;
    trs.signature.add("f", 3);
    trs.signature.add("g", 1);
    trs.signature.add("h", 2);
    trs.signature.add("a", 0);
    trs.signature.add("b", 0);
    Term lhs = Term::app("f", {Term::var("x"), Term::app("g", {Term::app("b")}), Term::var("y")});
    Term rhs = Term::app("h", {Term::app("g", {Term::var("y")}), Term::app("a")});
    trs.rules.push_back({lhs, rhs});
    return trs;
}

// The five expected graphs of the rule-encoding figure plus derived Rp.
struct PaperRuleFigure {
    LabeledGraph L, K, R, Lp, Kp, Rp;

    PaperRuleFigure() {
        L.set_name("L");
        L.add_vertex("eps", S("f"));
        L.add_vertex("x", B());
        L.add_vertex("2", S("g"));
        L.add_vertex("21", S("b"));
        L.add_vertex("y", B());
        L.add_edge("eps>x", "eps", "x", I(1));
        L.add_edge("eps>2", "eps", "2", I(2));
        L.add_edge("eps>y", "eps", "y", I(3));
        L.add_edge("2>21", "2", "21", I(1));

        K.set_name("K");
        K.add_vertex("eps", B());
        K.add_vertex("y", B());

        R.set_name("R");
        R.add_vertex("eps", S("h"));
        R.add_vertex("1", S("g"));
        R.add_vertex("y", B());
        R.add_vertex("2", S("a"));
        R.add_edge("eps>1", "eps", "1", I(1));
        R.add_edge("eps>2", "eps", "2", I(2));
        R.add_edge("1>y", "1", "y", I(1));

        Lp.set_name("Lp");
        Lp.add_vertex("eps", S("f"));
        Lp.add_vertex("x", T());
        Lp.add_vertex("2", S("g"));
        Lp.add_vertex("21", S("b"));
        Lp.add_vertex("y", T());
        Lp.add_vertex("x'", T());
        Lp.add_vertex("y'", T());
        Lp.add_vertex("C", T());
        Lp.add_edge("eps>x", "eps", "x", I(1));
        Lp.add_edge("eps>2", "eps", "2", I(2));
        Lp.add_edge("eps>y", "eps", "y", I(3));
        Lp.add_edge("2>21", "2", "21", I(1));
        Lp.add_edge("x>x'", "x", "x'", T());
        Lp.add_edge("x'>x'", "x'", "x'", T());
        Lp.add_edge("y>y'", "y", "y'", T());
        Lp.add_edge("y'>y'", "y'", "y'", T());
        Lp.add_edge("C>eps", "C", "eps", T());
        Lp.add_edge("C>C", "C", "C", T());

        Kp.set_name("Kp");
        Kp.add_vertex("eps", B());
        Kp.add_vertex("y", T());
        Kp.add_vertex("y'", T());
        Kp.add_vertex("C", T());
        Kp.add_edge("y>y'", "y", "y'", T());
        Kp.add_edge("y'>y'", "y'", "y'", T());
        Kp.add_edge("C>eps", "C", "eps", T());
        Kp.add_edge("C>C", "C", "C", T());

        Rp.set_name("Rp");
        Rp.add_vertex("eps", S("h"));
        Rp.add_vertex("1", S("g"));
        Rp.add_vertex("y", T());
        Rp.add_vertex("2", S("a"));
        Rp.add_vertex("y'", T());
        Rp.add_vertex("C", T());
        Rp.add_edge("eps>1", "eps", "1", I(1));
        Rp.add_edge("eps>2", "eps", "2", I(2));
        Rp.add_edge("1>y", "1", "y", I(1));
        Rp.add_edge("y>y'", "y", "y'", T());
        Rp.add_edge("y'>y'", "y'", "y'", T());
        Rp.add_edge("C>eps", "C", "eps", T());
        Rp.add_edge("C>C", "C", "C", T());
    }
};

// f -> a <- f with #f = 1, #a = 0: three zones, both edges bridges.
struct ThreeZone {
    Signature sig;
    LabeledGraph g;

    ThreeZone() {
        sig.add("f", 1);
        sig.add("a", 0);
        g.set_name("threezone");
        g.add_vertex("f1", S("f"));
        g.add_vertex("a0", S("a"));
        g.add_vertex("f2", S("f"));
        g.add_edge("e1", "f1", "a0", I(1));
        g.add_edge("e2", "f2", "a0", I(1));
    }
};

// g -> f -> a <- f <- h over {f,g,h,a,b}: the confluence counterexample.
struct ConfluenceFixture {
    Trs trs;
    LabeledGraph g;

    ConfluenceFixture() {
        trs.signature.add("f", 1);
        trs.signature.add("g", 1);
        trs.signature.add("h", 1);
        trs.signature.add("a", 0);
        trs.signature.add("b", 0);
        trs.rules.push_back({Term::app("g", {Term::var("x")}), Term::app("a")});
        trs.rules.push_back({Term::app("h", {Term::var("x")}), Term::app("b")});
        g.set_name("gfafh");
        g.add_vertex("vg", S("g"));
        g.add_vertex("vf1", S("f"));
        g.add_vertex("va", S("a"));
        g.add_vertex("vf2", S("f"));
        g.add_vertex("vh", S("h"));
        g.add_edge("e1", "vg", "vf1", I(1));
        g.add_edge("e2", "vf1", "va", I(1));
        g.add_edge("e3", "vf2", "va", I(1));
        g.add_edge("e4", "vh", "vf2", I(1));
    }
};

inline Trs swap_trs() {
    Trs trs;
    trs.signature.add("a", 1);
    trs.signature.add("b", 1);
    trs.signature.add("c", 0);
    trs.rules.push_back(
        {Term::app("a", {Term::app("b", {Term::var("x")})}),
         Term::app("b", {Term::app("a", {Term::var("x")})})});
    return trs;
}

}  // namespace fixtures
