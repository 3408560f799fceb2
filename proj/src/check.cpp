#include "pbpo/check.hpp"

#include <algorithm>
#include <deque>

#include "pbpo/io.hpp"
#include "pbpo/morphism_search.hpp"

namespace pbpo {

void SuiteResult::merge(const SuiteResult& o) {
    samples += o.samples;
    failures += o.failures;
    for (const auto& m : o.messages) messages.push_back(m);
}

void SuiteResult::fail(const std::string& msg) {
    ++failures;
    if (messages.size() < 20) messages.push_back(msg);
}

namespace {

// Builds s = C[l sigma] together with the hole position.
struct StepInstance {
    Term s;
    Term t;
    Position p;
};

StepInstance random_step_instance(const Trs& trs, std::size_t rule_index, RandomGen& gen,
                                  int max_size) {
    const TrsRule& rule = trs.rules[rule_index];
    int var_counter = 0;
    auto [ctx, hole] = gen.random_context(trs.signature, gen.pick(0, max_size / 2), &var_counter);
    auto sigma = gen.random_substitution(trs.signature, variables_of(rule.lhs),
                                         gen.pick(0, max_size / 2), &var_counter);
    Term lhs_inst = apply_substitution(rule.lhs, sigma);
    Term rhs_inst = apply_substitution(rule.rhs, sigma);
    return {replace_at(ctx, hole, lhs_inst), replace_at(ctx, hole, rhs_inst), hole};
}

std::string graph_repro(const LabeledGraph& g) { return graph_to_text(g); }

}  // namespace

SuiteResult check_step_preserving(const Trs& trs, RandomGen& gen, int samples, int max_size) {
    SuiteResult res;
    res.name = "step-preserving";
    if (trs.rules.empty()) return res;
    std::vector<EncodedRule> encoded = encode_system(trs);
    for (int i = 0; i < samples; ++i) {
        std::size_t ri = static_cast<std::size_t>(gen.pick(0, static_cast<int>(trs.rules.size()) - 1));
        StepInstance inst = random_step_instance(trs, ri, gen, max_size);
        ++res.samples;

        auto oracle = rewrite_at(trs, inst.s, ri, inst.p);
        if (!oracle || !(*oracle == inst.t)) {
            res.fail("term oracle disagrees on " + inst.s.str() + " at " + position_str(inst.p));
            continue;
        }
        TermEncoding enc_s = encode_term(trs.signature, inst.s);
        auto result = apply_at_position(encoded[ri], enc_s, inst.p);
        if (!result) {
            res.fail("no graph step for " + inst.s.str() + " -> " + inst.t.str() + " at " +
                     position_str(inst.p) + " via " + trs.rules[ri].str());
            continue;
        }
        TermEncoding enc_t = encode_term(trs.signature, inst.t);
        if (!are_isomorphic(*result, enc_t.graph()))
            res.fail("graph step result differs from " + inst.t.str() + ":\n" +
                     graph_repro(*result));
    }
    return res;
}

SuiteResult check_closed(const Trs& trs, RandomGen& gen, int samples, int max_size, int depth) {
    SuiteResult res;
    res.name = "closed";
    if (trs.rules.empty()) return res;
    std::vector<EncodedRule> encoded = encode_system(trs);
    for (int i = 0; i < samples; ++i) {
        int vc = 0;
        Term start = gen.random_linear_term(trs.signature, gen.pick(1, max_size), &vc);
        ++res.samples;
        struct Node {
            LabeledGraph g;
            Term term;
            int depth;
        };
        // Expand each iso class once; every reachable class still gets all
        // of its outgoing steps checked.
        std::vector<LabeledGraph> expanded_classes;
        auto already_expanded = [&](const LabeledGraph& g) {
            for (const auto& seen : expanded_classes)
                if (are_isomorphic(g, seen)) return true;
            return false;
        };
        std::deque<Node> queue;
        queue.push_back({encode_term(trs.signature, start).graph(), start, 0});
        int expanded = 0;
        while (!queue.empty()) {
            Node node = std::move(queue.front());
            queue.pop_front();
            if (node.depth >= depth) continue;
            if (already_expanded(node.g)) continue;
            expanded_classes.push_back(node.g);
            if (++expanded > 2000) {
                res.fail("exploration overflow from " + start.str());
                break;
            }
            for (std::size_t r = 0; r < encoded.size(); ++r) {
                for (const auto& match : find_matches(encoded[r].rule, node.g)) {
                    LabeledGraph h = apply_step(encoded[r].rule, node.g, match).GR;
                    auto decoded = decode_term(trs.signature, h);
                    if (!decoded) {
                        res.fail("undecodable graph reached from " + start.str() + ":\n" +
                                 graph_repro(h));
                        continue;
                    }
                    // The decoded step must be a real term-level step (up to
                    // the variable renaming decoding introduces).
                    bool legit = false;
                    for (const auto& [ri, p] : all_redexes(trs, node.term)) {
                        auto t = rewrite_at(trs, node.term, ri, p);
                        if (t && equal_modulo_renaming(*t, *decoded)) {
                            legit = true;
                            break;
                        }
                    }
                    if (!legit) {
                        res.fail("decoded step " + node.term.str() + " -> " + decoded->str() +
                                 " is not a term-level step");
                        continue;
                    }
                    queue.push_back({std::move(h), *decoded, node.depth + 1});
                }
            }
        }
    }
    return res;
}

SuiteResult check_match_determinism(const Trs& trs, RandomGen& gen, int samples, int max_size) {
    SuiteResult res;
    res.name = "match-determinism";
    if (trs.rules.empty()) return res;
    std::vector<EncodedRule> encoded = encode_system(trs);
    for (int i = 0; i < samples; ++i) {
        int vc = 0;
        Term s = gen.random_linear_term(trs.signature, gen.pick(1, max_size), &vc);
        ++res.samples;
        TermEncoding enc = encode_term(trs.signature, s);

        std::set<std::pair<std::size_t, Position>> graph_redexes;
        for (std::size_t r = 0; r < encoded.size(); ++r) {
            auto matches = find_matches(encoded[r].rule, enc.graph());
            std::map<int, std::vector<const Match*>> by_root;
            for (const auto& match : matches)
                by_root[match.m.vmap[encoded[r].root_L()]].push_back(&match);
            for (const auto& [root_vertex, group] : by_root) {
                graph_redexes.insert({r, enc.position_of.at(enc.graph().vertex_name(root_vertex))});
                if (group.size() != 1) {
                    res.fail("expected exactly one adherence for " + trs.rules[r].str() + " on " +
                             s.str() + ", found " + std::to_string(group.size()));
                    // Results must at least agree up to iso.
                    LabeledGraph first = apply_step(encoded[r].rule, enc.graph(), *group[0]).GR;
                    for (std::size_t k = 1; k < group.size(); ++k) {
                        LabeledGraph other =
                            apply_step(encoded[r].rule, enc.graph(), *group[k]).GR;
                        if (!are_isomorphic(first, other))
                            res.fail("non-isomorphic results at one position on " + s.str());
                    }
                }
            }
        }
        std::set<std::pair<std::size_t, Position>> term_redexes;
        for (const auto& [r, p] : all_redexes(trs, s)) term_redexes.insert({r, p});
        if (graph_redexes != term_redexes)
            res.fail("match positions disagree with term redexes on " + s.str());
    }
    return res;
}

SuiteResult check_drop_cycles(const Trs& trs, RandomGen& gen, int samples, int max_vertices) {
    SuiteResult res;
    res.name = "drop-cycles";
    if (trs.rules.empty()) return res;
    std::vector<EncodedRule> encoded = encode_system(trs);
    for (int i = 0; i < samples; ++i) {
        LabeledGraph g = gen.chance(0.5) ? gen.random_graph(trs.signature, max_vertices, 10)
                                         : gen.random_termish_graph(trs.signature, max_vertices);
        ++res.samples;
        LabeledGraph dg = drop_cycles(g);
        for (const auto& erule : encoded) {
            for (const auto& match : find_matches(erule.rule, g)) {
                LabeledGraph h = apply_step(erule.rule, g, match).GR;
                LabeledGraph dh = drop_cycles(h);
                bool found = false;
                for (const auto& dmatch : find_matches(erule.rule, dg)) {
                    LabeledGraph candidate = apply_step(erule.rule, dg, dmatch).GR;
                    if (are_isomorphic(candidate, dh)) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    res.fail("drop-cycles does not commute for " + erule.source_rule.str() +
                             " on:\n" + graph_repro(g));
            }
        }
    }
    return res;
}

SuiteResult check_bad_node_relabel(const Trs& trs, RandomGen& gen, int samples,
                                   int max_vertices) {
    SuiteResult res;
    res.name = "bad-node-relabel";
    if (trs.rules.empty()) return res;
    std::vector<EncodedRule> encoded = encode_system(trs);
    for (int i = 0; i < samples; ++i) {
        LabeledGraph g = gen.random_termish_graph(trs.signature, max_vertices);
        auto classes = classify_nodes(trs.signature, g);
        std::vector<int> bad;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!classes[v].good) bad.push_back(v);
        if (bad.empty()) continue;
        ++res.samples;
        int v = bad[gen.pick(0, static_cast<int>(bad.size()) - 1)];
        std::vector<Label> options{Label::bottom(), Label::top(), Label::symbol("f")};
        const Label& to = options[gen.pick(0, 2)];
        LabeledGraph g2 = g.with_vertex_label(v, to);

        for (const auto& erule : encoded) {
            auto m1 = find_matches(erule.rule, g);
            auto m2 = find_matches(erule.rule, g2);
            if (m1.size() != m2.size()) {
                res.fail("match count changed after relabeling bad node '" + g.vertex_name(v) +
                         "' in:\n" + graph_repro(g));
                continue;
            }
            for (std::size_t k = 0; k < m1.size(); ++k) {
                if (m1[k].m.vmap != m2[k].m.vmap || m1[k].m.emap != m2[k].m.emap ||
                    m1[k].alpha.vmap != m2[k].alpha.vmap ||
                    m1[k].alpha.emap != m2[k].alpha.emap) {
                    res.fail("match maps changed after relabeling in:\n" + graph_repro(g));
                    continue;
                }
                RewriteStep s1 = apply_step(erule.rule, g, m1[k]);
                RewriteStep s2 = apply_step(erule.rule, g2, m2[k]);
                // Locate the residual of v and relabel it in the first result.
                int vk = -1;
                for (int x = 0; x < s1.GK.vertex_count(); ++x)
                    if (s1.gL.vmap[x] == v) {
                        vk = x;
                        break;
                    }
                LabeledGraph expected = s1.GR;
                if (vk != -1) expected = expected.with_vertex_label(s1.gR.vmap[vk], to);
                if (!are_isomorphic(expected, s2.GR))
                    res.fail("step results do not correspond after relabeling in:\n" +
                             graph_repro(g));
            }
        }
    }
    return res;
}

namespace {

// Renames edges through a random permutation so the zoning worklist
// processes them in a different order.
LabeledGraph shuffle_edge_names(const LabeledGraph& g, RandomGen& gen,
                                std::map<std::string, std::string>& new_of_old) {
    std::vector<int> perm(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) perm[e] = e;
    std::shuffle(perm.begin(), perm.end(), gen.rng());
    LabeledGraph out(g.name());
    for (int v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.vertex_name(v), g.vertex_label(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        int orig = perm[e];
        std::string name = "z" + std::to_string(e);
        new_of_old[g.edge_name(orig)] = name;
        out.add_edge(name, g.src(orig), g.tgt(orig), g.edge_label(orig));
    }
    return out;
}

}  // namespace

SuiteResult check_zoning(const Trs& trs, RandomGen& gen, int samples, int max_vertices) {
    SuiteResult res;
    res.name = "zoning";
    for (int i = 0; i < samples; ++i) {
        LabeledGraph g = gen.chance(0.5) ? gen.random_graph(trs.signature, max_vertices, 10)
                                         : gen.random_termish_graph(trs.signature, max_vertices);
        ++res.samples;
        Zoning z = compute_zoning(trs.signature, g);

        // Order independence: same partition and bridges after renaming.
        std::map<std::string, std::string> renamed;
        LabeledGraph g2 = shuffle_edge_names(g, gen, renamed);
        Zoning z2 = compute_zoning(trs.signature, g2);
        if (z.zone_of_vertex != z2.zone_of_vertex) {
            res.fail("zone partition depends on edge order:\n" + graph_repro(g));
            continue;
        }
        std::set<std::string> bridges_renamed;
        for (const auto& b : z.bridges) bridges_renamed.insert(renamed.at(b));
        if (bridges_renamed != z2.bridges) {
            res.fail("bridges depend on edge order:\n" + graph_repro(g));
            continue;
        }

        auto classes = classify_nodes(trs.signature, g);
        // Bridge endpoints: bad leaf source, root target.
        for (const auto& bname : z.bridges) {
            int e = *g.edge(bname);
            int s = g.src(e), t = g.tgt(e);
            if (classes[s].good) res.fail("bridge source is good:\n" + graph_repro(g));
            const auto& zid = z.zone_of_vertex.at(g.vertex_name(s));
            for (const auto& en : z.zone_edges.at(zid))
                if (g.src(*g.edge(en)) == s)
                    res.fail("bridge source is not a zone leaf:\n" + graph_repro(g));
            const auto& tz = z.zone_of_vertex.at(g.vertex_name(t));
            auto root = z.roots.at(tz);
            if (!root || *root != g.vertex_name(t))
                res.fail("bridge target is not a zone root:\n" + graph_repro(g));
        }

        // Zones are connected; acyclic zones are trees and decode to terms.
        for (const auto& zid : z.zone_ids()) {
            std::vector<int> verts;
            for (const auto& [vn, id] : z.zone_of_vertex)
                if (id == zid) verts.push_back(*g.vertex(vn));
            std::vector<int> edges;
            for (const auto& en : z.zone_edges.at(zid)) edges.push_back(*g.edge(en));
            LabeledGraph sub = g.induced(verts, edges);
            if (sub.vertex_count() > 0) {
                std::vector<bool> seen(sub.vertex_count(), false);
                std::deque<int> q{0};
                seen[0] = true;
                int count = 1;
                while (!q.empty()) {
                    int x = q.front();
                    q.pop_front();
                    auto visit = [&](int y) {
                        if (!seen[y]) {
                            seen[y] = true;
                            ++count;
                            q.push_back(y);
                        }
                    };
                    for (int e : sub.out_edges(x)) visit(sub.tgt(e));
                    for (int e : sub.in_edges(x)) visit(sub.src(e));
                }
                if (count != sub.vertex_count())
                    res.fail("zone '" + zid + "' is not connected:\n" + graph_repro(g));
            }
            auto root = z.roots.at(zid);
            if (root) {
                // Tree shape: every non-root has exactly one in-zone edge.
                for (int v = 0; v < sub.vertex_count(); ++v) {
                    int expect = sub.vertex_name(v) == *root ? 0 : 1;
                    if (sub.in_degree(v) != expect)
                        res.fail("acyclic zone '" + zid + "' is not a tree:\n" + graph_repro(g));
                }
                auto term = zone_to_term(trs.signature, g, z, zid);
                if (!term)
                    res.fail("acyclic zone '" + zid + "' did not decode:\n" + graph_repro(g));
            }
        }
    }
    return res;
}

SuiteResult check_match_zone_boundary(const Trs& trs, RandomGen& gen, int samples,
                                      int max_vertices) {
    SuiteResult res;
    res.name = "match-zone-boundary";
    if (trs.rules.empty()) return res;
    std::vector<EncodedRule> encoded = encode_system(trs);
    for (int i = 0; i < samples; ++i) {
        LabeledGraph g = gen.random_termish_graph(trs.signature, max_vertices);
        ++res.samples;
        for (const auto& erule : encoded)
            for (const auto& match : find_matches(erule.rule, g))
                if (!check_match_in_one_zone(erule, g, match.m))
                    res.fail("match image crosses a zone boundary on:\n" + graph_repro(g));
    }
    return res;
}

namespace {

// Random morphism out of A: optionally collapse vertices, then extend the
// image graph with fresh elements and occasionally raised labels.
std::pair<LabeledGraph, std::vector<int>> random_vertex_collapse(const LabeledGraph& A,
                                                                 RandomGen& gen, bool allow) {
    int groups = A.vertex_count();
    std::vector<int> group_of(A.vertex_count());
    for (int v = 0; v < A.vertex_count(); ++v) group_of[v] = v;
    if (allow && A.vertex_count() >= 2 && gen.chance(0.4)) {
        int a = gen.pick(0, A.vertex_count() - 1);
        int b = gen.pick(0, A.vertex_count() - 1);
        if (a != b) {
            group_of[std::max(a, b)] = std::min(a, b);
            --groups;
        }
    }
    (void)groups;
    LabeledGraph B("b");
    std::vector<int> vmap(A.vertex_count());
    std::map<int, int> built;
    for (int v = 0; v < A.vertex_count(); ++v) {
        int rep = group_of[v];
        auto it = built.find(rep);
        if (it == built.end()) {
            std::vector<Label> labels;
            for (int w = 0; w < A.vertex_count(); ++w)
                if (group_of[w] == rep) labels.push_back(A.vertex_label(w));
            Label l = join(labels);
            if (gen.chance(0.15)) l = Label::top();
            built[rep] = B.add_vertex("m" + std::to_string(rep), l);
        }
        vmap[v] = built[rep];
    }
    return {B, vmap};
}

struct GeneratedSpan {
    GraphMorphism b;  // A -> B
    GraphMorphism c;  // A -> C, monic
};

GeneratedSpan random_span(RandomGen& gen) {
    Signature sig;
    sig.add("f", 1);
    sig.add("a", 0);
    sig.add("b", 0);
    LabeledGraph A = gen.random_graph(sig, 3, 2);

    // b: possibly collapsing, possibly label-raising, then extended.
    auto [B, bv] = random_vertex_collapse(A, gen, true);
    std::vector<int> be(A.edge_count());
    for (int e = 0; e < A.edge_count(); ++e) {
        Label l = A.edge_label(e);
        if (gen.chance(0.1)) l = Label::top();
        be[e] = B.add_edge("be" + std::to_string(e), bv[A.src(e)], bv[A.tgt(e)], l);
    }
    int extra = gen.pick(0, 2);
    for (int i = 0; i < extra; ++i) B.add_vertex("bx" + std::to_string(i), Label::symbol("a"));
    if (extra > 0 && gen.chance(0.5) && B.vertex_count() >= 2)
        B.add_edge("bxe", gen.pick(0, B.vertex_count() - 1), gen.pick(0, B.vertex_count() - 1),
                   Label::index(1));

    // c: monic inclusion with occasional raises and extensions.
    LabeledGraph C("c");
    std::vector<int> cv(A.vertex_count()), ce(A.edge_count());
    for (int v = 0; v < A.vertex_count(); ++v) {
        Label l = A.vertex_label(v);
        if (gen.chance(0.15)) l = Label::top();
        cv[v] = C.add_vertex("c" + std::to_string(v), l);
    }
    for (int e = 0; e < A.edge_count(); ++e)
        ce[e] = C.add_edge("ce" + std::to_string(e), cv[A.src(e)], cv[A.tgt(e)], A.edge_label(e));
    if (gen.chance(0.5)) {
        int x = C.add_vertex("cx", Label::symbol("b"));
        if (gen.chance(0.5) && C.vertex_count() >= 2)
            C.add_edge("cxe", x, gen.pick(0, C.vertex_count() - 1), Label::index(1));
    }

    return {GraphMorphism{A, B, bv, be}, GraphMorphism{A, C, cv, ce}};
}

struct GeneratedCospan {
    GraphMorphism b;  // B -> X
    GraphMorphism c;  // C -> X
};

// Sub-shapes of X with occasionally lowered labels give valid legs into X.
GraphMorphism random_leg_into(const LabeledGraph& X, RandomGen& gen, bool force_mono,
                              const std::string& prefix) {
    LabeledGraph D(prefix);
    std::vector<int> vmap, emap;
    std::vector<int> chosen;
    std::map<int, int> local_of;
    for (int v = 0; v < X.vertex_count(); ++v) {
        if (!gen.chance(0.6)) continue;
        Label l = X.vertex_label(v);
        if (gen.chance(0.2)) l = Label::bottom();
        local_of[v] = D.add_vertex(prefix + "v" + std::to_string(v), l);
        vmap.push_back(v);
        chosen.push_back(v);
    }
    for (int e = 0; e < X.edge_count(); ++e) {
        if (!local_of.count(X.src(e)) || !local_of.count(X.tgt(e))) continue;
        if (!gen.chance(0.7)) continue;
        Label l = X.edge_label(e);
        if (gen.chance(0.2)) l = Label::bottom();
        D.add_edge(prefix + "e" + std::to_string(e), local_of[X.src(e)], local_of[X.tgt(e)], l);
        emap.push_back(e);
    }
    if (!force_mono && !chosen.empty() && gen.chance(0.4)) {
        // A duplicated vertex mapping onto an existing image makes the leg
        // non-monic.
        int v = chosen[gen.pick(0, static_cast<int>(chosen.size()) - 1)];
        Label l = X.vertex_label(v);
        D.add_vertex(prefix + "dup", l);
        vmap.push_back(v);
    }
    return GraphMorphism{D, X, vmap, emap};
}

GeneratedCospan random_cospan(RandomGen& gen, bool left_mono) {
    Signature sig;
    sig.add("f", 1);
    sig.add("a", 0);
    sig.add("b", 0);
    LabeledGraph X = gen.random_graph(sig, 3, 3);
    return {random_leg_into(X, gen, left_mono, "p"), random_leg_into(X, gen, false, "q")};
}

}  // namespace

SuiteResult check_categorical(RandomGen& gen, int samples) {
    SuiteResult res;
    res.name = "categorical-oracles";
    for (int i = 0; i < samples; ++i) {
        ++res.samples;
        GeneratedSpan span = random_span(gen);
        CospanResult po = pushout(span.b, span.c);
        if (!is_mono(po.left)) {
            res.fail("pushout did not preserve the monic leg:\n" + graph_repro(span.b.dom));
            continue;
        }
        if (!(compose(span.b, po.left) == compose(span.c, po.right))) {
            res.fail("pushout square does not commute");
            continue;
        }
        std::vector<LabeledGraph> probes{span.b.cod, span.c.cod};
        if (!verify_pushout_universal(span.b, span.c, po, probes))
            res.fail("pushout failed the universal property:\n" + graph_repro(po.apex));

        GeneratedCospan cospan = random_cospan(gen, /*left_mono=*/gen.chance(0.5));
        SpanResult pb = pullback(cospan.b, cospan.c);
        if (!(compose(pb.left, cospan.b) == compose(pb.right, cospan.c))) {
            res.fail("pullback square does not commute");
            continue;
        }
        if (is_mono(cospan.b) && !is_mono(pb.right))
            res.fail("pullback did not preserve the mono on the opposite leg:\n" +
                     graph_repro(pb.apex));
        std::vector<LabeledGraph> pprobes{cospan.b.dom, cospan.c.dom};
        if (!verify_pullback_universal(cospan.b, cospan.c, pb, pprobes))
            res.fail("pullback failed the universal property:\n" + graph_repro(pb.apex));
    }
    return res;
}

}  // namespace pbpo
