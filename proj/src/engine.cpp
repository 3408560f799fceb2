#include "pbpo/engine.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "pbpo/morphism_search.hpp"

namespace pbpo {

namespace {

// The match square for monic tL is a pullback iff the alpha-preimage of
// every element of tL(L) is exactly its single m-image.
bool strong_match(const PbpoRule& rule, const GraphMorphism& m, const GraphMorphism& alpha) {
    const LabeledGraph& G = m.cod;
    std::vector<int> v_expected(rule.Lp.vertex_count(), -1);
    std::vector<int> e_expected(rule.Lp.edge_count(), -1);
    for (int v = 0; v < rule.L.vertex_count(); ++v) v_expected[rule.tL.vmap[v]] = m.vmap[v];
    for (int e = 0; e < rule.L.edge_count(); ++e) e_expected[rule.tL.emap[e]] = m.emap[e];
    std::vector<int> v_seen(rule.Lp.vertex_count(), 0), e_seen(rule.Lp.edge_count(), 0);
    for (int v = 0; v < G.vertex_count(); ++v) {
        int w = alpha.vmap[v];
        if (v_expected[w] == -1) continue;      // outside the pattern image
        if (v_expected[w] != v) return false;   // context collapses onto the pattern
        ++v_seen[w];
    }
    for (int e = 0; e < G.edge_count(); ++e) {
        int w = alpha.emap[e];
        if (e_expected[w] == -1) continue;
        if (e_expected[w] != e) return false;
        ++e_seen[w];
    }
    for (int w = 0; w < rule.Lp.vertex_count(); ++w)
        if (v_expected[w] != -1 && v_seen[w] != 1) return false;
    for (int w = 0; w < rule.Lp.edge_count(); ++w)
        if (e_expected[w] != -1 && e_seen[w] != 1) return false;
    return true;
}

}  // namespace

namespace {

// All strong matches; with a root filter, only monos mapping the given rule
// vertex onto the given host vertex. Stops early when limited.
std::vector<Match> find_matches_impl(const PbpoRule& rule, const LabeledGraph& G,
                                     int rule_root, int host_root, std::size_t limit) {
    std::vector<Match> out;
    for (const auto& m : enumerate_morphisms(rule.L, G, /*mono_only=*/true)) {
        if (rule_root >= 0 && m.vmap[rule_root] != host_root) continue;
        // alpha must agree with tL on the image of m.
        MorphismSearchOptions opt;
        for (int v = 0; v < rule.L.vertex_count(); ++v)
            opt.fixed_vertices[m.vmap[v]] = rule.tL.vmap[v];
        for (int e = 0; e < rule.L.edge_count(); ++e)
            opt.fixed_edges[m.emap[e]] = rule.tL.emap[e];
        for (const auto& alpha : enumerate_morphisms(G, rule.Lp, opt)) {
            if (!strong_match(rule, m, alpha)) continue;
            out.push_back({m, alpha});
            if (out.size() >= limit) return out;
        }
    }
    return out;
}

}  // namespace

std::vector<Match> find_matches(const PbpoRule& rule, const LabeledGraph& G) {
    return find_matches_impl(rule, G, -1, -1, std::numeric_limits<std::size_t>::max());
}

RewriteStep apply_step(const PbpoRule& rule, const LabeledGraph& G, const Match& match) {
    RewriteStep step;
    step.rule = rule;
    step.GL = G;
    step.m = match.m;
    step.alpha = match.alpha;

    // Extraction: pull alpha back along lp.
    SpanResult ex = pullback(match.alpha, rule.lp);
    step.GK = ex.apex;
    step.gL = ex.left;
    step.up = ex.right;

    // The unique mono u : K -> G_K with tK = up . u.
    std::vector<GraphMorphism> candidates;
    for (const auto& u : enumerate_morphisms(rule.K, step.GK, /*mono_only=*/true))
        if (compose(u, step.up) == rule.tK) candidates.push_back(u);
    if (candidates.size() != 1)
        throw InternalError("apply_step: expected exactly one mono u with tK = up.u, found " +
                            std::to_string(candidates.size()));
    step.u = candidates.front();

    // Gluing: push R out along u.
    CospanResult po = pushout(rule.r, step.u);
    step.GR = po.apex;
    step.w = po.left;
    step.gR = po.right;
    return step;
}

namespace {

std::optional<LabeledGraph> apply_rooted_at(const EncodedRule& erule, const LabeledGraph& g,
                                            int root_vertex) {
    auto matches = find_matches_impl(erule.rule, g, erule.root_L(), root_vertex, 1);
    if (matches.empty()) return std::nullopt;
    return apply_step(erule.rule, g, matches.front()).GR;
}

}  // namespace

std::optional<LabeledGraph> apply_at_position(const EncodedRule& erule, const TermEncoding& enc,
                                              const Position& p) {
    auto v = enc.vertex_at(p);
    if (!v) return std::nullopt;
    return apply_rooted_at(erule, enc.graph(), *v);
}

std::optional<LabeledGraph> apply_at_position(const EncodedRule& erule, const LabeledGraph& g,
                                              const Position& p) {
    // Resolve p by walking integer-labeled edges from each parentless
    // vertex in turn (graphs that are not term encodings may have several);
    // the first resolution carrying a match wins.
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (g.in_degree(root) != 0) continue;
        int at = root;
        bool resolved = true;
        for (int i : p) {
            int next = -1;
            for (int e : g.out_edges(at)) {
                auto idx = g.edge_label(e).index_value();
                if (idx && *idx == i) {
                    if (next != -1) {
                        resolved = false;  // ambiguous child
                        break;
                    }
                    next = g.tgt(e);
                }
            }
            if (next == -1) resolved = false;
            if (!resolved) break;
            at = next;
        }
        if (!resolved) continue;
        if (auto result = apply_rooted_at(erule, g, at)) return result;
    }
    return std::nullopt;
}

namespace {

// Iso-class store keyed by cheap canonical invariants.
struct IsoStore {
    using Key = std::tuple<int, int, std::vector<Label>, std::vector<Label>>;
    std::map<Key, std::vector<LabeledGraph>> buckets;

    static Key key_of(const LabeledGraph& g) {
        std::vector<Label> vs, es;
        for (int v = 0; v < g.vertex_count(); ++v) vs.push_back(g.vertex_label(v));
        for (int e = 0; e < g.edge_count(); ++e) es.push_back(g.edge_label(e));
        std::sort(vs.begin(), vs.end());
        std::sort(es.begin(), es.end());
        return {g.vertex_count(), g.edge_count(), vs, es};
    }

    // Returns true when the graph was new.
    bool insert(const LabeledGraph& g) {
        auto& bucket = buckets[key_of(g)];
        for (const auto& h : bucket)
            if (are_isomorphic(g, h)) return false;
        bucket.push_back(g);
        return true;
    }
};

}  // namespace

RewriteTrace rewrite_bounded(const std::vector<PbpoRule>& rules, const LabeledGraph& G,
                             std::size_t max_steps, Strategy strategy) {
    RewriteTrace trace;
    trace.strategy = strategy;

    if (strategy == Strategy::FirstMatch) {
        LabeledGraph cur = G;
        for (std::size_t step = 0; step < max_steps; ++step) {
            bool stepped = false;
            for (std::size_t r = 0; r < rules.size() && !stepped; ++r) {
                auto matches = find_matches(rules[r], cur);
                if (matches.empty()) continue;
                RewriteStep s = apply_step(rules[r], cur, matches.front());
                trace.steps.push_back({r, matches.front(), s.GR});
                cur = s.GR;
                stepped = true;
            }
            if (!stepped) {
                trace.final_graph = cur;
                return trace;
            }
        }
        // Bound exhausted; the bound was hit iff a further match exists.
        for (const auto& rule : rules)
            if (!find_matches(rule, cur).empty()) {
                trace.bound_hit = true;
                break;
            }
        trace.final_graph = cur;
        return trace;
    }

    // All-branches BFS over iso classes.
    IsoStore visited;
    visited.insert(G);
    trace.explored = 1;
    std::vector<LabeledGraph> frontier{G};
    IsoStore normal_forms;
    for (std::size_t depth = 0; depth < max_steps && !frontier.empty(); ++depth) {
        std::vector<LabeledGraph> next;
        for (const auto& g : frontier) {
            bool any = false;
            for (const auto& rule : rules)
                for (const auto& match : find_matches(rule, g)) {
                    any = true;
                    LabeledGraph h = apply_step(rule, g, match).GR;
                    if (visited.insert(h)) {
                        next.push_back(h);
                        ++trace.explored;
                    }
                }
            if (!any && normal_forms.insert(g)) trace.normal_forms.push_back(g);
        }
        if (!next.empty()) trace.max_depth_reached = depth + 1;
        frontier = std::move(next);
    }
    if (!frontier.empty()) {
        // Depth bound reached with an unexpanded frontier; normal forms
        // sitting there are still reported, and bound_hit records whether a
        // live branch was cut off.
        for (const auto& g : frontier) {
            bool any = false;
            for (const auto& rule : rules)
                if (!find_matches(rule, g).empty()) {
                    any = true;
                    break;
                }
            if (any)
                trace.bound_hit = true;
            else if (normal_forms.insert(g))
                trace.normal_forms.push_back(g);
        }
    }
    return trace;
}

}  // namespace pbpo
