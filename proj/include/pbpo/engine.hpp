#pragma once

#include <optional>
#include <vector>

#include "pbpo/cat_ops.hpp"
#include "pbpo/encoding.hpp"
#include "pbpo/pbpo_rule.hpp"

namespace pbpo {

// A strong match: monic m with an adherence alpha such that alpha . m = tL
// and the match square is a pullback (the alpha-preimage of tL(L) is
// exactly m(L)).
struct Match {
    GraphMorphism m;      // L -> G
    GraphMorphism alpha;  // G -> L'
};

std::vector<Match> find_matches(const PbpoRule& rule, const LabeledGraph& G);

// One rewrite step: extraction pullback of (alpha, lp) giving G_K, the
// unique mono u : K -> G_K with tK = up . u, then the gluing pushout of
// (r, u) giving G_R.
struct RewriteStep {
    PbpoRule rule;
    LabeledGraph GL, GK, GR;
    GraphMorphism m;      // L  -> GL
    GraphMorphism alpha;  // GL -> L'
    GraphMorphism gL;     // GK -> GL
    GraphMorphism up;     // GK -> K'
    GraphMorphism u;      // K  -> GK
    GraphMorphism gR;     // GK -> GR
    GraphMorphism w;      // R  -> GR
};

RewriteStep apply_step(const PbpoRule& rule, const LabeledGraph& G, const Match& match);

// Applies an encoded rule at a term-encoding position; absent when no match
// is rooted there. On term encodings the result is unique up to isomorphism.
std::optional<LabeledGraph> apply_at_position(const EncodedRule& erule, const TermEncoding& enc,
                                              const Position& p);
// Same on a bare graph; positions are assigned from the unique root along
// integer-labeled edges, absent if that assignment fails.
std::optional<LabeledGraph> apply_at_position(const EncodedRule& erule, const LabeledGraph& g,
                                              const Position& p);

enum class Strategy { FirstMatch, AllBranchesBfs };

struct TraceStep {
    std::size_t rule_index;
    Match match;
    LabeledGraph result;
};

struct RewriteTrace {
    Strategy strategy = Strategy::FirstMatch;
    bool bound_hit = false;
    // FirstMatch: the single reduction path and its endpoint.
    std::vector<TraceStep> steps;
    LabeledGraph final_graph;
    // AllBranchesBfs: iso-distinct normal forms and exploration counters.
    std::vector<LabeledGraph> normal_forms;
    std::size_t explored = 0;
    std::size_t max_depth_reached = 0;
};

RewriteTrace rewrite_bounded(const std::vector<PbpoRule>& rules, const LabeledGraph& G,
                             std::size_t max_steps, Strategy strategy);

}  // namespace pbpo
