#pragma once

#include <vector>

#include "pbpo/graph.hpp"
#include "pbpo/morphism_search.hpp"

namespace pbpo {

struct CospanResult {
    LabeledGraph apex;
    GraphMorphism left;   // B -> apex
    GraphMorphism right;  // C -> apex
};

struct SpanResult {
    LabeledGraph apex;
    GraphMorphism left;   // apex -> B
    GraphMorphism right;  // apex -> C
};

// Pushout of the span B <-b- A -c-> C, requiring c monic. The apex is the
// quotient of B + C by the equivalence generated by b(a) ~ c(a); each class
// is labeled with the join of its members and named by its lexicographically
// least member key ("B:<name>" / "C:<name>") for reproducible output. The
// left injection is monic (mono stability).
CospanResult pushout(const GraphMorphism& b, const GraphMorphism& c);

// Pullback of the cospan B -b-> X <-c- C. Apex elements are the compatible
// pairs, labeled with the meet of the two components and named "<b>|<c>".
SpanResult pullback(const GraphMorphism& b, const GraphMorphism& c);

// Brute-force universal-property oracles. Probes default to the candidate
// apex plus all its quotients (pushout) or subgraphs (pullback) with at most
// max_probe_elements elements; extra_probes are checked in addition. These
// stay independent of the constructions above so they can act as oracles.
bool verify_pushout_universal(const GraphMorphism& b, const GraphMorphism& c,
                              const CospanResult& candidate,
                              const std::vector<LabeledGraph>& extra_probes = {},
                              int max_probe_elements = 6);
bool verify_pullback_universal(const GraphMorphism& b, const GraphMorphism& c,
                               const SpanResult& candidate,
                               const std::vector<LabeledGraph>& extra_probes = {},
                               int max_probe_elements = 6);

// All quotient graphs of g (surjective morphism images) with at most
// max_elements elements. Empty when g is too large to enumerate.
std::vector<LabeledGraph> quotient_graphs(const LabeledGraph& g, int max_elements);
// All subgraphs of g (vertex subset + edge subset with endpoints inside)
// with at most max_elements elements.
std::vector<LabeledGraph> subgraphs(const LabeledGraph& g, int max_elements);

}  // namespace pbpo
