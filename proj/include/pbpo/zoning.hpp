#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pbpo/encoding.hpp"
#include "pbpo/graph.hpp"
#include "pbpo/lattice.hpp"
#include "pbpo/term.hpp"

namespace pbpo {

// Edges lying on an undirected cycle: e is a cycle edge iff an undirected
// path from src(e) to tgt(e) avoids e (loops qualify via the empty path).
std::set<int> undirected_cycle_edges(const LabeledGraph& g);

LabeledGraph drop_cycles(const LabeledGraph& g);

// in_wf: at most one incoming edge. out_wf: label is a signature symbol and
// the outgoing edges are labeled exactly 1..arity, one each. good: out_wf
// and every child in_wf.
struct NodeClass {
    bool in_wf = false;
    bool out_wf = false;
    bool good = false;
};

std::vector<NodeClass> classify_nodes(const Signature& sig, const LabeledGraph& g);

// Partition grown by joining zones along edges whose source is good; the
// remaining edges are bridges. Zone ids are the least vertex name in the
// zone. Roots exist exactly for zones without a directed cycle.
struct Zoning {
    std::map<std::string, std::string> zone_of_vertex;
    std::map<std::string, std::set<std::string>> zone_edges;
    std::set<std::string> bridges;
    std::map<std::string, std::optional<std::string>> roots;

    std::vector<std::string> zone_ids() const;
};

Zoning compute_zoning(const Signature& sig, const LabeledGraph& g);

LabeledGraph relabel_bad_nodes(const Signature& sig, const LabeledGraph& g, const Label& to);

// The zone as a term: extract the zone subgraph, relabel its bad nodes to
// bottom and decode. Absent exactly when the zone has a directed cycle.
std::optional<Term> zone_to_term(const Signature& sig, const LabeledGraph& g, const Zoning& z,
                                 const std::string& zone_id);

// Diagnostic counterpart of the boundary lemma: the image of a match lies
// in a single zone and never crosses a bridge.
bool check_match_in_one_zone(const EncodedRule& erule, const LabeledGraph& g,
                             const GraphMorphism& m);

}  // namespace pbpo
