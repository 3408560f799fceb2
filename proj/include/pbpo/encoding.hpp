#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "pbpo/cat_ops.hpp"
#include "pbpo/graph.hpp"
#include "pbpo/pbpo_rule.hpp"
#include "pbpo/term.hpp"

namespace pbpo {

// Rooted tree graph of a linear term: symbol vertices are named by their
// position ("eps", "1", "21", ...), variable leaves by the variable name
// (freshened with "#k" on collision) and labeled bottom; the edge from a
// vertex to its i-th child is labeled i and named "<src>><tgt>".
struct TermEncoding {
    RootedGraph rooted;
    std::map<std::string, Position> position_of;       // vertex name -> position
    std::set<std::string> variable_heads;              // vertex names
    std::map<std::string, std::string> head_of_variable;  // variable -> vertex name

    const LabeledGraph& graph() const { return rooted.graph; }
    std::optional<int> vertex_at(const Position& p) const;
};

TermEncoding encode_term(const Signature& sig, const Term& t);

// Inverse of encode_term up to variable renaming: present iff the graph is
// isomorphic to some term encoding over sig. Bottom-labeled leaves keep
// their vertex names when those are valid distinct identifiers outside the
// signature, and become x1, x2, ... in leftmost order otherwise.
std::optional<Term> decode_term(const Signature& sig, const RootedGraph& g);
// Root inferred as the unique vertex without incoming edges.
std::optional<Term> decode_term(const Signature& sig, const LabeledGraph& g);

// Context closures. Added vertices are "C" (upper) and "<x>'" (lower),
// freshened with "#k" against existing names; the result records what was
// added so rule encoding never depends on name lookups.
struct ClosureResult {
    RootedGraph rooted;
    std::string context_vertex;  // upper closure only
    std::string context_edge;    // edge (C, root)
    std::string context_loop;    // edge (C, C)
    std::map<std::string, std::string> primed_of;     // lower: x -> x'
    std::map<std::string, std::string> link_edge_of;  // lower: x -> (x, x') edge
    std::map<std::string, std::string> loop_edge_of;  // lower: x -> (x', x') edge
};

ClosureResult upper_context_closure(const RootedGraph& g);
// Relabels every vertex in xs to top and hangs a fresh top-labeled primed
// vertex with a loop below it.
ClosureResult lower_context_closure(const RootedGraph& g, const std::set<std::string>& xs);

// Discrete graph with vertices Var(t) + {eps}, all bottom, rooted at eps.
RootedGraph interface_graph(const Term& t);

struct EncodedRule {
    Signature signature;
    TrsRule source_rule;
    PbpoRule rule;
    TermEncoding l_encoding;
    TermEncoding r_encoding;

    int root_L() const { return l_encoding.rooted.root; }
};

// The paper-style rule encoding: L = lhs encoding, K = interface of rhs,
// R = rhs encoding, L' and K' their context closures; the five morphisms
// map roots to roots and are inclusions otherwise.
EncodedRule encode_rule(const Signature& sig, const TrsRule& rule);
std::vector<EncodedRule> encode_system(const Trs& trs);

// Pushout of K' <-tK- K -r-> R; its apex is the schematic replacement R'.
CospanResult derived_replacement(const PbpoRule& rule);

}  // namespace pbpo
