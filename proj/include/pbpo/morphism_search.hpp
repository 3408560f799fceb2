#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pbpo/graph.hpp"

namespace pbpo {

struct MorphismSearchOptions {
    bool mono_only = false;
    bool label_exact = false;           // require label equality instead of leq
    std::map<int, int> fixed_vertices;  // dom vertex index -> forced cod vertex index
    std::map<int, int> fixed_edges;
    std::optional<std::size_t> limit;   // stop after this many results
};

// All valid morphisms A -> B, each exactly once, in a deterministic order
// (backtracking over vertices by descending degree, candidates by index).
std::vector<GraphMorphism> enumerate_morphisms(const LabeledGraph& A, const LabeledGraph& B,
                                               const MorphismSearchOptions& opt);
std::vector<GraphMorphism> enumerate_morphisms(const LabeledGraph& A, const LabeledGraph& B,
                                               bool mono_only = false);

// A label-preserving bijection whose inverse is also a morphism, if any.
std::optional<GraphMorphism> are_isomorphic(const LabeledGraph& A, const LabeledGraph& B);

}  // namespace pbpo
