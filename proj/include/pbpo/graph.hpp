#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbpo/lattice.hpp"

namespace pbpo {

// Engine invariant violations (never user input errors).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Finite directed multigraph with lattice labels on vertices and edges.
// Identifiers are opaque strings externally and dense indices internally;
// the name tables round-trip through the file format. Treated as an
// immutable value once built: engine operations never mutate their inputs.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(std::string name) : name_(std::move(name)) {}

    int add_vertex(const std::string& name, const Label& label);
    int add_edge(const std::string& name, const std::string& src, const std::string& tgt,
                 const Label& label);
    int add_edge(const std::string& name, int src, int tgt, const Label& label);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int vertex_count() const { return static_cast<int>(vnames_.size()); }
    int edge_count() const { return static_cast<int>(enames_.size()); }
    int element_count() const { return vertex_count() + edge_count(); }

    const std::string& vertex_name(int v) const { return vnames_[v]; }
    const std::string& edge_name(int e) const { return enames_[e]; }
    const Label& vertex_label(int v) const { return vlabels_[v]; }
    const Label& edge_label(int e) const { return elabels_[e]; }
    int src(int e) const { return esrc_[e]; }
    int tgt(int e) const { return etgt_[e]; }

    std::optional<int> vertex(const std::string& name) const;
    std::optional<int> edge(const std::string& name) const;
    bool has_vertex_name(const std::string& name) const { return vertex(name).has_value(); }

    const std::vector<int>& out_edges(int v) const { return out_[v]; }
    const std::vector<int>& in_edges(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    // Derived copies.
    LabeledGraph with_vertex_label(int v, const Label& l) const;
    LabeledGraph without_edges(const std::vector<int>& edges) const;  // vertices untouched
    LabeledGraph induced(const std::vector<int>& vertices, const std::vector<int>& edges) const;

    std::string fresh_vertex_name(const std::string& want) const;
    std::string fresh_edge_name(const std::string& want) const;

    // Value equality: same (name,label) vertex set and (name,src,tgt,label)
    // edge set, insertion order and graph display name ignored.
    bool operator==(const LabeledGraph& o) const;

private:
    std::string name_ = "g";
    std::vector<std::string> vnames_;
    std::vector<Label> vlabels_;
    std::vector<std::string> enames_;
    std::vector<Label> elabels_;
    std::vector<int> esrc_, etgt_;
    std::vector<std::vector<int>> out_, in_;
    std::map<std::string, int> vbyname_, ebyname_;
};

struct RootedGraph {
    LabeledGraph graph;
    int root = 0;  // vertex index in graph

    const std::string& root_name() const { return graph.vertex_name(root); }
};

// Pair of vertex/edge maps between two graphs. Validity (totality,
// premorphism law, label non-decrease) is checked by violations()/is_valid.
struct GraphMorphism {
    LabeledGraph dom;
    LabeledGraph cod;
    std::vector<int> vmap;  // dom vertex index -> cod vertex index
    std::vector<int> emap;  // dom edge index -> cod edge index

    int v(int x) const { return vmap[x]; }
    int e(int x) const { return emap[x]; }

    std::optional<int> vertex_image(const std::string& dom_name) const;

    bool operator==(const GraphMorphism& o) const;
};

GraphMorphism identity(const LabeledGraph& g);

// Diagnostic list of violated morphism clauses; empty means valid.
std::vector<std::string> morphism_violations(const GraphMorphism& f);
bool validate_morphism(const GraphMorphism& f);

bool is_mono(const GraphMorphism& f);
// Iso in this category: bijective and label-preserving in both directions.
bool is_iso(const GraphMorphism& f);

// compose(f, g) = g after f; requires cod(f) == dom(g) as graph values.
GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g);

}  // namespace pbpo
