#include "pbpo/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace pbpo {

int LabeledGraph::add_vertex(const std::string& name, const Label& label) {
    if (name.empty()) throw std::invalid_argument("empty vertex identifier");
    if (vbyname_.count(name))
        throw std::invalid_argument("duplicate vertex identifier '" + name + "'");
    int idx = vertex_count();
    vnames_.push_back(name);
    vlabels_.push_back(label);
    out_.emplace_back();
    in_.emplace_back();
    vbyname_[name] = idx;
    return idx;
}

int LabeledGraph::add_edge(const std::string& name, const std::string& src,
                           const std::string& tgt, const Label& label) {
    auto s = vertex(src), t = vertex(tgt);
    if (!s) throw std::invalid_argument("edge '" + name + "': unknown source vertex '" + src + "'");
    if (!t) throw std::invalid_argument("edge '" + name + "': unknown target vertex '" + tgt + "'");
    return add_edge(name, *s, *t, label);
}

int LabeledGraph::add_edge(const std::string& name, int src, int tgt, const Label& label) {
    if (name.empty()) throw std::invalid_argument("empty edge identifier");
    if (ebyname_.count(name))
        throw std::invalid_argument("duplicate edge identifier '" + name + "'");
    if (src < 0 || src >= vertex_count() || tgt < 0 || tgt >= vertex_count())
        throw std::invalid_argument("edge '" + name + "': endpoint out of range");
    int idx = edge_count();
    enames_.push_back(name);
    elabels_.push_back(label);
    esrc_.push_back(src);
    etgt_.push_back(tgt);
    out_[src].push_back(idx);
    in_[tgt].push_back(idx);
    ebyname_[name] = idx;
    return idx;
}

std::optional<int> LabeledGraph::vertex(const std::string& name) const {
    auto it = vbyname_.find(name);
    if (it == vbyname_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> LabeledGraph::edge(const std::string& name) const {
    auto it = ebyname_.find(name);
    if (it == ebyname_.end()) return std::nullopt;
    return it->second;
}

LabeledGraph LabeledGraph::with_vertex_label(int v, const Label& l) const {
    LabeledGraph g = *this;
    g.vlabels_[v] = l;
    return g;
}

LabeledGraph LabeledGraph::without_edges(const std::vector<int>& edges) const {
    std::set<int> drop(edges.begin(), edges.end());
    LabeledGraph g(name_);
    for (int v = 0; v < vertex_count(); ++v) g.add_vertex(vnames_[v], vlabels_[v]);
    for (int e = 0; e < edge_count(); ++e)
        if (!drop.count(e)) g.add_edge(enames_[e], esrc_[e], etgt_[e], elabels_[e]);
    return g;
}

LabeledGraph LabeledGraph::induced(const std::vector<int>& vertices,
                                   const std::vector<int>& edges) const {
    std::set<int> keep(vertices.begin(), vertices.end());
    LabeledGraph g(name_);
    for (int v : vertices) g.add_vertex(vnames_[v], vlabels_[v]);
    for (int e : edges) {
        if (!keep.count(esrc_[e]) || !keep.count(etgt_[e]))
            throw std::invalid_argument("induced: edge '" + enames_[e] +
                                        "' has an endpoint outside the vertex set");
        g.add_edge(enames_[e], vnames_[esrc_[e]], vnames_[etgt_[e]], elabels_[e]);
    }
    return g;
}

std::string LabeledGraph::fresh_vertex_name(const std::string& want) const {
    if (!vbyname_.count(want)) return want;
    for (int k = 1;; ++k) {
        std::string candidate = want + "#" + std::to_string(k);
        if (!vbyname_.count(candidate)) return candidate;
    }
}

std::string LabeledGraph::fresh_edge_name(const std::string& want) const {
    if (!ebyname_.count(want)) return want;
    for (int k = 1;; ++k) {
        std::string candidate = want + "#" + std::to_string(k);
        if (!ebyname_.count(candidate)) return candidate;
    }
}

bool LabeledGraph::operator==(const LabeledGraph& o) const {
    if (vertex_count() != o.vertex_count() || edge_count() != o.edge_count()) return false;
    for (const auto& [name, idx] : vbyname_) {
        auto ov = o.vertex(name);
        if (!ov || !(o.vlabels_[*ov] == vlabels_[idx])) return false;
    }
    for (const auto& [name, idx] : ebyname_) {
        auto oe = o.edge(name);
        if (!oe) return false;
        if (!(o.elabels_[*oe] == elabels_[idx])) return false;
        if (o.vnames_[o.esrc_[*oe]] != vnames_[esrc_[idx]]) return false;
        if (o.vnames_[o.etgt_[*oe]] != vnames_[etgt_[idx]]) return false;
    }
    return true;
}

std::optional<int> GraphMorphism::vertex_image(const std::string& dom_name) const {
    auto v = dom.vertex(dom_name);
    if (!v) return std::nullopt;
    return vmap[*v];
}

bool GraphMorphism::operator==(const GraphMorphism& o) const {
    if (!(dom == o.dom) || !(cod == o.cod)) return false;
    // Maps compared by name so equal-but-reordered graph values still agree.
    for (int v = 0; v < dom.vertex_count(); ++v) {
        auto ov = o.dom.vertex(dom.vertex_name(v));
        if (o.cod.vertex_name(o.vmap[*ov]) != cod.vertex_name(vmap[v])) return false;
    }
    for (int e = 0; e < dom.edge_count(); ++e) {
        auto oe = o.dom.edge(dom.edge_name(e));
        if (o.cod.edge_name(o.emap[*oe]) != cod.edge_name(emap[e])) return false;
    }
    return true;
}

GraphMorphism identity(const LabeledGraph& g) {
    GraphMorphism f{g, g, {}, {}};
    f.vmap.resize(g.vertex_count());
    f.emap.resize(g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v) f.vmap[v] = v;
    for (int e = 0; e < g.edge_count(); ++e) f.emap[e] = e;
    return f;
}

std::vector<std::string> morphism_violations(const GraphMorphism& f) {
    std::vector<std::string> out;
    const auto& A = f.dom;
    const auto& B = f.cod;
    if (static_cast<int>(f.vmap.size()) != A.vertex_count() ||
        static_cast<int>(f.emap.size()) != A.edge_count()) {
        out.push_back("map not total on the domain");
        return out;
    }
    for (int v = 0; v < A.vertex_count(); ++v)
        if (f.vmap[v] < 0 || f.vmap[v] >= B.vertex_count()) {
            out.push_back("vertex '" + A.vertex_name(v) + "' mapped outside the codomain");
            return out;
        }
    for (int e = 0; e < A.edge_count(); ++e)
        if (f.emap[e] < 0 || f.emap[e] >= B.edge_count()) {
            out.push_back("edge '" + A.edge_name(e) + "' mapped outside the codomain");
            return out;
        }
    for (int e = 0; e < A.edge_count(); ++e) {
        int img = f.emap[e];
        if (B.src(img) != f.vmap[A.src(e)] || B.tgt(img) != f.vmap[A.tgt(e)])
            out.push_back("edge '" + A.edge_name(e) + "' breaks the premorphism law");
    }
    for (int v = 0; v < A.vertex_count(); ++v)
        if (!leq(A.vertex_label(v), B.vertex_label(f.vmap[v])))
            out.push_back("vertex '" + A.vertex_name(v) + "' decreases its label");
    for (int e = 0; e < A.edge_count(); ++e)
        if (!leq(A.edge_label(e), B.edge_label(f.emap[e])))
            out.push_back("edge '" + A.edge_name(e) + "' decreases its label");
    return out;
}

bool validate_morphism(const GraphMorphism& f) { return morphism_violations(f).empty(); }

bool is_mono(const GraphMorphism& f) {
    std::set<int> vs(f.vmap.begin(), f.vmap.end());
    if (static_cast<int>(vs.size()) != f.dom.vertex_count()) return false;
    std::set<int> es(f.emap.begin(), f.emap.end());
    return static_cast<int>(es.size()) == f.dom.edge_count();
}

bool is_iso(const GraphMorphism& f) {
    if (!is_mono(f)) return false;
    if (f.dom.vertex_count() != f.cod.vertex_count()) return false;
    if (f.dom.edge_count() != f.cod.edge_count()) return false;
    for (int v = 0; v < f.dom.vertex_count(); ++v)
        if (!(f.dom.vertex_label(v) == f.cod.vertex_label(f.vmap[v]))) return false;
    for (int e = 0; e < f.dom.edge_count(); ++e)
        if (!(f.dom.edge_label(e) == f.cod.edge_label(f.emap[e]))) return false;
    return true;
}

GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
    if (!(f.cod == g.dom))
        throw std::invalid_argument("compose: cod(f) and dom(g) are different graphs");
    GraphMorphism h{f.dom, g.cod, {}, {}};
    h.vmap.resize(f.dom.vertex_count());
    h.emap.resize(f.dom.edge_count());
    for (int v = 0; v < f.dom.vertex_count(); ++v) {
        // Route by name in case g.dom orders elements differently.
        int mid = *g.dom.vertex(f.cod.vertex_name(f.vmap[v]));
        h.vmap[v] = g.vmap[mid];
    }
    for (int e = 0; e < f.dom.edge_count(); ++e) {
        int mid = *g.dom.edge(f.cod.edge_name(f.emap[e]));
        h.emap[e] = g.emap[mid];
    }
    return h;
}

}  // namespace pbpo
