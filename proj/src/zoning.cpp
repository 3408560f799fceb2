#include "pbpo/zoning.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace pbpo {

namespace {

// Undirected reachability from `from` to `to` avoiding edge `skip`.
bool connected_avoiding(const LabeledGraph& g, int from, int to, int skip) {
    if (from == to) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<int> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        auto visit = [&](int w) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        };
        for (int e : g.out_edges(v))
            if (e != skip) visit(g.tgt(e));
        for (int e : g.in_edges(v))
            if (e != skip) visit(g.src(e));
        if (seen[to]) return true;
    }
    return false;
}

}  // namespace

std::set<int> undirected_cycle_edges(const LabeledGraph& g) {
    std::set<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.src(e) == g.tgt(e)) {
            out.insert(e);  // loop: the empty path closes the cycle
            continue;
        }
        if (connected_avoiding(g, g.src(e), g.tgt(e), e)) out.insert(e);
    }
    return out;
}

LabeledGraph drop_cycles(const LabeledGraph& g) {
    auto cyc = undirected_cycle_edges(g);
    return g.without_edges({cyc.begin(), cyc.end()});
}

std::vector<NodeClass> classify_nodes(const Signature& sig, const LabeledGraph& g) {
    std::vector<NodeClass> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        NodeClass& c = out[v];
        c.in_wf = g.in_degree(v) <= 1;
        const Label& l = g.vertex_label(v);
        c.out_wf = false;
        if (l.is_base() && !l.is_index() && sig.contains(l.base)) {
            int n = sig.arity(l.base);
            if (g.out_degree(v) == n) {
                std::vector<bool> have(n, false);
                bool ok = true;
                for (int e : g.out_edges(v)) {
                    auto idx = g.edge_label(e).index_value();
                    if (!idx || *idx < 1 || *idx > n || have[*idx - 1]) {
                        ok = false;
                        break;
                    }
                    have[*idx - 1] = true;
                }
                c.out_wf = ok;
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        NodeClass& c = out[v];
        c.good = c.out_wf;
        if (c.good)
            for (int e : g.out_edges(v))
                if (!out[g.tgt(e)].in_wf) {
                    c.good = false;
                    break;
                }
    }
    return out;
}

std::vector<std::string> Zoning::zone_ids() const {
    std::set<std::string> ids;
    for (const auto& [v, z] : zone_of_vertex) ids.insert(z);
    return {ids.begin(), ids.end()};
}

Zoning compute_zoning(const Signature& sig, const LabeledGraph& g) {
    auto classes = classify_nodes(sig, g);

    // Worklist over edges sorted by identifier; goodness is a property of
    // the graph alone, so one pass reaches the fixpoint.
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.edge_name(a) < g.edge_name(b); });

    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<bool> joined(g.edge_count(), false);
    for (int e : order) {
        if (classes[g.src(e)].good) {
            parent[find(g.src(e))] = find(g.tgt(e));
            joined[e] = true;
        }
    }

    // Zone id: least vertex name per component.
    std::map<int, std::string> zone_id;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int root = find(v);
        auto it = zone_id.find(root);
        if (it == zone_id.end() || g.vertex_name(v) < it->second)
            zone_id[root] = g.vertex_name(v);
    }

    Zoning z;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::string& id = zone_id[find(v)];
        z.zone_of_vertex[g.vertex_name(v)] = id;
        z.zone_edges.try_emplace(id);
        z.roots.try_emplace(id, std::nullopt);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (joined[e])
            z.zone_edges[zone_id[find(g.src(e))]].insert(g.edge_name(e));
        else
            z.bridges.insert(g.edge_name(e));
    }

    // Root: the vertex without a parent through zone edges; unique when it
    // exists, missing exactly for zones with a directed cycle.
    std::map<std::string, int> in_zone_indeg;
    for (int v = 0; v < g.vertex_count(); ++v) in_zone_indeg[g.vertex_name(v)] = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (joined[e]) ++in_zone_indeg[g.vertex_name(g.tgt(e))];
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_zone_indeg[g.vertex_name(v)] != 0) continue;
        const std::string& id = zone_id[find(v)];
        auto& slot = z.roots[id];
        if (slot.has_value())
            throw InternalError("zone '" + id + "' has two parentless vertices");
        slot = g.vertex_name(v);
    }
    return z;
}

LabeledGraph relabel_bad_nodes(const Signature& sig, const LabeledGraph& g, const Label& to) {
    auto classes = classify_nodes(sig, g);
    LabeledGraph out = g;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!classes[v].good) out = out.with_vertex_label(v, to);
    return out;
}

std::optional<Term> zone_to_term(const Signature& sig, const LabeledGraph& g, const Zoning& z,
                                 const std::string& zone_id) {
    std::vector<int> verts, edges;
    for (const auto& [name, id] : z.zone_of_vertex)
        if (id == zone_id) verts.push_back(*g.vertex(name));
    if (verts.empty()) throw std::invalid_argument("unknown zone '" + zone_id + "'");
    auto it = z.zone_edges.find(zone_id);
    if (it != z.zone_edges.end())
        for (const auto& name : it->second) edges.push_back(*g.edge(name));

    auto root = z.roots.at(zone_id);
    if (!root) return std::nullopt;  // directed cycle in the zone

    // Bad nodes (classified in the full graph) become variables.
    auto classes = classify_nodes(sig, g);
    LabeledGraph sub = g.induced(verts, edges);
    for (int v = 0; v < sub.vertex_count(); ++v) {
        int orig = *g.vertex(sub.vertex_name(v));
        if (!classes[orig].good) sub = sub.with_vertex_label(v, Label::bottom());
    }
    auto term = decode_term(sig, RootedGraph{sub, *sub.vertex(*root)});
    if (!term)
        throw InternalError("acyclic zone '" + zone_id + "' failed to decode");
    return term;
}

bool check_match_in_one_zone(const EncodedRule& erule, const LabeledGraph& g,
                             const GraphMorphism& m) {
    Zoning z = compute_zoning(erule.signature, g);
    std::set<std::string> zones;
    for (int v = 0; v < m.dom.vertex_count(); ++v)
        zones.insert(z.zone_of_vertex.at(g.vertex_name(m.vmap[v])));
    if (zones.size() != 1) return false;
    const std::string& zone = *zones.begin();
    for (int e = 0; e < m.dom.edge_count(); ++e) {
        const std::string& en = g.edge_name(m.emap[e]);
        if (z.bridges.count(en)) return false;
        if (!z.zone_edges.at(zone).count(en)) return false;
    }
    return true;
}

}  // namespace pbpo
