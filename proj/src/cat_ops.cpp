#include "pbpo/cat_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pbpo {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string member_key(bool from_b, const std::string& name) {
    return (from_b ? "B:" : "C:") + name;
}

}  // namespace

CospanResult pushout(const GraphMorphism& b, const GraphMorphism& c) {
    if (!(b.dom == c.dom))
        throw std::invalid_argument("pushout: span legs have different domains");
    if (!validate_morphism(b) || !validate_morphism(c))
        throw std::invalid_argument("pushout: span legs are not valid morphisms");
    if (!is_mono(c)) throw std::invalid_argument("pushout: leg c must be monic");

    const LabeledGraph& A = b.dom;
    const LabeledGraph& B = b.cod;
    const LabeledGraph& C = c.cod;

    int nvB = B.vertex_count(), nvC = C.vertex_count();
    int neB = B.edge_count(), neC = C.edge_count();

    UnionFind vuf(nvB + nvC), euf(neB + neC);
    for (int a = 0; a < A.vertex_count(); ++a) vuf.unite(b.vmap[a], nvB + c.vmap[a]);
    for (int a = 0; a < A.edge_count(); ++a) euf.unite(b.emap[a], neB + c.emap[a]);

    // Gather classes; name each by its least member key, label by join.
    struct Cls {
        std::string name;
        std::vector<Label> labels;
        std::vector<int> members;  // disjoint-union indices
    };
    auto collect = [](UnionFind& uf, int total, auto member_name, auto member_label) {
        std::map<int, Cls> classes;
        for (int x = 0; x < total; ++x) {
            Cls& cl = classes[uf.find(x)];
            std::string key = member_name(x);
            if (cl.name.empty() || key < cl.name) cl.name = key;
            cl.labels.push_back(member_label(x));
            cl.members.push_back(x);
        }
        return classes;
    };

    auto vclasses = collect(
        vuf, nvB + nvC,
        [&](int x) {
            return x < nvB ? member_key(true, B.vertex_name(x))
                           : member_key(false, C.vertex_name(x - nvB));
        },
        [&](int x) { return x < nvB ? B.vertex_label(x) : C.vertex_label(x - nvB); });
    auto eclasses = collect(
        euf, neB + neC,
        [&](int x) {
            return x < neB ? member_key(true, B.edge_name(x))
                           : member_key(false, C.edge_name(x - neB));
        },
        [&](int x) { return x < neB ? B.edge_label(x) : C.edge_label(x - neB); });

    // Deterministic element order: sort classes by name.
    std::vector<const Cls*> vorder, eorder;
    for (auto& [root, cl] : vclasses) vorder.push_back(&cl);
    for (auto& [root, cl] : eclasses) eorder.push_back(&cl);
    auto by_name = [](const Cls* x, const Cls* y) { return x->name < y->name; };
    std::sort(vorder.begin(), vorder.end(), by_name);
    std::sort(eorder.begin(), eorder.end(), by_name);

    LabeledGraph apex("po");
    std::vector<int> vclass_of(nvB + nvC), eclass_of(neB + neC);
    for (const Cls* cl : vorder) {
        int idx = apex.add_vertex(cl->name, join(cl->labels));
        for (int m : cl->members) vclass_of[m] = idx;
    }
    auto du_src = [&](int x) { return x < neB ? B.src(x) : nvB + C.src(x - neB); };
    auto du_tgt = [&](int x) { return x < neB ? B.tgt(x) : nvB + C.tgt(x - neB); };
    for (const Cls* cl : eorder) {
        int rep = cl->members.front();
        int idx = apex.add_edge(cl->name, vclass_of[du_src(rep)], vclass_of[du_tgt(rep)],
                                join(cl->labels));
        for (int m : cl->members) eclass_of[m] = idx;
    }

    GraphMorphism left{B, apex, {}, {}};
    left.vmap.resize(nvB);
    left.emap.resize(neB);
    for (int v = 0; v < nvB; ++v) left.vmap[v] = vclass_of[v];
    for (int e = 0; e < neB; ++e) left.emap[e] = eclass_of[e];
    GraphMorphism right{C, apex, {}, {}};
    right.vmap.resize(nvC);
    right.emap.resize(neC);
    for (int v = 0; v < nvC; ++v) right.vmap[v] = vclass_of[nvB + v];
    for (int e = 0; e < neC; ++e) right.emap[e] = eclass_of[neB + e];

    return {std::move(apex), std::move(left), std::move(right)};
}

SpanResult pullback(const GraphMorphism& b, const GraphMorphism& c) {
    if (!(b.cod == c.cod))
        throw std::invalid_argument("pullback: cospan legs have different codomains");
    if (!validate_morphism(b) || !validate_morphism(c))
        throw std::invalid_argument("pullback: cospan legs are not valid morphisms");

    const LabeledGraph& B = b.dom;
    const LabeledGraph& C = c.dom;

    LabeledGraph apex("pb");
    std::map<std::pair<int, int>, int> vpair;
    std::vector<int> lv, rv, le, re;  // apex element -> component indices
    for (int p = 0; p < B.vertex_count(); ++p)
        for (int q = 0; q < C.vertex_count(); ++q) {
            if (b.vmap[p] != c.vmap[q]) continue;
            // Freshened: pair names can collide once names already contain
            // separators from earlier constructions.
            std::string name =
                apex.fresh_vertex_name(B.vertex_name(p) + "|" + C.vertex_name(q));
            int idx = apex.add_vertex(name, meet({B.vertex_label(p), C.vertex_label(q)}));
            vpair[{p, q}] = idx;
            lv.push_back(p);
            rv.push_back(q);
        }
    for (int e = 0; e < B.edge_count(); ++e)
        for (int f = 0; f < C.edge_count(); ++f) {
            if (b.emap[e] != c.emap[f]) continue;
            int s = vpair.at({B.src(e), C.src(f)});
            int t = vpair.at({B.tgt(e), C.tgt(f)});
            std::string name = apex.fresh_edge_name(B.edge_name(e) + "|" + C.edge_name(f));
            apex.add_edge(name, s, t, meet({B.edge_label(e), C.edge_label(f)}));
            le.push_back(e);
            re.push_back(f);
        }

    GraphMorphism left{apex, B, lv, le};
    GraphMorphism right{apex, C, rv, re};
    return {std::move(apex), std::move(left), std::move(right)};
}

// ---------------------------------------------------------------------------
// Probe generation

namespace {

// All set partitions of {0..n-1} as block-index vectors (restricted growth).
void partitions_rec(int n, int pos, int max_block, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (int blk = 0; blk <= max_block + 1; ++blk) {
        cur[pos] = blk;
        partitions_rec(n, pos + 1, std::max(max_block, blk), cur, out);
    }
}

std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur(n, 0);
    partitions_rec(n, 1, 0, cur, out);
    return out;
}

}  // namespace

std::vector<LabeledGraph> quotient_graphs(const LabeledGraph& g, int max_elements) {
    std::vector<LabeledGraph> out;
    if (g.vertex_count() > 9) return out;  // enumeration guard; callers pass probes instead

    for (const auto& vpart : set_partitions(g.vertex_count())) {
        int nblocks = vpart.empty() ? 0 : *std::max_element(vpart.begin(), vpart.end()) + 1;
        if (nblocks > max_elements) continue;

        // Edges may only merge when their endpoint blocks agree.
        std::map<std::pair<int, int>, std::vector<int>> groups;
        for (int e = 0; e < g.edge_count(); ++e)
            groups[{vpart[g.src(e)], vpart[g.tgt(e)]}].push_back(e);

        // Enumerate edge partitions as the product of per-group partitions.
        std::vector<std::vector<std::vector<int>>> group_parts;
        for (auto& [key, edges] : groups)
            group_parts.push_back(set_partitions(static_cast<int>(edges.size())));

        std::vector<int> pick(group_parts.size(), 0);
        while (true) {
            std::vector<int> epart(g.edge_count(), -1);
            int eblocks = 0;
            int gi = 0;
            for (auto& [key, edges] : groups) {
                const auto& part = group_parts[gi][pick[gi]];
                int base = eblocks;
                int local = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;
                for (std::size_t k = 0; k < edges.size(); ++k) epart[edges[k]] = base + part[k];
                eblocks += local;
                ++gi;
            }
            if (nblocks + eblocks <= max_elements) {
                LabeledGraph q("q");
                std::vector<std::vector<Label>> vlabels(nblocks), elabels(eblocks);
                std::vector<int> esrc(eblocks, -1), etgt(eblocks, -1);
                for (int v = 0; v < g.vertex_count(); ++v) vlabels[vpart[v]].push_back(g.vertex_label(v));
                for (int e = 0; e < g.edge_count(); ++e) {
                    elabels[epart[e]].push_back(g.edge_label(e));
                    esrc[epart[e]] = vpart[g.src(e)];
                    etgt[epart[e]] = vpart[g.tgt(e)];
                }
                for (int blk = 0; blk < nblocks; ++blk)
                    q.add_vertex("v" + std::to_string(blk), join(vlabels[blk]));
                for (int blk = 0; blk < eblocks; ++blk)
                    q.add_edge("e" + std::to_string(blk), esrc[blk], etgt[blk], join(elabels[blk]));
                out.push_back(std::move(q));
            }
            // Advance the product counter.
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (static_cast<std::size_t>(++pick[i]) < group_parts[i].size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    return out;
}

std::vector<LabeledGraph> subgraphs(const LabeledGraph& g, int max_elements) {
    std::vector<LabeledGraph> out;
    int nv = g.vertex_count();
    if (nv > 12) return out;
    for (unsigned vs = 0; vs < (1u << nv); ++vs) {
        int vcount = __builtin_popcount(vs);
        if (vcount > max_elements) continue;
        std::vector<int> verts;
        for (int v = 0; v < nv; ++v)
            if (vs & (1u << v)) verts.push_back(v);
        std::vector<int> cand;
        for (int e = 0; e < g.edge_count(); ++e)
            if ((vs & (1u << g.src(e))) && (vs & (1u << g.tgt(e)))) cand.push_back(e);
        int ne = static_cast<int>(cand.size());
        if (ne > 20) continue;
        for (unsigned es = 0; es < (1u << ne); ++es) {
            if (vcount + __builtin_popcount(es) > max_elements) continue;
            std::vector<int> edges;
            for (int e = 0; e < ne; ++e)
                if (es & (1u << e)) edges.push_back(cand[e]);
            out.push_back(g.induced(verts, edges));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Universal-property verifiers

namespace {

// Index-level composition for the hot loops. Sound because every morphism
// involved was enumerated against the very graph instances at hand, so the
// index layouts agree; the public compose() stays name-routed.
struct Maps {
    std::vector<int> v, e;
    bool operator==(const Maps&) const = default;
};

Maps comp_idx(const GraphMorphism& first, const GraphMorphism& then) {
    Maps out;
    out.v.resize(first.vmap.size());
    out.e.resize(first.emap.size());
    for (std::size_t i = 0; i < first.vmap.size(); ++i) out.v[i] = then.vmap[first.vmap[i]];
    for (std::size_t i = 0; i < first.emap.size(); ++i) out.e[i] = then.emap[first.emap[i]];
    return out;
}

// Deduplicate generated probe graphs by their structural text.
void append_probe(std::vector<LabeledGraph>& probes, std::set<std::string>& seen,
                  const LabeledGraph& g) {
    std::string key;
    for (int v = 0; v < g.vertex_count(); ++v)
        key += g.vertex_name(v) + "^" + g.vertex_label(v).str() + ";";
    for (int e = 0; e < g.edge_count(); ++e)
        key += std::to_string(g.src(e)) + ">" + std::to_string(g.tgt(e)) + "^" +
               g.edge_label(e).str() + ";";
    if (seen.insert(key).second) probes.push_back(g);
}

}  // namespace

bool verify_pushout_universal(const GraphMorphism& b, const GraphMorphism& c,
                              const CospanResult& candidate,
                              const std::vector<LabeledGraph>& extra_probes,
                              int max_probe_elements) {
    const GraphMorphism& m = candidate.left;
    const GraphMorphism& n = candidate.right;
    if (!validate_morphism(m) || !validate_morphism(n)) return false;
    if (!(m.dom == b.cod) || !(n.dom == c.cod)) return false;
    if (!(m.cod == candidate.apex) || !(n.cod == candidate.apex)) return false;
    if (!(compose(b, m) == compose(c, n))) return false;

    std::vector<LabeledGraph> probes;
    std::set<std::string> seen;
    probes.push_back(candidate.apex);
    for (auto& q : quotient_graphs(candidate.apex, max_probe_elements))
        append_probe(probes, seen, q);
    for (const auto& p : extra_probes) probes.push_back(p);

    for (const LabeledGraph& Z : probes) {
        auto fs = enumerate_morphisms(b.cod, Z);
        auto gs = enumerate_morphisms(c.cod, Z);
        auto hs = enumerate_morphisms(candidate.apex, Z);
        std::vector<Maps> fb, gc;
        fb.reserve(fs.size());
        gc.reserve(gs.size());
        for (const auto& f : fs) fb.push_back(comp_idx(b, f));
        for (const auto& g : gs) gc.push_back(comp_idx(c, g));
        std::vector<Maps> hm, hn;
        hm.reserve(hs.size());
        hn.reserve(hs.size());
        for (const auto& h : hs) {
            hm.push_back(comp_idx(m, h));
            hn.push_back(comp_idx(n, h));
        }
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            Maps want_f{fs[fi].vmap, fs[fi].emap};
            for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                if (!(fb[fi] == gc[gi])) continue;  // not a cocone
                Maps want_g{gs[gi].vmap, gs[gi].emap};
                int mediators = 0;
                for (std::size_t hi = 0; hi < hs.size(); ++hi) {
                    if (hm[hi] == want_f && hn[hi] == want_g) ++mediators;
                    if (mediators > 1) break;
                }
                if (mediators != 1) return false;
            }
        }
    }
    return true;
}

bool verify_pullback_universal(const GraphMorphism& b, const GraphMorphism& c,
                               const SpanResult& candidate,
                               const std::vector<LabeledGraph>& extra_probes,
                               int max_probe_elements) {
    const GraphMorphism& pB = candidate.left;
    const GraphMorphism& pC = candidate.right;
    if (!validate_morphism(pB) || !validate_morphism(pC)) return false;
    if (!(pB.dom == candidate.apex) || !(pC.dom == candidate.apex)) return false;
    if (!(pB.cod == b.dom) || !(pC.cod == c.dom)) return false;
    if (!(compose(pB, b) == compose(pC, c))) return false;

    std::vector<LabeledGraph> probes;
    std::set<std::string> seen;
    probes.push_back(candidate.apex);
    for (auto& s : subgraphs(candidate.apex, max_probe_elements)) append_probe(probes, seen, s);
    for (const auto& p : extra_probes) probes.push_back(p);

    for (const LabeledGraph& Z : probes) {
        auto fs = enumerate_morphisms(Z, b.dom);
        auto gs = enumerate_morphisms(Z, c.dom);
        auto hs = enumerate_morphisms(Z, candidate.apex);
        std::vector<Maps> fb, gc;
        fb.reserve(fs.size());
        gc.reserve(gs.size());
        for (const auto& f : fs) fb.push_back(comp_idx(f, b));
        for (const auto& g : gs) gc.push_back(comp_idx(g, c));
        std::vector<Maps> hB, hC;
        hB.reserve(hs.size());
        hC.reserve(hs.size());
        for (const auto& h : hs) {
            hB.push_back(comp_idx(h, pB));
            hC.push_back(comp_idx(h, pC));
        }
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            Maps want_f{fs[fi].vmap, fs[fi].emap};
            for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                if (!(fb[fi] == gc[gi])) continue;  // not a cone
                Maps want_g{gs[gi].vmap, gs[gi].emap};
                int mediators = 0;
                for (std::size_t hi = 0; hi < hs.size(); ++hi) {
                    if (hB[hi] == want_f && hC[hi] == want_g) ++mediators;
                    if (mediators > 1) break;
                }
                if (mediators != 1) return false;
            }
        }
    }
    return true;
}

}  // namespace pbpo
