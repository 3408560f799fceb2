#include "pbpo/morphism_search.hpp"

#include <algorithm>
#include <numeric>

namespace pbpo {

namespace {

struct Searcher {
    const LabeledGraph& A;
    const LabeledGraph& B;
    const MorphismSearchOptions& opt;
    std::vector<GraphMorphism> results;

    std::vector<int> order;      // A vertices in assignment order
    std::vector<int> vassign;    // A vertex -> B vertex or -1
    std::vector<bool> vused;     // B vertex used (mono)
    std::vector<int> eassign;    // A edge -> B edge or -1
    std::vector<bool> eused;

    Searcher(const LabeledGraph& a, const LabeledGraph& b, const MorphismSearchOptions& o)
        : A(a), B(b), opt(o) {
        // Fixed vertices first, then BFS outward so every later vertex is
        // constrained by an already-assigned neighbor where possible; ties
        // by descending degree.
        std::vector<int> by_degree(A.vertex_count());
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](int x, int y) { return A.degree(x) > A.degree(y); });
        std::vector<bool> queued(A.vertex_count(), false);
        auto enqueue = [&](int v) {
            if (!queued[v]) {
                queued[v] = true;
                order.push_back(v);
            }
        };
        for (const auto& [v, w] : opt.fixed_vertices) {
            (void)w;
            if (v >= 0 && v < A.vertex_count()) enqueue(v);
        }
        std::size_t head = 0;
        while (static_cast<int>(order.size()) < A.vertex_count()) {
            if (head == order.size()) {
                // Start a new component at the highest-degree unqueued vertex.
                for (int v : by_degree)
                    if (!queued[v]) {
                        enqueue(v);
                        break;
                    }
            }
            int v = order[head++];
            std::vector<int> neighbors;
            for (int e : A.out_edges(v)) neighbors.push_back(A.tgt(e));
            for (int e : A.in_edges(v)) neighbors.push_back(A.src(e));
            std::stable_sort(neighbors.begin(), neighbors.end(),
                             [&](int x, int y) { return A.degree(x) > A.degree(y); });
            for (int w : neighbors) enqueue(w);
        }
        vassign.assign(A.vertex_count(), -1);
        vused.assign(B.vertex_count(), false);
        eassign.assign(A.edge_count(), -1);
        eused.assign(B.edge_count(), false);
    }

    bool label_ok(const Label& a, const Label& b) const {
        return opt.label_exact ? a == b : leq(a, b);
    }

    bool done() const { return opt.limit && results.size() >= *opt.limit; }

    // An A-edge between assigned endpoints must have at least one candidate.
    bool edge_feasible(int v) const {
        for (int e : A.out_edges(v)) {
            int t = A.tgt(e);
            if (vassign[t] < 0) continue;
            if (!candidate_exists(e, vassign[v], vassign[t])) return false;
        }
        for (int e : A.in_edges(v)) {
            int s = A.src(e);
            if (vassign[s] < 0) continue;
            if (!candidate_exists(e, vassign[s], vassign[v])) return false;
        }
        return true;
    }

    bool candidate_exists(int ae, int bsrc, int btgt) const {
        auto fixed = opt.fixed_edges.find(ae);
        for (int be : B.out_edges(bsrc)) {
            if (B.tgt(be) != btgt) continue;
            if (!label_ok(A.edge_label(ae), B.edge_label(be))) continue;
            if (fixed != opt.fixed_edges.end() && fixed->second != be) continue;
            return true;
        }
        return false;
    }

    void assign_vertices(std::size_t pos) {
        if (done()) return;
        if (pos == order.size()) {
            assign_edges(0);
            return;
        }
        int v = order[pos];
        auto fixed = opt.fixed_vertices.find(v);
        for (int w = 0; w < B.vertex_count(); ++w) {
            if (fixed != opt.fixed_vertices.end() && fixed->second != w) continue;
            if (opt.mono_only && vused[w]) continue;
            if (!label_ok(A.vertex_label(v), B.vertex_label(w))) continue;
            vassign[v] = w;
            vused[w] = true;
            if (edge_feasible(v)) assign_vertices(pos + 1);
            vused[w] = false;
            vassign[v] = -1;
            if (done()) return;
        }
    }

    void assign_edges(int e) {
        if (done()) return;
        if (e == A.edge_count()) {
            emit();
            return;
        }
        int bsrc = vassign[A.src(e)];
        int btgt = vassign[A.tgt(e)];
        auto fixed = opt.fixed_edges.find(e);
        for (int be : B.out_edges(bsrc)) {
            if (B.tgt(be) != btgt) continue;
            if (!label_ok(A.edge_label(e), B.edge_label(be))) continue;
            if (fixed != opt.fixed_edges.end() && fixed->second != be) continue;
            if (opt.mono_only && eused[be]) continue;
            eassign[e] = be;
            eused[be] = true;
            assign_edges(e + 1);
            eused[be] = false;
            eassign[e] = -1;
            if (done()) return;
        }
    }

    void emit() {
        GraphMorphism f{A, B, vassign, eassign};
        results.push_back(std::move(f));
    }
};

}  // namespace

std::vector<GraphMorphism> enumerate_morphisms(const LabeledGraph& A, const LabeledGraph& B,
                                               const MorphismSearchOptions& opt) {
    if (opt.mono_only &&
        (A.vertex_count() > B.vertex_count() || A.edge_count() > B.edge_count()))
        return {};
    Searcher s(A, B, opt);
    if (A.vertex_count() == 0) {
        if (A.edge_count() == 0) s.emit();
    } else {
        s.assign_vertices(0);
    }
    return std::move(s.results);
}

std::vector<GraphMorphism> enumerate_morphisms(const LabeledGraph& A, const LabeledGraph& B,
                                               bool mono_only) {
    MorphismSearchOptions opt;
    opt.mono_only = mono_only;
    return enumerate_morphisms(A, B, opt);
}

std::optional<GraphMorphism> are_isomorphic(const LabeledGraph& A, const LabeledGraph& B) {
    if (A.vertex_count() != B.vertex_count() || A.edge_count() != B.edge_count())
        return std::nullopt;
    auto sorted_labels = [](const LabeledGraph& g) {
        std::vector<Label> vs, es;
        for (int v = 0; v < g.vertex_count(); ++v) vs.push_back(g.vertex_label(v));
        for (int e = 0; e < g.edge_count(); ++e) es.push_back(g.edge_label(e));
        std::sort(vs.begin(), vs.end());
        std::sort(es.begin(), es.end());
        return std::pair{vs, es};
    };
    if (sorted_labels(A) != sorted_labels(B)) return std::nullopt;
    auto degrees = [](const LabeledGraph& g) {
        std::vector<std::pair<int, int>> d;
        for (int v = 0; v < g.vertex_count(); ++v) d.emplace_back(g.in_degree(v), g.out_degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(A) != degrees(B)) return std::nullopt;

    MorphismSearchOptions opt;
    opt.mono_only = true;
    opt.label_exact = true;
    opt.limit = 1;
    auto found = enumerate_morphisms(A, B, opt);
    if (found.empty()) return std::nullopt;
    // Equal counts + injective + label-exact means bijective both ways.
    return found.front();
}

}  // namespace pbpo
