#include "pbpo/random_gen.hpp"

#include <algorithm>

namespace pbpo {

int RandomGen::pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool RandomGen::chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
}

Signature RandomGen::random_signature(int max_symbols, int max_arity) {
    static const char* names[] = {"f", "g", "h", "a", "b", "c", "k", "m"};
    Signature sig;
    int n = pick(2, max_symbols);
    bool have_constant = false;
    for (int i = 0; i < n; ++i) {
        int arity = pick(0, max_arity);
        if (i == n - 1 && !have_constant) arity = 0;
        if (arity == 0) have_constant = true;
        sig.add(names[i], arity);
    }
    return sig;
}

namespace {

std::vector<std::pair<std::string, int>> symbol_list(const Signature& sig) {
    return {sig.arities().begin(), sig.arities().end()};
}

}  // namespace

Term RandomGen::random_linear_term(const Signature& sig, int max_symbols, int* var_counter) {
    if (max_symbols <= 0 || chance(0.2))
        return Term::var("v" + std::to_string((*var_counter)++));
    auto symbols = symbol_list(sig);
    // Prefer symbols that fit the remaining budget.
    std::vector<std::pair<std::string, int>> fitting;
    for (const auto& s : symbols)
        if (1 + s.second <= max_symbols || s.second == 0) fitting.push_back(s);
    if (fitting.empty()) return Term::var("v" + std::to_string((*var_counter)++));
    auto [sym, arity] = fitting[pick(0, static_cast<int>(fitting.size()) - 1)];
    int budget = max_symbols - 1;
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) {
        int share = arity > 0 ? budget / arity : 0;
        args.push_back(random_linear_term(sig, share, var_counter));
    }
    return Term::app(sym, std::move(args));
}

TrsRule RandomGen::random_linear_rule(const Signature& sig, int max_symbols) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        int vc = 0;
        Term lhs = random_linear_term(sig, max_symbols, &vc);
        if (lhs.is_var()) continue;
        auto lvars = variables_of(lhs);
        // rhs over a subset of lhs variables, still linear.
        int rc = 1000;  // fresh pool offset so rhs picks only from lvars below
        Term rhs = random_linear_term(sig, max_symbols, &rc);
        std::vector<std::string> pool(lvars.begin(), lvars.end());
        std::map<std::string, Term> rename;
        bool ok = true;
        for (const auto& v : variables_of(rhs)) {
            if (pool.empty()) {
                ok = false;
                break;
            }
            int i = pick(0, static_cast<int>(pool.size()) - 1);
            rename.emplace(v, Term::var(pool[i]));
            pool.erase(pool.begin() + i);
        }
        if (!ok) continue;
        rhs = apply_substitution(rhs, rename);
        TrsRule rule{lhs, rhs};
        try {
            check_rule(sig, rule);
        } catch (const std::invalid_argument&) {
            continue;
        }
        return rule;
    }
    // Degenerate signature; fall back to a size-1 collapse rule.
    auto symbols = symbol_list(sig);
    for (const auto& [sym, arity] : symbols)
        if (arity > 0) {
            std::vector<Term> args;
            for (int i = 0; i < arity; ++i) args.push_back(Term::var("v" + std::to_string(i)));
            return TrsRule{Term::app(sym, args), Term::var("v0")};
        }
    throw std::invalid_argument("signature admits no non-variable lhs");
}

std::map<std::string, Term> RandomGen::random_substitution(const Signature& sig,
                                                           const std::set<std::string>& vars,
                                                           int max_symbols, int* var_counter) {
    std::map<std::string, Term> sigma;
    for (const auto& v : vars)
        sigma.emplace(v, random_linear_term(sig, pick(0, max_symbols), var_counter));
    return sigma;
}

std::pair<Term, Position> RandomGen::random_context(const Signature& sig, int max_symbols,
                                                    int* var_counter) {
    Term t = random_linear_term(sig, max_symbols, var_counter);
    auto ps = positions_of(t);
    Position hole = ps[pick(0, static_cast<int>(ps.size()) - 1)];
    return {t, hole};
}

LabeledGraph RandomGen::random_graph(const Signature& sig, int max_vertices, int max_edges) {
    LabeledGraph g("rand");
    auto symbols = symbol_list(sig);
    int max_arity = 0;
    for (const auto& [s, a] : symbols) max_arity = std::max(max_arity, a);
    int nv = pick(1, max_vertices);
    for (int v = 0; v < nv; ++v) {
        Label l;
        int kind = pick(0, 9);
        if (kind == 0)
            l = Label::bottom();
        else if (kind == 1)
            l = Label::top();
        else if (kind == 2 && max_arity > 0)
            l = Label::index(pick(1, max_arity));
        else
            l = Label::symbol(symbols[pick(0, static_cast<int>(symbols.size()) - 1)].first);
        g.add_vertex("n" + std::to_string(v), l);
    }
    int ne = pick(0, max_edges);
    for (int e = 0; e < ne; ++e) {
        Label l;
        int kind = pick(0, 9);
        if (kind == 0)
            l = Label::top();
        else if (kind == 1)
            l = Label::bottom();
        else
            l = Label::index(pick(1, std::max(1, max_arity)));
        g.add_edge("e" + std::to_string(e), pick(0, nv - 1), pick(0, nv - 1), l);
    }
    return g;
}

LabeledGraph RandomGen::random_termish_graph(const Signature& sig, int max_vertices) {
    // Mostly well-formed symbol nodes with correct argument edges, with some
    // defects: shared children, missing edges, stray labels.
    LabeledGraph g("randterm");
    auto symbols = symbol_list(sig);
    int nv = pick(2, max_vertices);
    for (int v = 0; v < nv; ++v) {
        if (chance(0.12))
            g.add_vertex("n" + std::to_string(v), chance(0.5) ? Label::bottom() : Label::top());
        else
            g.add_vertex("n" + std::to_string(v),
                         Label::symbol(symbols[pick(0, static_cast<int>(symbols.size()) - 1)].first));
    }
    int en = 0;
    for (int v = 0; v < nv; ++v) {
        const Label& l = g.vertex_label(v);
        if (!l.is_base() || l.is_index() || !sig.contains(l.base)) continue;
        int arity = sig.arity(l.base);
        for (int i = 1; i <= arity; ++i) {
            if (chance(0.15)) continue;  // missing argument edge
            int tgt = pick(0, nv - 1);
            g.add_edge("e" + std::to_string(en++), v, tgt, Label::index(i));
        }
    }
    return g;
}

}  // namespace pbpo
