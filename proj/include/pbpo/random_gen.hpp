#pragma once

#include <random>

#include "pbpo/graph.hpp"
#include "pbpo/term.hpp"

namespace pbpo {

// Seeded generators for terms, rules, substitutions, contexts and graphs.
// Everything is driven by one mt19937_64 so runs reproduce from the seed.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }
    int pick(int lo, int hi);  // inclusive
    bool chance(double p);

    Signature random_signature(int max_symbols = 5, int max_arity = 3);
    // Linear term over sig with at most max_symbols symbol occurrences;
    // variables are drawn fresh from the pool prefix.
    Term random_linear_term(const Signature& sig, int max_symbols, int* var_counter);
    TrsRule random_linear_rule(const Signature& sig, int max_symbols = 5);
    // Substitution binding each variable to a fresh-variable linear term.
    std::map<std::string, Term> random_substitution(const Signature& sig,
                                                    const std::set<std::string>& vars,
                                                    int max_symbols, int* var_counter);
    // A context as (term, hole position): plugging happens via replace_at.
    std::pair<Term, Position> random_context(const Signature& sig, int max_symbols,
                                             int* var_counter);

    // Arbitrary graph: labels drawn from the signature symbols, argument
    // indices, bottom and top. Parallel edges and loops allowed.
    LabeledGraph random_graph(const Signature& sig, int max_vertices, int max_edges);
    // Graph biased toward encoded-term shapes with defects mixed in.
    LabeledGraph random_termish_graph(const Signature& sig, int max_vertices);

private:
    std::mt19937_64 rng_;
};

}  // namespace pbpo
