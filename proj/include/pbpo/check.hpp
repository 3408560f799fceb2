#pragma once

#include <string>
#include <vector>

#include "pbpo/encoding.hpp"
#include "pbpo/engine.hpp"
#include "pbpo/random_gen.hpp"
#include "pbpo/term.hpp"
#include "pbpo/zoning.hpp"

namespace pbpo {

// Outcome of one randomized property suite. Failures carry a reproduction
// (term/graph text) in messages.
struct SuiteResult {
    std::string name;
    int samples = 0;
    int failures = 0;
    std::vector<std::string> messages;

    bool passed() const { return failures == 0; }
    void merge(const SuiteResult& o);
    void fail(const std::string& msg);
};

// Term-level step at p implies an isomorphic graph-level step at p.
SuiteResult check_step_preserving(const Trs& trs, RandomGen& gen, int samples, int max_size);

// Every graph reachable within `depth` engine steps from an encoded term
// decodes, and each decoded edge is a valid term-level step.
SuiteResult check_closed(const Trs& trs, RandomGen& gen, int samples, int max_size, int depth);

// At every applicable position exactly one adherence exists, results there
// are isomorphic, and match positions agree with the term-level redexes.
SuiteResult check_match_determinism(const Trs& trs, RandomGen& gen, int samples, int max_size);

// Every step G -> H commutes with cycle-edge removal up to isomorphism.
SuiteResult check_drop_cycles(const Trs& trs, RandomGen& gen, int samples, int max_vertices);

// Steps before and after relabeling a bad node correspond bijectively with
// identically-relabeled results.
SuiteResult check_bad_node_relabel(const Trs& trs, RandomGen& gen, int samples,
                                   int max_vertices);

// Zoning order-independence, bridge endpoints, zone connectedness/tree
// shape, and decoding of acyclic zones.
SuiteResult check_zoning(const Trs& trs, RandomGen& gen, int samples, int max_vertices);

// Pushout/pullback outputs satisfy their universal properties on random
// spans/cospans; monos are stable under pushout and preserved by pullback.
SuiteResult check_categorical(RandomGen& gen, int samples);

// Match images stay within one zone.
SuiteResult check_match_zone_boundary(const Trs& trs, RandomGen& gen, int samples,
                                      int max_vertices);

}  // namespace pbpo
