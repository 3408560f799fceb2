#pragma once

#include <string>
#include <vector>

#include "pbpo/graph.hpp"

namespace pbpo {

// A rewrite rule: lhs pattern L with type graph L' (typing tL), interface K
// with type graph K' (typing tK), replacement R, and the connecting
// morphisms l : K -> L, r : K -> R, lp : K' -> L'. tL and tK must be monic
// and the square (l, tK, lp, tL) a pullback.
struct PbpoRule {
    std::string name = "rule";
    LabeledGraph L, K, R, Lp, Kp;
    GraphMorphism l;   // K  -> L
    GraphMorphism r;   // K  -> R
    GraphMorphism lp;  // Kp -> Lp
    GraphMorphism tL;  // L  -> Lp
    GraphMorphism tK;  // K  -> Kp

    bool is_linear() const;  // lp monic
};

// Diagnostic list; empty means the rule is well-formed (morphism validity,
// endpoint agreement, tL/tK monic, pullback square).
std::vector<std::string> validate_rule(const PbpoRule& rule);

}  // namespace pbpo
