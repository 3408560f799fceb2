#include "pbpo/pbpo_rule.hpp"

#include "pbpo/cat_ops.hpp"
#include "pbpo/morphism_search.hpp"

namespace pbpo {

bool PbpoRule::is_linear() const { return is_mono(lp); }

std::vector<std::string> validate_rule(const PbpoRule& rule) {
    std::vector<std::string> out;
    auto check = [&](const GraphMorphism& f, const char* fname, const LabeledGraph& dom,
                     const LabeledGraph& cod) {
        if (!(f.dom == dom) || !(f.cod == cod)) {
            out.push_back(std::string("morphism ") + fname + " connects the wrong graphs");
            return false;
        }
        for (const auto& v : morphism_violations(f))
            out.push_back(std::string(fname) + ": " + v);
        return morphism_violations(f).empty();
    };
    bool ok = true;
    ok &= check(rule.l, "l", rule.K, rule.L);
    ok &= check(rule.r, "r", rule.K, rule.R);
    ok &= check(rule.lp, "lp", rule.Kp, rule.Lp);
    ok &= check(rule.tL, "tL", rule.L, rule.Lp);
    ok &= check(rule.tK, "tK", rule.K, rule.Kp);
    if (!ok) return out;

    if (!is_mono(rule.tL)) out.push_back("tL is not monic");
    if (!is_mono(rule.tK)) out.push_back("tK is not monic");
    if (!(compose(rule.l, rule.tL) == compose(rule.tK, rule.lp)))
        out.push_back("rule square does not commute (tL . l != lp . tK)");
    if (!out.empty()) return out;

    // Pullback property of the rule square: the canonical pullback of
    // (tL, lp) must be K with projections l and tK, up to iso.
    SpanResult pb = pullback(rule.tL, rule.lp);
    bool found = false;
    for (const auto& phi : enumerate_morphisms(rule.K, pb.apex)) {
        if (!is_iso(phi)) continue;
        if (compose(phi, pb.left) == rule.l && compose(phi, pb.right) == rule.tK) {
            found = true;
            break;
        }
    }
    if (!found) out.push_back("rule square is not a pullback");
    return out;
}

}  // namespace pbpo
