#pragma once

#include <optional>
#include <string>

#include "pbpo/graph.hpp"
#include "pbpo/pbpo_rule.hpp"
#include "pbpo/term.hpp"
#include "pbpo/zoning.hpp"

namespace pbpo {

// Line-oriented graph format:
//   graph <name>
//   v <id> <label>
//   e <id> <src> <tgt> <label>
//   root <id>          (optional)
// Labels: "_|_" bottom, "^T^" top, bare symbol or integer otherwise.
struct GraphFile {
    LabeledGraph graph;
    std::optional<int> root;

    RootedGraph rooted() const;  // throws when no root line was present
};

GraphFile parse_graph(const std::string& text);
std::string graph_to_text(const LabeledGraph& g, std::optional<int> root = std::nullopt);

// Rule format: the five graph blocks named L, K, R, Lp, Kp followed by the
// morphism blocks
//   morphism l K L
//   v <from> <to>
//   e <from> <to>
// for l, r, lp, tL, tK. Parsing validates the rule.
PbpoRule parse_rule(const std::string& text);
std::string rule_to_text(const PbpoRule& rule);

// DOT export mirroring the figures: vertex caption "id^label", edge caption
// the edge label; top-labeled closure elements drawn at reduced opacity.
// With a zoning, zones become clusters and bridges dotted edges.
std::string to_dot(const LabeledGraph& g, std::optional<int> root = std::nullopt,
                   const Zoning* zoning = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pbpo
