#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbpo/lattice.hpp"

namespace pbpo {

// First-order term: a variable or an application f(t1, ..., tn).
class Term {
public:
    static Term var(std::string name);
    static Term app(std::string symbol, std::vector<Term> args = {});

    bool is_var() const { return is_var_; }
    const std::string& head() const { return head_; }  // variable name or symbol
    const std::vector<Term>& args() const { return args_; }

    int symbol_count() const;  // number of non-variable nodes
    std::string str() const;
    bool operator==(const Term& o) const;

private:
    bool is_var_ = true;
    std::string head_;
    std::vector<Term> args_;
};

// Path of argument indices, each >= 1; empty is the root position.
using Position = std::vector<int>;
std::string position_str(const Position& p);  // "eps", "1", "21", ...

struct TrsRule {
    Term lhs;
    Term rhs;
    std::string str() const { return lhs.str() + " -> " + rhs.str(); }
};

struct Trs {
    Signature signature;
    std::vector<TrsRule> rules;
};

bool is_linear(const Term& t);
std::set<std::string> variables_of(const Term& t);
std::vector<Position> positions_of(const Term& t);  // all positions, pre-order

// Throws std::invalid_argument when p is not a position in t.
const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& replacement);
Term apply_substitution(const Term& t, const std::map<std::string, Term>& sigma);

// Syntactic first-order matching of a linear pattern against a subject.
std::optional<std::map<std::string, Term>> match_linear(const Term& pattern, const Term& subject);

// Structural equality modulo a bijective variable renaming (decoding is
// only defined up to renaming).
bool equal_modulo_renaming(const Term& a, const Term& b);

// Applies rule `rule_index` at position p; absent when the lhs does not
// match there. Throws on invalid rule index or position.
std::optional<Term> rewrite_at(const Trs& trs, const Term& t, std::size_t rule_index,
                               const Position& p);

// Every (rule index, position) at which rewrite_at succeeds, positions in
// leftmost-innermost order, rules in declaration order within a position.
std::vector<std::pair<std::size_t, Position>> all_redexes(const Trs& trs, const Term& t);

// Validation against a signature: arities match, no all-digit identifiers.
void check_term(const Signature& sig, const Term& t);
// Full rule validation: lhs not a variable, Var(rhs) subset of Var(lhs),
// both sides linear. Throws std::invalid_argument naming the offender.
void check_rule(const Signature& sig, const TrsRule& rule);

// --- text format ---------------------------------------------------------
// One declaration per line:
//   sig f/2 g/1 a/0
//   f(x, g(b), y) -> h(g(y), a)
// Identifiers are alphanumeric; variables are the identifiers not declared
// in the signature. '#' starts a comment.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

Trs parse_trs(const std::string& text);
Term parse_term(const std::string& text, const Signature& sig);
std::string trs_to_text(const Trs& trs);

}  // namespace pbpo
