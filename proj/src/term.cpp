#include "pbpo/term.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pbpo {

Term Term::var(std::string name) {
    Term t;
    t.is_var_ = true;
    t.head_ = std::move(name);
    return t;
}

Term Term::app(std::string symbol, std::vector<Term> args) {
    Term t;
    t.is_var_ = false;
    t.head_ = std::move(symbol);
    t.args_ = std::move(args);
    return t;
}

int Term::symbol_count() const {
    if (is_var_) return 0;
    int n = 1;
    for (const Term& a : args_) n += a.symbol_count();
    return n;
}

std::string Term::str() const {
    if (is_var_ || args_.empty()) return head_;
    std::string out = head_ + "(";
    for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) out += ", ";
        out += args_[i].str();
    }
    return out + ")";
}

bool Term::operator==(const Term& o) const {
    return is_var_ == o.is_var_ && head_ == o.head_ && args_ == o.args_;
}

std::string position_str(const Position& p) {
    if (p.empty()) return "eps";
    std::string out;
    for (int i : p) out += std::to_string(i);
    return out;
}

bool is_linear(const Term& t) {
    std::set<std::string> seen;
    bool ok = true;
    auto walk = [&](auto&& self, const Term& u) -> void {
        if (!ok) return;
        if (u.is_var()) {
            if (!seen.insert(u.head()).second) ok = false;
            return;
        }
        for (const Term& a : u.args()) self(self, a);
    };
    walk(walk, t);
    return ok;
}

std::set<std::string> variables_of(const Term& t) {
    std::set<std::string> out;
    auto walk = [&](auto&& self, const Term& u) -> void {
        if (u.is_var()) {
            out.insert(u.head());
            return;
        }
        for (const Term& a : u.args()) self(self, a);
    };
    walk(walk, t);
    return out;
}

std::vector<Position> positions_of(const Term& t) {
    std::vector<Position> out;
    auto walk = [&](auto&& self, const Term& u, Position p) -> void {
        out.push_back(p);
        if (u.is_var()) return;
        for (std::size_t i = 0; i < u.args().size(); ++i) {
            Position q = p;
            q.push_back(static_cast<int>(i + 1));
            self(self, u.args()[i], q);
        }
    };
    walk(walk, t, {});
    return out;
}

const Term& subterm_at(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (int i : p) {
        if (cur->is_var() || i < 1 || i > static_cast<int>(cur->args().size()))
            throw std::invalid_argument("invalid position " + position_str(p) + " in " + t.str());
        cur = &cur->args()[i - 1];
    }
    return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& replacement) {
    if (p.empty()) return replacement;
    if (t.is_var() || p[0] < 1 || p[0] > static_cast<int>(t.args().size()))
        throw std::invalid_argument("invalid position " + position_str(p) + " in " + t.str());
    std::vector<Term> args = t.args();
    Position rest(p.begin() + 1, p.end());
    args[p[0] - 1] = replace_at(args[p[0] - 1], rest, replacement);
    return Term::app(t.head(), std::move(args));
}

Term apply_substitution(const Term& t, const std::map<std::string, Term>& sigma) {
    if (t.is_var()) {
        auto it = sigma.find(t.head());
        return it == sigma.end() ? t : it->second;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(apply_substitution(a, sigma));
    return Term::app(t.head(), std::move(args));
}

std::optional<std::map<std::string, Term>> match_linear(const Term& pattern,
                                                        const Term& subject) {
    std::map<std::string, Term> sigma;
    bool ok = true;
    auto walk = [&](auto&& self, const Term& p, const Term& s) -> void {
        if (!ok) return;
        if (p.is_var()) {
            // Linear pattern: each variable is visited at most once.
            if (!sigma.emplace(p.head(), s).second) ok = false;
            return;
        }
        if (s.is_var() || p.head() != s.head() || p.args().size() != s.args().size()) {
            ok = false;
            return;
        }
        for (std::size_t i = 0; i < p.args().size(); ++i) self(self, p.args()[i], s.args()[i]);
    };
    walk(walk, pattern, subject);
    if (!ok) return std::nullopt;
    return sigma;
}

bool equal_modulo_renaming(const Term& a, const Term& b) {
    std::map<std::string, std::string> fwd, bwd;
    auto walk = [&](auto&& self, const Term& x, const Term& y) -> bool {
        if (x.is_var() != y.is_var()) return false;
        if (x.is_var()) {
            auto f = fwd.find(x.head());
            auto g = bwd.find(y.head());
            if (f == fwd.end() && g == bwd.end()) {
                fwd[x.head()] = y.head();
                bwd[y.head()] = x.head();
                return true;
            }
            return f != fwd.end() && g != bwd.end() && f->second == y.head() &&
                   g->second == x.head();
        }
        if (x.head() != y.head() || x.args().size() != y.args().size()) return false;
        for (std::size_t i = 0; i < x.args().size(); ++i)
            if (!self(self, x.args()[i], y.args()[i])) return false;
        return true;
    };
    return walk(walk, a, b);
}

std::optional<Term> rewrite_at(const Trs& trs, const Term& t, std::size_t rule_index,
                               const Position& p) {
    if (rule_index >= trs.rules.size())
        throw std::invalid_argument("rule index out of range");
    const TrsRule& rule = trs.rules[rule_index];
    const Term& sub = subterm_at(t, p);
    auto sigma = match_linear(rule.lhs, sub);
    if (!sigma) return std::nullopt;
    return replace_at(t, p, apply_substitution(rule.rhs, *sigma));
}

std::vector<std::pair<std::size_t, Position>> all_redexes(const Trs& trs, const Term& t) {
    std::vector<std::pair<std::size_t, Position>> out;
    // Leftmost-innermost: post-order traversal, left to right.
    auto walk = [&](auto&& self, const Term& u, const Position& p) -> void {
        if (!u.is_var()) {
            for (std::size_t i = 0; i < u.args().size(); ++i) {
                Position q = p;
                q.push_back(static_cast<int>(i + 1));
                self(self, u.args()[i], q);
            }
        }
        for (std::size_t r = 0; r < trs.rules.size(); ++r)
            if (match_linear(trs.rules[r].lhs, u)) out.emplace_back(r, p);
    };
    walk(walk, t, {});
    return out;
}

void check_term(const Signature& sig, const Term& t) {
    if (t.is_var()) {
        if (!is_identifier(t.head()))
            throw std::invalid_argument("invalid variable name '" + t.head() + "'");
        if (sig.contains(t.head()))
            throw std::invalid_argument("'" + t.head() + "' used as a variable but declared in the signature");
        return;
    }
    int want = sig.arity(t.head());
    if (want != static_cast<int>(t.args().size()))
        throw std::invalid_argument("symbol '" + t.head() + "' expects " + std::to_string(want) +
                                    " arguments, got " + std::to_string(t.args().size()));
    for (const Term& a : t.args()) check_term(sig, a);
}

void check_rule(const Signature& sig, const TrsRule& rule) {
    check_term(sig, rule.lhs);
    check_term(sig, rule.rhs);
    if (rule.lhs.is_var())
        throw std::invalid_argument("rule lhs must not be a variable: " + rule.str());
    auto lv = variables_of(rule.lhs), rv = variables_of(rule.rhs);
    for (const auto& x : rv)
        if (!lv.count(x))
            throw std::invalid_argument("variable '" + x + "' occurs in rhs but not in lhs: " +
                                        rule.str());
    auto repeated = [](const Term& t) -> std::optional<std::string> {
        std::set<std::string> seen;
        std::optional<std::string> bad;
        auto walk = [&](auto&& self, const Term& u) -> void {
            if (bad) return;
            if (u.is_var()) {
                if (!seen.insert(u.head()).second) bad = u.head();
                return;
            }
            for (const Term& a : u.args()) self(self, a);
        };
        walk(walk, t);
        return bad;
    };
    if (auto x = repeated(rule.lhs))
        throw std::invalid_argument("non-linear rule (variable '" + *x + "' repeats in lhs): " +
                                    rule.str());
    if (auto x = repeated(rule.rhs))
        throw std::invalid_argument("non-linear rule (variable '" + *x + "' repeats in rhs): " +
                                    rule.str());
}

// --- parsing --------------------------------------------------------------

namespace {

struct TermParser {
    const std::string& text;
    const Signature& sig;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw std::invalid_argument("expected identifier at offset " +
                                                      std::to_string(pos) + " in '" + text + "'");
        std::string s = text.substr(start, pos - start);
        if (!is_identifier(s))
            throw std::invalid_argument("invalid identifier '" + s + "' in '" + text + "'");
        return s;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Term term() {
        std::string name = ident();
        if (eat('(')) {
            std::vector<Term> args;
            skip_ws();
            if (!eat(')')) {
                args.push_back(term());
                while (eat(',')) args.push_back(term());
                if (!eat(')'))
                    throw std::invalid_argument("expected ')' in '" + text + "'");
            }
            if (!sig.contains(name))
                throw std::invalid_argument("undeclared symbol '" + name + "' applied to arguments");
            return Term::app(name, std::move(args));
        }
        if (sig.contains(name)) return Term::app(name);
        return Term::var(name);
    }
};

}  // namespace

Term parse_term(const std::string& text, const Signature& sig) {
    TermParser p{text, sig};
    Term t = p.term();
    p.skip_ws();
    if (p.pos != text.size())
        throw std::invalid_argument("trailing input after term in '" + text + "'");
    check_term(sig, t);
    return t;
}

Trs parse_trs(const std::string& text) {
    Trs trs;
    std::vector<std::pair<int, std::string>> rule_lines;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "sig") {
            std::string decl;
            while (ls >> decl) {
                auto slash = decl.find('/');
                if (slash == std::string::npos)
                    throw ParseError(lineno, "expected symbol/arity, got '" + decl + "'");
                std::string sym = decl.substr(0, slash);
                int arity;
                try {
                    std::size_t used = 0;
                    arity = std::stoi(decl.substr(slash + 1), &used);
                    if (used != decl.size() - slash - 1) throw std::invalid_argument("");
                } catch (...) {
                    throw ParseError(lineno, "bad arity in '" + decl + "'");
                }
                try {
                    trs.signature.add(sym, arity);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(lineno, e.what());
                }
            }
        } else {
            rule_lines.emplace_back(lineno, line);
        }
    }
    for (const auto& [ln, body] : rule_lines) {
        auto arrow = body.find("->");
        if (arrow == std::string::npos)
            throw ParseError(ln, "expected a 'sig' declaration or a rule 'lhs -> rhs'");
        try {
            TrsRule rule{parse_term(body.substr(0, arrow), trs.signature),
                         parse_term(body.substr(arrow + 2), trs.signature)};
            check_rule(trs.signature, rule);
            trs.rules.push_back(std::move(rule));
        } catch (const std::invalid_argument& e) {
            throw ParseError(ln, e.what());
        }
    }
    return trs;
}

std::string trs_to_text(const Trs& trs) {
    std::string out = "sig";
    for (const auto& [sym, arity] : trs.signature.arities())
        out += " " + sym + "/" + std::to_string(arity);
    out += "\n";
    for (const TrsRule& r : trs.rules) out += r.str() + "\n";
    return out;
}

}  // namespace pbpo
