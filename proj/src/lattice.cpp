#include "pbpo/lattice.hpp"

#include <cctype>
#include <stdexcept>

namespace pbpo {

Label Label::symbol(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty label symbol");
    return {Kind::Base, std::move(name)};
}

Label Label::index(int i) {
    if (i < 1) throw std::invalid_argument("argument-position labels start at 1");
    return {Kind::Base, std::to_string(i)};
}

bool Label::is_index() const {
    if (kind != Kind::Base || base.empty()) return false;
    for (char c : base)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return base[0] != '0';
}

std::optional<int> Label::index_value() const {
    if (!is_index()) return std::nullopt;
    return std::stoi(base);
}

bool Label::operator<(const Label& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    return base < o.base;
}

std::string Label::str() const {
    switch (kind) {
        case Kind::Bottom: return "_|_";
        case Kind::Top: return "^T^";
        case Kind::Base: return base;
    }
    return {};
}

std::optional<Label> Label::parse(const std::string& text) {
    if (text == "_|_") return bottom();
    if (text == "^T^") return top();
    if (text.empty()) return std::nullopt;
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c))) return std::nullopt;
    Label l{Kind::Base, text};
    if (text[0] == '0') return std::nullopt;  // "0" and leading zeros are not positions
    return l;
}

bool leq(const Label& a, const Label& b) {
    return a == b || a.is_bottom() || b.is_top();
}

Label join(const std::vector<Label>& labels) {
    Label acc = Label::bottom();
    for (const Label& l : labels) {
        if (leq(l, acc)) continue;
        if (leq(acc, l)) {
            acc = l;
            continue;
        }
        return Label::top();  // two incomparable base labels
    }
    return acc;
}

Label meet(const std::vector<Label>& labels) {
    Label acc = Label::top();
    for (const Label& l : labels) {
        if (leq(acc, l)) continue;
        if (leq(l, acc)) {
            acc = l;
            continue;
        }
        return Label::bottom();
    }
    return acc;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

void Signature::add(const std::string& symbol, int arity) {
    if (!is_identifier(symbol))
        throw std::invalid_argument("signature symbol must be an identifier: '" + symbol + "'");
    if (arity < 0) throw std::invalid_argument("negative arity for symbol '" + symbol + "'");
    if (arities_.count(symbol))
        throw std::invalid_argument("duplicate signature symbol '" + symbol + "'");
    arities_[symbol] = arity;
}

bool Signature::contains(const std::string& symbol) const { return arities_.count(symbol) > 0; }

int Signature::arity(const std::string& symbol) const {
    auto it = arities_.find(symbol);
    if (it == arities_.end())
        throw std::invalid_argument("unknown signature symbol '" + symbol + "'");
    return it->second;
}

}  // namespace pbpo
