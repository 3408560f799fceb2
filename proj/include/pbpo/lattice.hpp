#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbpo {

// Label domain: the flat lattice over a base set of signature symbols and
// positive integers (argument positions). Bottom is below everything, Top
// above everything, and all base labels are pairwise incomparable.
struct Label {
    enum class Kind { Bottom, Top, Base };

    Kind kind = Kind::Bottom;
    std::string base;  // symbol name or decimal positive integer; Kind::Base only

    static Label bottom() { return {Kind::Bottom, {}}; }
    static Label top() { return {Kind::Top, {}}; }
    static Label symbol(std::string name);
    static Label index(int i);  // argument-position label, i >= 1

    bool is_bottom() const { return kind == Kind::Bottom; }
    bool is_top() const { return kind == Kind::Top; }
    bool is_base() const { return kind == Kind::Base; }
    bool is_index() const;
    std::optional<int> index_value() const;

    bool operator==(const Label&) const = default;
    bool operator<(const Label& o) const;  // arbitrary total order for containers

    // Serialized form: "_|_" for bottom, "^T^" for top, bare text otherwise.
    std::string str() const;
    static std::optional<Label> parse(const std::string& text);
};

bool leq(const Label& a, const Label& b);
Label join(const std::vector<Label>& labels);  // empty set joins to bottom
Label meet(const std::vector<Label>& labels);  // empty set meets to top

// Finite map symbol -> arity. Symbol names must be identifiers (leading
// letter), so they never collide with the integer half of the label set.
class Signature {
public:
    void add(const std::string& symbol, int arity);
    bool contains(const std::string& symbol) const;
    int arity(const std::string& symbol) const;
    const std::map<std::string, int>& arities() const { return arities_; }
    bool empty() const { return arities_.empty(); }

private:
    std::map<std::string, int> arities_;
};

// True for [A-Za-z][A-Za-z0-9_]* — the lexical class shared by symbols and
// variables in the TRS text format.
bool is_identifier(const std::string& s);

}  // namespace pbpo
