#include <doctest.h>

#include <algorithm>

#include "pbpo/lattice.hpp"

using namespace pbpo;

namespace {

// Small label universe for exhaustive checks.
std::vector<Label> universe() {
    return {Label::bottom(), Label::top(),   Label::symbol("a"), Label::symbol("b"),
            Label::symbol("g"), Label::index(1), Label::index(2)};
}

// Independent least-upper-bound oracle: scan all upper bounds in the
// universe and require a unique minimum among them.
Label lub_oracle(const std::vector<Label>& u, const std::vector<Label>& s) {
    std::vector<Label> uppers;
    for (const Label& cand : u) {
        bool upper = std::all_of(s.begin(), s.end(),
                                 [&](const Label& x) { return leq(x, cand); });
        if (upper) uppers.push_back(cand);
    }
    for (const Label& m : uppers) {
        bool least = std::all_of(uppers.begin(), uppers.end(),
                                 [&](const Label& x) { return leq(m, x); });
        if (least) return m;
    }
    REQUIRE(false);
    return Label::top();
}

Label glb_oracle(const std::vector<Label>& u, const std::vector<Label>& s) {
    std::vector<Label> lowers;
    for (const Label& cand : u) {
        bool lower = std::all_of(s.begin(), s.end(),
                                 [&](const Label& x) { return leq(cand, x); });
        if (lower) lowers.push_back(cand);
    }
    for (const Label& m : lowers) {
        bool greatest = std::all_of(lowers.begin(), lowers.end(),
                                    [&](const Label& x) { return leq(x, m); });
        if (greatest) return m;
    }
    REQUIRE(false);
    return Label::bottom();
}

}  // namespace

TEST_CASE("leq on the flat lattice") {
    CHECK(leq(Label::symbol("f"), Label::symbol("f")));
    CHECK_FALSE(leq(Label::symbol("a"), Label::symbol("b")));
    CHECK(leq(Label::bottom(), Label::symbol("g")));
    CHECK(leq(Label::symbol("g"), Label::top()));
    CHECK_FALSE(leq(Label::symbol("a"), Label::index(1)));
    CHECK_FALSE(leq(Label::index(1), Label::index(2)));
}

TEST_CASE("leq is a partial order on a finite universe") {
    auto u = universe();
    for (const Label& a : u) CHECK(leq(a, a));
    for (const Label& a : u)
        for (const Label& b : u)
            if (leq(a, b) && leq(b, a)) CHECK(a == b);
    for (const Label& a : u)
        for (const Label& b : u)
            for (const Label& c : u)
                if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
}

TEST_CASE("join examples") {
    CHECK(join({}) == Label::bottom());
    CHECK(join({Label::symbol("a"), Label::bottom()}) == Label::symbol("a"));
    CHECK(join({Label::symbol("a"), Label::symbol("b")}) == Label::top());
}

TEST_CASE("meet examples") {
    CHECK(meet({}) == Label::top());
    CHECK(meet({Label::symbol("a"), Label::top()}) == Label::symbol("a"));
    CHECK(meet({Label::symbol("a"), Label::symbol("b")}) == Label::bottom());
}

TEST_CASE("join and meet agree with the brute-force bound oracles") {
    auto u = universe();
    // All subsets of size <= 3.
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i; j < u.size(); ++j)
            for (std::size_t k = j; k < u.size(); ++k) {
                std::vector<Label> s{u[i], u[j], u[k]};
                CHECK(join(s) == lub_oracle(u, s));
                CHECK(meet(s) == glb_oracle(u, s));
            }
}

TEST_CASE("join is an upper bound and below every upper bound") {
    auto u = universe();
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i; j < u.size(); ++j) {
            std::vector<Label> s{u[i], u[j]};
            Label v = join(s);
            for (const Label& x : s) CHECK(leq(x, v));
            for (const Label& upper : u) {
                bool is_upper = leq(u[i], upper) && leq(u[j], upper);
                if (is_upper) CHECK(leq(v, upper));
            }
        }
}

TEST_CASE("absorption") {
    auto u = universe();
    for (const Label& a : u)
        for (const Label& b : u) {
            CHECK(meet({a, join({a, b})}) == a);
            CHECK(join({a, meet({a, b})}) == a);
        }
}

TEST_CASE("label serialization round-trips") {
    for (const Label& l : universe()) {
        auto back = Label::parse(l.str());
        REQUIRE(back.has_value());
        CHECK(*back == l);
    }
    CHECK_FALSE(Label::parse("").has_value());
    CHECK_FALSE(Label::parse("0").has_value());
    CHECK(Label::parse("f")->is_base());
    CHECK(Label::parse("17")->is_index());
}

TEST_CASE("signature rejects duplicates and digit names") {
    Signature sig;
    sig.add("f", 2);
    CHECK_THROWS_AS(sig.add("f", 1), std::invalid_argument);
    CHECK_THROWS_AS(sig.add("1", 0), std::invalid_argument);
    CHECK_THROWS_AS(sig.add("g", -1), std::invalid_argument);
    CHECK(sig.arity("f") == 2);
    CHECK_THROWS_AS(sig.arity("missing"), std::invalid_argument);
}
