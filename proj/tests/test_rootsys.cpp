#include <catch2/catch_amalgamated.hpp>

#include "symtriad/isomorphism.hpp"
#include "symtriad/root_system.hpp"
#include "symtriad/weyl.hpp"

using namespace symtriad;

namespace {
RatVec ev(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}
}  // namespace

TEST_CASE("built systems have the tabulated sizes and data") {
    struct Row {
        TypeLabel t;
        std::size_t size;
    };
    std::vector<Row> rows;
    for (int r = 1; r <= 6; ++r) rows.push_back({{Family::A, r}, std::size_t(r) * (r + 1)});
    for (int r = 1; r <= 6; ++r) rows.push_back({{Family::B, r}, std::size_t(2) * r * r});
    for (int r = 1; r <= 6; ++r) rows.push_back({{Family::C, r}, std::size_t(2) * r * r});
    for (int r = 2; r <= 6; ++r) rows.push_back({{Family::D, r}, std::size_t(2) * r * (r - 1)});
    for (int r = 1; r <= 5; ++r) rows.push_back({{Family::BC, r}, std::size_t(2) * r * (r + 1)});
    rows.push_back({{Family::E, 6}, 72});
    rows.push_back({{Family::E, 7}, 126});
    rows.push_back({{Family::E, 8}, 240});
    rows.push_back({{Family::F, 4}, 48});
    rows.push_back({{Family::G, 2}, 12});
    for (const auto& row : rows) {
        auto rs = build(row.t);
        INFO(row.t.str());
        CHECK(rs.roots.size() == row.size);
        CHECK(rs.rank() == row.t.rank);
        for (const auto& s : rs.simple) CHECK(rs.contains(s));
    }
}

TEST_CASE("B2 is the 8-root system of the notation") {
    auto b2 = build({Family::B, 2});
    REQUIRE(b2.roots.size() == 8);
    CHECK(b2.contains(ev({1, 0})));
    CHECK(b2.contains(ev({0, -1})));
    CHECK(b2.contains(ev({1, 1})));
    CHECK(b2.contains(ev({-1, 1})));
    CHECK(b2.simple == std::vector<RatVec>{ev({1, -1}), ev({0, 1})});
    CHECK(*b2.highest == ev({1, 1}));
}

TEST_CASE("D1 is empty") {
    auto d1 = build({Family::D, 1});
    CHECK(d1.roots.empty());
    CHECK(d1.simple.empty());
    CHECK_FALSE(d1.highest.has_value());
}

TEST_CASE("highest root expansions match the tabulated coefficient lists") {
    auto coeffs = [](TypeLabel t) {
        auto rs = build(t);
        REQUIRE(rs.highest);
        RatVec c = rs.simple_coords(*rs.highest);
        std::vector<long> out;
        for (const auto& x : c) out.push_back(to_long(x));
        return out;
    };
    CHECK(coeffs({Family::A, 4}) == std::vector<long>{1, 1, 1, 1});
    CHECK(coeffs({Family::B, 4}) == std::vector<long>{1, 2, 2, 2});
    CHECK(coeffs({Family::C, 4}) == std::vector<long>{2, 2, 2, 1});
    CHECK(coeffs({Family::D, 5}) == std::vector<long>{1, 2, 2, 1, 1});
    CHECK(coeffs({Family::BC, 4}) == std::vector<long>{2, 2, 2, 2});
    CHECK(coeffs({Family::E, 6}) == std::vector<long>{1, 2, 2, 3, 2, 1});
    CHECK(coeffs({Family::E, 7}) == std::vector<long>{2, 2, 3, 4, 3, 2, 1});
    CHECK(coeffs({Family::E, 8}) == std::vector<long>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(coeffs({Family::F, 4}) == std::vector<long>{2, 3, 4, 2});
    CHECK(coeffs({Family::G, 2}) == std::vector<long>{3, 2});
}

TEST_CASE("G2 highest root coordinates") {
    auto g2 = build({Family::G, 2});
    CHECK(*g2.highest == ev({-1, -1, 2}));
    CHECK(g2.roots.size() == 12);
}

TEST_CASE("reflect basics") {
    CHECK(reflect(ev({1, 0}), ev({1, 0})) == ev({-1, 0}));
    CHECK(reflect(ev({1, -1}), ev({0, 1})) == ev({1, 0}));
    // fixes the orthogonal complement
    CHECK(reflect(ev({1, 0}), ev({0, 5})) == ev({0, 5}));
    CHECK_THROWS(reflect(ev({0, 0}), ev({1, 0})));
}

TEST_CASE("reflect is involutive on sampled vectors") {
    auto f4 = build({Family::F, 4});
    for (const auto& a : f4.roots) {
        for (const auto& h : f4.simple) {
            CHECK(reflect(a, reflect(a, h)) == h);
        }
    }
}

TEST_CASE("built systems satisfy the root system axioms") {
    for (TypeLabel t : {TypeLabel{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4},
                        {Family::BC, 2}, {Family::F, 4}, {Family::G, 2}, {Family::E, 6}}) {
        auto rs = build(t);
        RootSet s(rs.roots.begin(), rs.roots.end());
        auto chk = is_root_system(s);
        INFO(t.str());
        CHECK(chk.ok());
        CHECK((chk.verdict == RootSystemCheck::Verdict::yes_nonreduced) ==
              (t.family == Family::BC));
    }
}

TEST_CASE("is_root_system diagnoses failures") {
    RootSet bad{ev({1, 0}), ev({-1, 0}), ev({0, 1})};
    auto chk = is_root_system(bad);
    CHECK_FALSE(chk.ok());
    CHECK(!chk.violation.empty());
}

TEST_CASE("identify recognizes built systems, normalized per the special isomorphisms") {
    auto expect = [](TypeLabel in, std::vector<TypeLabel> want) {
        auto rs = build(in);
        auto got = identify(rs.roots).labels;
        INFO(in.str());
        CHECK(got == want);
    };
    expect({Family::D, 3}, {{Family::A, 3}});
    expect({Family::D, 2}, {{Family::A, 1}, {Family::A, 1}});
    expect({Family::B, 1}, {{Family::A, 1}});
    expect({Family::C, 1}, {{Family::A, 1}});
    expect({Family::F, 4}, {{Family::F, 4}});
    expect({Family::G, 2}, {{Family::G, 2}});
    expect({Family::BC, 3}, {{Family::BC, 3}});
    expect({Family::E, 6}, {{Family::E, 6}});
    for (int r = 3; r <= 6; ++r) {
        expect({Family::B, r}, {{Family::B, r}});
        expect({Family::C, r}, {{Family::C, r}});
        expect({Family::A, r}, {{Family::A, r}});
    }
    for (int r = 4; r <= 6; ++r) expect({Family::D, r}, {{Family::D, r}});
}

TEST_CASE("identify on the long roots of F4 gives D4") {
    auto f4 = build({Family::F, 4});
    std::vector<RatVec> longs;
    for (const auto& a : f4.roots)
        if (norm2(a) == 2) longs.push_back(a);
    REQUIRE(longs.size() == 24);
    auto got = identify(longs).labels;
    CHECK(got == std::vector<TypeLabel>{{Family::D, 4}});
}

TEST_CASE("B2/C2 canonical choice records the alternative") {
    auto b2 = build({Family::B, 2});
    auto idb = identify(b2.roots);
    REQUIRE(idb.labels == std::vector<TypeLabel>{{Family::B, 2}});
    REQUIRE(idb.notes.size() == 1);
    CHECK(idb.notes[0].find("C2") != std::string::npos);
    auto c2 = build({Family::C, 2});
    auto idc = identify(c2.roots);
    CHECK(idc.labels == std::vector<TypeLabel>{{Family::C, 2}});
}

TEST_CASE("weyl group orders by closure enumeration") {
    CHECK(weyl_elements(build({Family::A, 2})).size() == 6);
    CHECK(weyl_elements(build({Family::B, 2})).size() == 8);
    CHECK(weyl_elements(build({Family::G, 2})).size() == 12);
    CHECK(weyl_elements(build({Family::A, 3})).size() == 24);
    CHECK(weyl_elements(build({Family::D, 4})).size() == 192);
    CHECK(weyl_elements(build({Family::F, 4})).size() == 1152);
    CHECK_THROWS(weyl_elements(build({Family::B, 5})));
}

TEST_CASE("weyl elements preserve the root set and Cartan integers") {
    auto b3 = build({Family::B, 3});
    auto els = weyl_elements(b3);
    CHECK(els.size() == 48);
    for (std::size_t k = 0; k < els.size(); k += 7) {
        const auto& w = els[k];
        for (const auto& a : b3.simple) CHECK(b3.contains(w.map(a)));
    }
}

TEST_CASE("diagram automorphism counts") {
    CHECK(diagram_automorphisms(build({Family::A, 3}).simple).size() == 2);
    CHECK(diagram_automorphisms(build({Family::D, 4}).simple).size() == 6);
    CHECK(diagram_automorphisms(build({Family::E, 6}).simple).size() == 2);
    CHECK(diagram_automorphisms(build({Family::B, 3}).simple).size() == 1);
    CHECK(diagram_automorphisms(build({Family::BC, 3}).simple).size() == 1);
}

TEST_CASE("find_isomorphism witnesses") {
    auto a2 = build({Family::A, 2});
    auto self = find_isomorphism(a2.roots, a2.roots);
    REQUIRE(self.has_value());
    CHECK(check_root_iso(self->map, a2.roots, a2.roots));

    auto d3 = build({Family::D, 3});
    auto a3 = build({Family::A, 3});
    auto w = find_isomorphism(d3.roots, a3.roots);
    REQUIRE(w.has_value());
    CHECK(check_root_iso(w->map, d3.roots, a3.roots));

    auto b2 = build({Family::B, 2});
    CHECK_FALSE(find_isomorphism(b2.roots, a2.roots).has_value());
}

TEST_CASE("root_iso special isomorphisms hold with explicit witnesses") {
    auto pairs = std::vector<std::pair<TypeLabel, TypeLabel>>{
        {{Family::D, 3}, {Family::A, 3}},
        {{Family::B, 1}, {Family::C, 1}},
        {{Family::B, 1}, {Family::A, 1}},
        {{Family::B, 2}, {Family::C, 2}},
    };
    for (auto [s, t] : pairs) {
        auto S = build(s), T = build(t);
        auto w = find_isomorphism(S.roots, T.roots);
        INFO(s.str() + " ~ " + t.str());
        REQUIRE(w.has_value());
        CHECK(check_root_iso(w->map, S.roots, T.roots));
    }
    // D2 ~ A1 u A1
    auto d2 = build({Family::D, 2});
    auto a1 = build({Family::A, 1});
    std::vector<RatVec> a1a1;
    for (const auto& r : a1.roots) {
        RatVec v{r[0], r[1], Rat(0), Rat(0)};
        a1a1.push_back(v);
        RatVec u{Rat(0), Rat(0), r[0], r[1]};
        a1a1.push_back(u);
    }
    std::vector<RatVec> d2r;
    for (const auto& r : d2.roots) d2r.push_back(RatVec{r[0], r[1], Rat(0), Rat(0)});
    auto w = find_isomorphism(d2r, a1a1);
    REQUIRE(w.has_value());
}

TEST_CASE("strict mode rejects scaled matches") {
    auto b1 = build({Family::B, 1});   // {+-e1}
    auto c1 = build({Family::C, 1});   // {+-2e1}
    CHECK(find_isomorphism(b1.roots, c1.roots, true).has_value());
    CHECK_FALSE(find_isomorphism(b1.roots, c1.roots, false).has_value());
}

TEST_CASE("recovered simple systems are bases") {
    for (TypeLabel t : {TypeLabel{Family::A, 3}, {Family::B, 3}, {Family::BC, 3}, {Family::D, 4}}) {
        auto rs = build(t);
        auto simple = recover_simple(rs.roots);
        REQUIRE(simple.size() == static_cast<std::size_t>(t.rank));
        // every root is a uniform-sign integer combination
        for (const auto& a : rs.roots) {
            auto c = solve_columns(simple, a);
            REQUIRE(c.has_value());
            bool nonneg = true, nonpos = true;
            for (const auto& x : *c) {
                CHECK(is_integer(x));
                if (x > 0) nonpos = false;
                if (x < 0) nonneg = false;
            }
            CHECK((nonneg || nonpos));
        }
    }
}
