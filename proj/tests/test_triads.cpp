#include <catch2/catch_amalgamated.hpp>

#include "symtriad/catalog.hpp"
#include "symtriad/triad.hpp"

using namespace symtriad;

namespace {
RatVec ev(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

RootSet shorts_of(const RootSystem& rs, const Rat& nn) {
    RootSet s;
    for (const auto& a : rs.roots)
        if (norm2(a) == nn) s.insert(a);
    return s;
}
}  // namespace

TEST_CASE("triad axioms: (I-B2) passes") {
    auto b2 = build({Family::B, 2});
    RootSet sigma(b2.roots.begin(), b2.roots.end());
    RootSet w = shorts_of(b2, Rat(1));
    auto rep = verify_triad_axioms(b2, sigma, w);
    INFO(rep.summary());
    CHECK(rep.pass());
}

TEST_CASE("triad axioms: empty W fails condition (3)") {
    auto b2 = build({Family::B, 2});
    RootSet sigma(b2.roots.begin(), b2.roots.end());
    auto rep = verify_triad_axioms(b2, sigma, {});
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.conditions[2].pass);
}

TEST_CASE("triad axioms: long-root W fails the length condition (4)") {
    auto b2 = build({Family::B, 2});
    RootSet sigma(b2.roots.begin(), b2.roots.end());
    RootSet w = shorts_of(b2, Rat(2));  // {+-e1+-e2}
    auto rep = verify_triad_axioms(b2, sigma, w);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.conditions[3].pass);
}

TEST_CASE("multiplicity axioms on (I-B2)") {
    auto t = standard({TagKind::I_B, 2, 0}, {Rat(2), Rat(1), Rat(3)});
    auto rep = verify_multiplicity_axioms(t);
    INFO(rep.summary());
    CHECK(rep.pass());
    CHECK(triad_valid(t));

    // breaking W(Sigma)-invariance of m: m(e1) != m(e2)
    auto bad = t;
    int i1 = bad.st.index_of(ev({1, 0})), i2 = bad.st.index_of(ev({0, 1}));
    bad.m[i1] = 1;
    bad.m[bad.st.index_of(ev({-1, 0}))] = 1;
    bad.m[i2] = 2;
    auto rep2 = verify_multiplicity_axioms(bad);
    CHECK_FALSE(rep2.pass());
    CHECK_FALSE(rep2.conditions[1].pass);
}

TEST_CASE("(III-A_r) with constant m=n passes") {
    auto t = standard({TagKind::III_A, 3, 0}, {Rat(5)});
    auto sv = t.sigma_roots();
    auto wv = t.w_roots();
    CHECK(verify_triad_axioms(t.st, RootSet(sv.begin(), sv.end()), RootSet(wv.begin(), wv.end()))
              .pass());
    CHECK(verify_multiplicity_axioms(t).pass());
}

TEST_CASE("gamma pairing on B2") {
    auto b2 = build({Family::B, 2});
    RatVec delta = *b2.highest;  // e1+e2 = a1 + 2 a2
    GammaElement y0{{0, 0}}, y1{{1, 0}}, y2{{0, 1}};
    CHECK(gamma_pairing(b2, y0, delta) == 0);
    CHECK(gamma_pairing(b2, y1, delta) == 1);
    CHECK(gamma_pairing(b2, y2, delta) == 2);
    for (const auto& a : b2.roots) CHECK(gamma_pairing(b2, y0, a) == 0);
}

TEST_CASE("twist by zero is the identity; twist is an involution") {
    auto t = standard({TagKind::I_B, 3, 0}, {Rat(2), Rat(1), Rat(3)});
    GammaElement zero{{0, 0, 0}};
    CHECK(twist(t, zero).same_data(t));
    for (const auto& y : twist_representatives(3)) {
        CHECK(twist(twist(t, y), y).same_data(t));
    }
}

TEST_CASE("shifting a Gamma coefficient by 2 does not change the twist") {
    auto t = standard({TagKind::I_BC_A, 2, 0}, {Rat(2), Rat(3), Rat(5), Rat(7)});
    GammaElement y{{1, 0}}, y_shift{{3, 2}};
    GammaElement y2{{1, 2}};
    CHECK(twist(t, y).same_data(twist(t, y_shift)));
    CHECK(twist(t, y).same_data(twist(t, y2)));
}

TEST_CASE("every twist of a catalog triad is again a valid triad") {
    std::vector<MultSymmetricTriad> ts = {
        standard({TagKind::I_B, 2, 0}, {Rat(2), Rat(1), Rat(3)}),
        standard({TagKind::I_C, 3, 0}, {Rat(1), Rat(2)}),
        standard({TagKind::I_BC_A, 2, 0}, {Rat(2), Rat(3), Rat(5), Rat(7)}),
        standard({TagKind::II_BC, 2, 0}, {Rat(1), Rat(2), Rat(4)}),
        standard({TagKind::III_BC, 2, 0}, {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)}),
        standard({TagKind::I_F4, 4, 0}, {Rat(1), Rat(2)}),
    };
    for (const auto& t : ts) {
        for (const auto& y : twist_representatives(t.st.rank())) {
            auto ty = twist(t, y);
            std::string why;
            INFO(detail::data_key(ty));
            CHECK(triad_valid(ty, &why));
        }
    }
}

TEST_CASE("twist of (I-C_r) by a suitable Y yields the (I'-C_r) shape") {
    auto t = standard({TagKind::I_C, 3, 0}, {Rat(1), Rat(2)});
    auto target = standard({TagKind::Ip_C, 3, 0}, {Rat(1), Rat(2)});
    bool found = false;
    for (const auto& y : twist_representatives(3)) {
        if (twist(t, y).same_data(target)) found = true;
    }
    CHECK(found);
}

TEST_CASE("standard rejects wrong parameter counts and degenerate tags") {
    CHECK_THROWS(standard({TagKind::I_B, 2, 0}, {Rat(1)}));
    CHECK_THROWS(standard({TagKind::I_C, 1, 0}, {Rat(1), Rat(1)}));
    CHECK_THROWS(standard({TagKind::Ip_B, 3, 3}, {Rat(1), Rat(1), Rat(1)}));
    CHECK_THROWS(standard({TagKind::I_B, 2, 0}, {Rat(1), Rat(0), Rat(1)}));
}

TEST_CASE("catalog instantiations all satisfy the axioms (generic and collided)") {
    struct Case {
        TriadTag tag;
        int nparams;
    };
    std::vector<TriadTag> tags;
    for (int r = 1; r <= 4; ++r) tags.push_back({TagKind::I_B, r, 0});
    for (int r = 2; r <= 4; ++r) tags.push_back({TagKind::I_C, r, 0});
    for (int r = 1; r <= 4; ++r) tags.push_back({TagKind::I_BC_A, r, 0});
    for (int r = 1; r <= 4; ++r) tags.push_back({TagKind::I_BC_B, r, 0});
    for (int r = 1; r <= 4; ++r) tags.push_back({TagKind::II_BC, r, 0});
    for (int r = 2; r <= 4; ++r)
        for (int s = 1; s < r; ++s) tags.push_back({TagKind::Ip_B, r, s});
    for (int r = 2; r <= 4; ++r) tags.push_back({TagKind::Ip_C, r, 0});
    for (int r = 2; r <= 4; ++r)
        for (int s = 1; s < r; ++s) tags.push_back({TagKind::Ip_BC_A, r, s});
    tags.push_back({TagKind::I_F4, 4, 0});
    tags.push_back({TagKind::Ip_F4, 4, 0});
    for (int r = 1; r <= 4; ++r) tags.push_back({TagKind::III_A, r, 0});
    for (int r = 1; r <= 4; ++r) tags.push_back({TagKind::III_B, r, 0});
    for (int r = 1; r <= 4; ++r) tags.push_back({TagKind::III_C, r, 0});
    for (int r = 1; r <= 4; ++r) tags.push_back({TagKind::III_BC, r, 0});
    for (int r = 3; r <= 4; ++r) tags.push_back({TagKind::III_D, r, 0});
    tags.push_back({TagKind::III_E, 6, 0});
    tags.push_back({TagKind::III_F4, 4, 0});
    tags.push_back({TagKind::III_G2, 2, 0});

    for (const auto& tag : tags) {
        int np = standard_param_count(tag);
        std::vector<Rat> generic;
        for (int i = 0; i < np; ++i) generic.push_back(Rat(2 * i + 3));  // 3,5,7,...
        std::vector<Rat> collided(np, Rat(2));
        for (const auto& params : {generic, collided}) {
            auto t = standard(tag, params);
            std::string why;
            bool ok = triad_valid(t, &why);
            INFO(tag.str() << " params=" << params.size() << "\n" << why);
            CHECK(ok);
        }
    }
}

TEST_CASE("degenerate rank-1 catalog entries keep their printed equalities") {
    // (III-B_1): m(+-e1) = n(+-e1)
    auto t = standard({TagKind::III_B, 1, 0}, {Rat(4)});
    CHECK(t.m == t.n);
    // (I-BC_1-B_1): m(short) = n(short)
    auto u = standard({TagKind::I_BC_B, 1, 0}, {Rat(4), Rat(2)});
    int i = u.st.index_of(ev({1}));
    CHECK(u.m[i] == u.n[i]);
}

TEST_CASE("tag printing and parsing round-trip") {
    for (TriadTag tag : {TriadTag{TagKind::I_B, 3, 0}, {TagKind::Ip_B, 3, 1},
                         {TagKind::I_BC_A, 2, 0}, {TagKind::Ip_BC_A, 4, 2},
                         {TagKind::III_E, 7, 0}, {TagKind::II_BC, 5, 0}}) {
        auto p = parse_triad_tag(tag.str());
        REQUIRE(p.has_value());
        CHECK(*p == tag);
    }
    CHECK(parse_triad_tag("(I-B_3)")->kind == TagKind::I_B);
    CHECK_FALSE(parse_triad_tag("nonsense").has_value());
}
