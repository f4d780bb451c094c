#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcoh/rootsys.hpp"

#include <map>
#include <set>

using namespace qcoh;

TEST_CASE("positive root counts across all families") {
    auto count = [](const std::string& label) {
        return (int)RootSystem::build(label).positive_roots.size();
    };
    CHECK(count("A1") == 1);
    CHECK(count("A2") == 3);
    CHECK(count("A5") == 15);
    CHECK(count("B2") == 4);
    CHECK(count("B3") == 9);
    CHECK(count("C3") == 9);
    CHECK(count("C4") == 16);
    CHECK(count("C6") == 36);
    CHECK(count("D4") == 12);
    CHECK(count("D5") == 20);
    CHECK(count("G2") == 6);
    CHECK(count("F4") == 24);
    CHECK(count("E6") == 36);
    CHECK(count("E7") == 63);
    CHECK(count("E8") == 120);
}

TEST_CASE("highest roots and heights") {
    auto c3 = RootSystem::build("C3");
    CHECK(c3.highest_root == RootCoords{2, 2, 1});
    CHECK(c3.height(c3.highest_root) == 5);
    CHECK(c3.highest_short_root == RootCoords{1, 2, 1});
    CHECK(c3.height(c3.highest_short_root) == 4);

    auto f4 = RootSystem::build("F4");
    CHECK(f4.highest_root == RootCoords{2, 3, 4, 2});
    CHECK(f4.height(f4.highest_root) == 11);
    CHECK(f4.highest_short_root == RootCoords{1, 2, 3, 2});
    CHECK(f4.height(f4.highest_short_root) == 8);

    auto g2 = RootSystem::build("G2");
    CHECK(g2.highest_root == RootCoords{3, 2});
    CHECK(g2.highest_short_root == RootCoords{2, 1});

    auto b3 = RootSystem::build("B3");
    CHECK(b3.highest_root == RootCoords{1, 2, 2});
    CHECK(b3.highest_short_root == RootCoords{1, 1, 1});

    auto a4 = RootSystem::build("A4");
    CHECK(a4.highest_root == RootCoords{1, 1, 1, 1});
    CHECK(a4.highest_short_root == a4.highest_root);

    auto e7 = RootSystem::build("E7");
    CHECK(e7.height(e7.highest_root) == 17);

    auto d4 = RootSystem::build("D4");
    CHECK(d4.height(d4.highest_root) == 5);
}

TEST_CASE("short root counts and lengths") {
    auto c3 = RootSystem::build("C3");
    CHECK((int)c3.all_roots().size() == 18);
    CHECK((int)c3.short_roots().size() == 12);
    CHECK(c3.is_short(RootCoords{1, 1, 1}));
    CHECK(!c3.is_short(RootCoords{2, 2, 1}));
    CHECK(!c3.is_short(RootCoords{0, 0, 1}));

    auto f4 = RootSystem::build("F4");
    CHECK((int)f4.short_roots().size() == 24);

    auto b3 = RootSystem::build("B3");
    CHECK((int)b3.short_roots().size() == 6);

    auto g2 = RootSystem::build("G2");
    CHECK((int)g2.short_roots().size() == 6);

    // Simply laced: every root counts as short.
    auto a2 = RootSystem::build("A2");
    CHECK((int)a2.short_roots().size() == 6);
    for (const auto& r : a2.all_roots()) CHECK(a2.is_short(r));

    auto c4 = RootSystem::build("C4");
    CHECK((int)c4.short_roots().size() == 24);
}

TEST_CASE("pairings and reflections") {
    auto g2 = RootSystem::build("G2");
    CHECK(g2.coroot_pairing(0, RootCoords{0, 1}) == -3);
    CHECK(g2.coroot_pairing(1, RootCoords{1, 0}) == -1);

    auto c3 = RootSystem::build("C3");
    // <Theta^vee, theta_short> = 1.
    CHECK(c3.root_pairing(c3.highest_root, c3.highest_short_root) == 1);
    CHECK(c3.root_pairing(c3.highest_root, c3.highest_root) == 2);
    // Reflections preserve root length and rootness.
    for (const auto& r : c3.all_roots())
        for (int i = 0; i < 3; ++i) {
            auto s = c3.simple_reflection(i, r);
            CHECK(c3.is_root(s));
            CHECK(c3.norm2(s) == c3.norm2(r));
        }

    auto a2 = RootSystem::build("A2");
    CHECK(a2.simple_reflection(0, RootCoords{0, 1}) == RootCoords{1, 1});
    CHECK(a2.simple_reflection(0, RootCoords{1, 0}) == RootCoords{-1, 0});

    CHECK(c3.is_root(RootCoords{1, 1, 0}));
    CHECK(c3.is_root(RootCoords{-1, -1, 0}));
    CHECK(!c3.is_root(RootCoords{1, 0, 1}));
    CHECK(!c3.is_root(RootCoords{0, 0, 0}));
}

TEST_CASE("symmetrized form is symmetric and positive on roots") {
    for (const std::string& label : {"A3", "B3", "C4", "D4", "F4", "G2", "E6"}) {
        auto rs = RootSystem::build(label);
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j)
                CHECK(rs.d[i] * rs.cartan[i][j] == rs.d[j] * rs.cartan[j][i]);
        for (const auto& r : rs.positive_roots) CHECK(rs.norm2(r) > 0);
    }
}

TEST_CASE("root labels") {
    CHECK(root_label(RootCoords{1, 2, 1}) == "a1+2*a2+a3");
    CHECK(root_label(RootCoords{-1, -2, -1}) == "-a1-2*a2-a3");
    CHECK(root_label(RootCoords{0, 1, 0}) == "a2");
    CHECK(root_label(RootCoords{0, -3}) == "-3*a2");
}

TEST_CASE("coadjoint class data for C3") {
    auto cd = CoadjointRootData::build(RootSystem::build("C3"));
    CHECK(cd.c1 == 5);
    CHECK(cd.dim_complex == 7);
    CHECK((int)cd.basis.size() == 12);
    CHECK(cd.basis[0] == cd.theta_short); // degree zero class is the unit

    std::map<int, int> census;
    for (const auto& r : cd.basis) census[cd.class_degree(r)]++;
    std::map<int, int> expect{{0, 1}, {2, 1}, {4, 2},  {6, 2},
                              {8, 2}, {10, 2}, {12, 1}, {14, 1}};
    CHECK(census == expect);

    // Degree-two class sits at e1 + e3.
    CHECK(cd.class_degree(RootCoords{1, 1, 1}) == 2);
    // Point class.
    CHECK(cd.class_degree(RootCoords{-1, -2, -1}) == 14);
}

TEST_CASE("coadjoint class data for C4 and F4") {
    auto c4 = CoadjointRootData::build(RootSystem::build("C4"));
    CHECK(c4.c1 == 7);
    CHECK(c4.dim_complex == 11);
    CHECK((int)c4.basis.size() == 24);
    std::map<int, int> census;
    for (const auto& r : c4.basis) census[c4.class_degree(r)]++;
    std::map<int, int> expect{{0, 1},  {2, 1},  {4, 2},  {6, 2},  {8, 3},  {10, 3},
                              {12, 3}, {14, 3}, {16, 2}, {18, 2}, {20, 1}, {22, 1}};
    CHECK(census == expect);

    auto f4 = CoadjointRootData::build(RootSystem::build("F4"));
    CHECK(f4.c1 == 11);
    CHECK(f4.dim_complex == 15);
    CHECK((int)f4.basis.size() == 24);
    std::map<int, int> fcensus;
    for (const auto& r : f4.basis) fcensus[f4.class_degree(r)]++;
    for (int k = 0; k <= 30; k += 2) {
        int expected = (k >= 8 && k <= 22) ? 2 : 1;
        CHECK(fcensus[k] == expected);
    }
}

TEST_CASE("degree-two product raises degree by two with positive coefficients") {
    for (const std::string& label : {"C3", "C4", "C5", "F4"}) {
        auto cd = CoadjointRootData::build(RootSystem::build(label));
        for (const auto& a : cd.basis) {
            int da = cd.class_degree(a);
            for (const auto& t : cd.chevalley_h(a)) {
                CHECK(t.coeff > 0);
                CHECK(t.qpower >= 0);
                int db = cd.class_degree(cd.basis[t.index]);
                CHECK(db + 2 * cd.c1 * t.qpower == da + 2);
                if (t.qpower > 0) CHECK(!cd.rs.is_positive(a));
            }
        }
    }
}

TEST_CASE("hand-checked degree-two products in C3") {
    auto cd = CoadjointRootData::build(RootSystem::build("C3"));

    // Unit: the highest short root class multiplies to the degree-two class.
    auto unit_terms = cd.chevalley_h(cd.theta_short);
    REQUIRE((int)unit_terms.size() == 1);
    CHECK(cd.basis[unit_terms[0].index] == RootCoords{1, 1, 1});
    CHECK(unit_terms[0].qpower == 0);
    CHECK(unit_terms[0].coeff == 1);

    // h * sigma_{a1+a2+a3}: two classical terms.
    auto sq = cd.chevalley_h(RootCoords{1, 1, 1});
    REQUIRE((int)sq.size() == 2);
    std::set<RootCoords> got{cd.basis[sq[0].index], cd.basis[sq[1].index]};
    std::set<RootCoords> want{RootCoords{0, 1, 1}, RootCoords{1, 1, 0}};
    CHECK(got == want);
    CHECK(sq[0].qpower == 0);
    CHECK(sq[1].qpower == 0);
    CHECK(sq[0].coeff == 1);
    CHECK(sq[1].coeff == 1);

    // h * sigma_{-(a1+a2+a3)}: point class plus one quantum term.
    auto mixed = cd.chevalley_h(RootCoords{-1, -1, -1});
    REQUIRE((int)mixed.size() == 2);
    bool saw_point = false, saw_quantum = false;
    for (const auto& t : mixed) {
        if (t.qpower == 0) {
            CHECK(cd.basis[t.index] == RootCoords{-1, -2, -1});
            CHECK(t.coeff == 1);
            saw_point = true;
        } else {
            CHECK(t.qpower == 1);
            CHECK(cd.basis[t.index] == RootCoords{1, 1, 0});
            CHECK(t.coeff == 1);
            saw_quantum = true;
        }
    }
    CHECK(saw_point);
    CHECK(saw_quantum);
}
