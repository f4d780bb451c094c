#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcoh/polynomial.hpp"

#include <algorithm>
#include <random>

using namespace qcoh;

namespace {

Poly P(std::vector<long> coeffs) {
    QVec c;
    for (long x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
}

Poly from_roots(std::vector<Rational> roots) {
    Poly p = Poly::one();
    for (const auto& r : roots) p = p * (Poly::X() - Poly::constant(r));
    return p;
}

Poly reassemble(const PolyFactors& f) {
    Poly p = Poly::constant(f.leading);
    for (const auto& [q, m] : f.factors)
        for (int i = 0; i < m; ++i) p = p * q;
    return p;
}

} // namespace

TEST_CASE("arithmetic and division") {
    Poly a = P({-1, 0, 0, 1}); // X^3 - 1
    Poly b = P({-1, 1});       // X - 1
    auto [q, r] = poly_divmod(a, b);
    CHECK(q == P({1, 1, 1}));
    CHECK(r.is_zero());
    CHECK(poly_divides(b, a));
    CHECK(!poly_divides(P({1, 1}), a));

    auto [q2, r2] = poly_divmod(P({1, 0, 1}), P({0, 1, 2}));
    CHECK(q2 == Poly::constant(Rational(1, 2)));
    CHECK(r2 == P({1}) - Poly::X() * Rational(1, 2));

    CHECK(P({1, 2}) * P({3, 4}) == P({3, 10, 8}));
    CHECK((P({1, 1}) - P({1, 1})).is_zero());
    CHECK(P({2, 4}).monic() == Poly::X() + Poly::constant(Rational(1, 2)));
    CHECK(P({5}).eval(Rational(100)) == 5);
    CHECK(P({-6, 1, 1}).eval(Rational(2)) == 0);
}

TEST_CASE("gcd lcm and extended gcd") {
    Poly a = P({-1, 0, 1});  // (X-1)(X+1)
    Poly b = P({1, -2, 1});  // (X-1)^2
    CHECK(poly_gcd(a, b) == P({-1, 1}));
    CHECK(poly_lcm(a, b) == (P({-1, 1}) * P({-1, 1}) * P({1, 1})).monic());
    CHECK(poly_gcd(Poly::zero(), b) == b.monic());

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        QVec ca(1 + rng() % 5), cb(1 + rng() % 5);
        for (auto& x : ca) x = coef(rng);
        for (auto& x : cb) x = coef(rng);
        Poly pa{ca}, pb{cb};
        if (pa.is_zero() && pb.is_zero()) continue;
        auto x = poly_extended_gcd(pa, pb);
        CHECK(x.g == poly_gcd(pa, pb));
        CHECK(x.u * pa + x.v * pb == x.g);
    }
}

TEST_CASE("squarefree decomposition") {
    // X * (X-1)^2 * (X+2)^3
    Poly p = Poly::X() * from_roots({1, 1}) * from_roots({-2, -2, -2});
    auto dec = squarefree_decomposition(p);
    REQUIRE((int)dec.size() == 3);
    CHECK(dec[0].first == Poly::X());
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == P({-1, 1}));
    CHECK(dec[1].second == 2);
    CHECK(dec[2].first == P({2, 1}));
    CHECK(dec[2].second == 3);

    CHECK(squarefree_part(p) == (Poly::X() * P({-1, 1}) * P({2, 1})).monic());
    CHECK(squarefree_part(P({4, 0, 1})) == P({4, 0, 1}));
}

TEST_CASE("sturm real root counting") {
    CHECK(count_real_roots(P({1, 0, 1})) == 0);   // X^2 + 1
    CHECK(count_real_roots(P({-2, 0, 1})) == 2);  // X^2 - 2
    CHECK(count_real_roots(P({-2, 0, 1}) * P({3, 0, 1})) == 2);
    CHECK(count_real_roots(from_roots({1, 2, 3, 4, 5, 6, 7, 8})) == 8);
    CHECK(count_real_roots(from_roots({1, 1, 2})) == 2); // distinct roots only
    CHECK(count_real_roots(P({0, 1})) == 1);
    CHECK(count_real_roots(P({7})) == 0);

    CHECK(all_roots_real(from_roots({1, 1, 2})));
    CHECK(all_roots_real(P({-2, 0, 1})));
    CHECK(!all_roots_real(P({1, 0, 1})));
    CHECK(!all_roots_real(P({1, 0, 1}) * from_roots({1, 1})));
    CHECK(all_roots_real(P({5})));
}

TEST_CASE("minimal polynomial of matrices") {
    Mat d = Mat::identity(3);
    d.a[2][2] = 2;
    CHECK(minimal_polynomial(d) == from_roots({1, 2}));

    Mat j(2, 2);
    j.a[0][0] = 3;
    j.a[0][1] = 1;
    j.a[1][1] = 3;
    CHECK(minimal_polynomial(j) == from_roots({3, 3}));

    // Companion matrix of X^3 - X - 1.
    Mat c(3, 3);
    c.a[1][0] = 1;
    c.a[2][1] = 1;
    c.a[0][2] = 1;
    c.a[1][2] = 1;
    Poly target = P({-1, -1, 0, 1});
    CHECK(minimal_polynomial(c) == target);
    CHECK(poly_of_matrix(target, c).is_zero());

    CHECK(minimal_polynomial(Mat(0, 0)) == Poly::one());
    CHECK(poly_of_matrix(P({1, 1}), Mat::identity(2)).a[0][0] == 2);
}

TEST_CASE("compose with x powers") {
    CHECK(poly_compose_xpow(P({2, 0, 1}), 3) == P({2, 0, 0, 0, 0, 0, 1}));
    CHECK(poly_compose_xpow(P({5}), 4) == P({5}));
    CHECK(poly_compose_xpow(Poly::zero(), 2).is_zero());
}

TEST_CASE("factorization small cases") {
    auto f = factor_rational(P({-1, 0, 1}));
    CHECK(f.leading == 1);
    REQUIRE((int)f.factors.size() == 2);
    CHECK(f.factors[0].first == P({-1, 1}));
    CHECK(f.factors[1].first == P({1, 1}));

    // 6X^2 - 5X + 1 = 6 (X - 1/2)(X - 1/3)
    auto g = factor_rational(P({1, -5, 6}));
    CHECK(g.leading == 6);
    REQUIRE((int)g.factors.size() == 2);
    CHECK(g.factors[0].first == Poly::X() - Poly::constant(Rational(1, 2)));
    CHECK(g.factors[1].first == Poly::X() - Poly::constant(Rational(1, 3)));
    CHECK(reassemble(g) == P({1, -5, 6}));

    auto lin = factor_rational(P({3, 7}));
    CHECK(lin.leading == 7);
    REQUIRE((int)lin.factors.size() == 1);

    auto cst = factor_rational(P({9}));
    CHECK(cst.leading == 9);
    CHECK(cst.factors.empty());
}

TEST_CASE("factorization irreducibles stay whole") {
    // X^4 + 1 is irreducible over Q but splits mod every prime, which forces
    // the recombination path.
    auto f = factor_rational(P({1, 0, 0, 0, 1}));
    REQUIRE((int)f.factors.size() == 1);
    CHECK(f.factors[0].first == P({1, 0, 0, 0, 1}));
    CHECK(f.factors[0].second == 1);

    // Eisenstein at 2.
    auto g = factor_rational(P({-2, 0, 0, 1}));
    REQUIRE((int)g.factors.size() == 1);

    auto h = factor_rational(P({1, 1, 1}));
    REQUIRE((int)h.factors.size() == 1);
}

TEST_CASE("factorization composite cases") {
    // X^4 + 4 = (X^2 - 2X + 2)(X^2 + 2X + 2)
    auto f = factor_rational(P({4, 0, 0, 0, 1}));
    REQUIRE((int)f.factors.size() == 2);
    CHECK(f.factors[0].first == P({2, -2, 1}));
    CHECK(f.factors[1].first == P({2, 2, 1}));

    // (X^2 - 2)^2 (X^3 + X + 1)
    Poly p = P({-2, 0, 1}) * P({-2, 0, 1}) * P({1, 1, 0, 1});
    auto g = factor_rational(p);
    REQUIRE((int)g.factors.size() == 2);
    CHECK(g.factors[0].first == P({-2, 0, 1}));
    CHECK(g.factors[0].second == 2);
    CHECK(g.factors[1].first == P({1, 1, 0, 1}));
    CHECK(g.factors[1].second == 1);
    CHECK(reassemble(g) == p);

    // X^10 - 1 splits into four cyclotomic pieces.
    QVec c10(11, Rational(0));
    c10[0] = -1;
    c10[10] = 1;
    auto h = factor_rational(Poly(c10));
    CHECK((int)h.factors.size() == 4);
    CHECK(reassemble(h) == Poly(c10));

    // X^24 - 1 has one irreducible factor per divisor of 24.
    QVec c24(25, Rational(0));
    c24[0] = -1;
    c24[24] = 1;
    auto k = factor_rational(Poly(c24));
    CHECK((int)k.factors.size() == 8);
    CHECK(reassemble(k) == Poly(c24));
}

TEST_CASE("factorization of random products of known irreducibles") {
    std::vector<Poly> irreducibles = {
        P({-1, 1}), P({5, 1}), P({-2, 0, 1}), P({-3, 0, 1}),
        P({-6, 0, 1}), P({1, 1, 1}), P({-2, 0, 0, 1}), P({1, 0, 0, 0, 1}),
    };
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::pair<Poly, int>> chosen;
        Poly prod = Poly::constant(Rational((long)(1 + rng() % 5)));
        for (size_t i = 0; i < irreducibles.size(); ++i) {
            int mult = (int)(rng() % 3);
            if ((rng() % 2) == 0) mult = 0;
            if (mult == 0) continue;
            chosen.emplace_back(irreducibles[i], mult);
            for (int k = 0; k < mult; ++k) prod = prod * irreducibles[i];
        }
        if (chosen.empty()) continue;
        auto f = factor_rational(prod);
        CHECK(reassemble(f) == prod);
        REQUIRE(f.factors.size() == chosen.size());
        std::sort(chosen.begin(), chosen.end(), [](const auto& a, const auto& b) {
            if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
            for (int i = a.first.degree(); i >= 0; --i)
                if (a.first.c[i] != b.first.c[i]) return a.first.c[i] < b.first.c[i];
            return false;
        });
        for (size_t i = 0; i < chosen.size(); ++i) {
            CHECK(f.factors[i].first == chosen[i].first);
            CHECK(f.factors[i].second == chosen[i].second);
        }
    }
}

TEST_CASE("poly printing") {
    CHECK(poly_to_string(Poly::zero()) == "0");
    CHECK(poly_to_string(P({-4, 0, 0, 1})) == "X^3 - 4");
    CHECK(poly_to_string(P({1, -5, 6}), "t") == "6*t^2 - 5*t + 1");
    Poly half = Poly::X() - Poly::constant(Rational(1, 2));
    CHECK(poly_to_string(half) == "X - 1/2");
}
