#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cga/multipoly.hpp"

#include <random>

using namespace cga;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, const VarFamily& fam, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, 2);
    std::uniform_int_distribution<long> coef(-3, 3);
    MultiPoly p(fam);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> e(fam.var_count());
        for (int i = 0; i < fam.var_count(); ++i)
            e[i] = expd(rng);
        p.add_term(std::move(e), Rat(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("rational scalar canonical form and parsing") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(-1, 2).str() == "-1/2");
    CHECK(Rat(7).str() == "7");
    CHECK(Rat::parse("6/8") == Rat(3, 4));
    CHECK(Rat::parse("-5") == Rat(-5));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat(1, 0));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
}

TEST_CASE("basic polynomial arithmetic") {
    VarFamily z2 = VarFamily::z(2);
    MultiPoly z0 = MultiPoly::variable(z2, 0);
    MultiPoly z1 = MultiPoly::variable(z2, 1);

    CHECK((z0 - z0).is_zero());
    CHECK((z0 + z1) * (z0 - z1) == z0 * z0 - z1 * z1);
    CHECK(z0.scaled(Rat(1, 2)).scaled(Rat(2, 3)) == z0.scaled(Rat(1, 3)));

    VarFamily z3 = VarFamily::z(3);
    CHECK_THROWS_AS(z0 + MultiPoly::variable(z3, 0), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(12345);
    VarFamily fam = VarFamily::z(3);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly a = random_poly(rng, fam, 4);
        MultiPoly b = random_poly(rng, fam, 4);
        MultiPoly c = random_poly(rng, fam, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("weighted graded components") {
    VarFamily z3 = VarFamily::z(3);
    MultiPoly z0 = MultiPoly::variable(z3, 0);
    MultiPoly z1 = MultiPoly::variable(z3, 1);
    MultiPoly z2 = MultiPoly::variable(z3, 2);

    auto g1 = (z0 * z0 + z1.scaled(Rat(2))).graded_components();
    REQUIRE(g1.size() == 1);
    CHECK(g1.count(2) == 1);
    CHECK(g1.at(2) == z0 * z0 + z1.scaled(Rat(2)));

    auto g2 = (z0 + z2).graded_components();
    REQUIRE(g2.size() == 2);
    CHECK(g2.at(1) == z0);
    CHECK(g2.at(3) == z2);

    CHECK(MultiPoly::zero(z3).graded_components().empty());

    // recombination is the identity
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly p = random_poly(rng, z3, 6);
        MultiPoly sum(z3);
        for (const auto& [g, comp] : p.graded_components()) {
            auto hg = comp.homogeneous_grade();
            REQUIRE(hg.has_value());
            CHECK(*hg == g);
            sum += comp;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("exact monomial division") {
    VarFamily z3 = VarFamily::z(3);
    MultiPoly z0 = MultiPoly::variable(z3, 0);
    MultiPoly z1 = MultiPoly::variable(z3, 1);
    MultiPoly z2 = MultiPoly::variable(z3, 2);

    CHECK((z0 * z0 * z1).exact_divide({1}) == z0 * z1);
    CHECK((z0 * z0 * z0 + z0 * z1).exact_divide({1}) == z0 * z0 + z1);
    CHECK_THROWS_AS((z1 * z1 - z0.scaled(Rat(2)) * z2).exact_divide({1}), std::domain_error);
}

TEST_CASE("linear substitution: coordinate changes") {
    // ell = 2: z_n = y_{ell-1-n}/(ell+1+n)!  ->  z0 = y1/6
    VarFamily z2 = VarFamily::z(2), y2 = VarFamily::y(2);
    MultiPoly z0 = MultiPoly::variable(z2, 0);
    std::map<int, std::pair<Rat, int>> fwd{{0, {Rat(1, 6), 2}}, {1, {Rat(1, 24), 1}}};
    MultiPoly img = z0.substitute_linear(y2, fwd);
    CHECK(img == MultiPoly::variable(y2, 2).scaled(Rat(1, 6)));

    // ell = 1: y_n = (2*ell - n)! z_{ell-1-n}  ->  y0 = 2 z0
    VarFamily y1 = VarFamily::y(1), z1 = VarFamily::z(1);
    MultiPoly y0 = MultiPoly::variable(y1, 1);
    MultiPoly back = y0.substitute_linear(z1, {{1, {Rat(2), 0}}});
    CHECK(back == MultiPoly::variable(z1, 0).scaled(Rat(2)));

    // constants pass through untouched
    MultiPoly c5 = MultiPoly::constant(z2, Rat(5));
    CHECK(c5.substitute_linear(y2, {}) == MultiPoly::constant(y2, Rat(5)));

    // unmapped variable
    CHECK_THROWS_AS(z0.substitute_linear(y2, {}), std::invalid_argument);
}

TEST_CASE("coordinate change round trip is the identity") {
    std::mt19937_64 rng(4242);
    for (int ell = 1; ell <= 6; ++ell) {
        VarFamily zf = VarFamily::z(ell), yf = VarFamily::y(ell);
        std::map<int, std::pair<Rat, int>> fwd, inv;
        for (int n = 0; n < ell; ++n)
            fwd[n] = {factorial(ell + 1 + n).inv(), 1 + (ell - 1 - n)};
        for (int n = 0; n < ell; ++n)
            inv[1 + n] = {factorial(2 * ell - n), ell - 1 - n};
        for (int trial = 0; trial < 5; ++trial) {
            MultiPoly p = random_poly(rng, zf, 5);
            CHECK(p.substitute_linear(yf, fwd).substitute_linear(zf, inv) == p);
        }
    }
}

TEST_CASE("evaluation") {
    VarFamily z2 = VarFamily::z(2);
    MultiPoly z0 = MultiPoly::variable(z2, 0);
    MultiPoly z1 = MultiPoly::variable(z2, 1);
    MultiPoly p = z0 * z0 + z1.scaled(Rat(2));
    CHECK(p.evaluate({{0, Rat(1)}, {1, Rat(1)}}) == Rat(3));
    CHECK(MultiPoly::zero(z2).evaluate({}) == Rat(0));
    CHECK((z0 * z1).evaluate({{0, Rat(2, 3)}, {1, Rat(3, 2)}}) == Rat(1));
    CHECK_THROWS_AS(p.evaluate({{0, Rat(1)}}), std::invalid_argument);
}

TEST_CASE("eisenstein arithmetic") {
    Eis w = Eis::omega();
    CHECK(w * w * w == Eis(Rat(1)));
    CHECK((Eis(Rat(1)) + w + w * w).is_zero());
    CHECK(w.conj() == w * w);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 30; ++t) {
        Eis x(Rat(d(rng), 3), Rat(d(rng), 2));
        Rat n = (x * x.conj()).rational_part();
        CHECK(n == x.a * x.a - x.a * x.b + x.b * x.b);
        CHECK(n == x.norm());
        CHECK(n.sign() >= 0);
        // conjugation on plain rationals is the identity
        Eis r(Rat(d(rng), 7));
        CHECK(r.conj() == r);
    }
}

TEST_CASE("eisenstein polynomial conversion guards") {
    VarFamily z1 = VarFamily::z(1);
    EisPoly p(z1);
    p.add_term({1}, Eis(Rat(2), Rat(0)));
    CHECK(to_rational(p) == MultiPoly::variable(z1, 0).scaled(Rat(2)));
    p.add_term({2}, Eis(Rat(0), Rat(1)));
    CHECK_THROWS_AS(to_rational(p), std::domain_error);
}

TEST_CASE("canonical term order is graded then lexicographic") {
    VarFamily z3 = VarFamily::z(3);
    MultiPoly p(z3);
    p.add_term({0, 0, 1}, Rat(1)); // grade 3
    p.add_term({2}, Rat(1));       // grade 2
    p.add_term({0, 1}, Rat(1));    // grade 2
    auto ct = p.canonical_terms();
    REQUIRE(ct.size() == 3);
    CHECK(ct[0].first == std::vector<int>{0, 1});
    CHECK(ct[1].first == std::vector<int>{2});
    CHECK(ct[2].first == std::vector<int>{0, 0, 1});
}
