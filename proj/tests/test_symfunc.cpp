#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cga/symfunc.hpp"

#include <random>

using namespace cga;

namespace {

// Evaluate a Gen-family polynomial at polynomial values (variable i ->
// values[i]); used to expand identities in explicit variables.
MultiPoly poly_substitute(const MultiPoly& p, const std::vector<MultiPoly>& values,
                          const VarFamily& target) {
    MultiPoly out(target);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            for (int rep = 0; rep < e[i]; ++rep)
                term = term * values.at(i);
        out += term;
    }
    return out;
}

std::vector<Rat> random_point(std::mt19937_64& rng, int r) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rat> x;
    for (int i = 0; i < r; ++i)
        x.push_back(Rat(num(rng), den(rng)));
    return x;
}

Rat power_sum(const std::vector<Rat>& x, int k) {
    Rat s(0);
    for (const Rat& v : x)
        s += v.pow(k);
    return s;
}

// Closed multinomial form of p_k as a polynomial in e_1..e_r, with each e_i
// expanded into power sums; an independent route to reduce_p.
PExpr reduce_p_closed(int k, int r) {
    PExpr out;
    for (const Partition& lam : partitions_of(k, r)) {
        Rat coeff = Rat(lam.eps()) * Rat(k) * factorial(lam.length() - 1);
        PExpr term = PExpr::one();
        for (auto [part, mult] : lam.multiplicities()) {
            coeff /= factorial(mult);
            term = term * e_in_p(part).pow(mult);
        }
        out += term.scaled(coeff);
    }
    return out;
}

} // namespace

TEST_CASE("explicit basis expansions") {
    VarFamily x2 = VarFamily::gen(2, "x", 1);
    MultiPoly x1 = MultiPoly::variable(x2, 0);
    MultiPoly x2v = MultiPoly::variable(x2, 1);

    CHECK(expand_e(2, 2) == x1 * x2v);
    CHECK(expand_e(0, 2) == MultiPoly::constant(x2, Rat(1)));
    CHECK(expand_e(3, 2).is_zero());
    CHECK(expand_p(3, 2) == x1.pow(3) + x2v.pow(3));
    CHECK(expand_h(2, 2) == x1 * x1 + x1 * x2v + x2v * x2v);
    CHECK(expand_h(0, 2) == MultiPoly::constant(x2, Rat(1)));
    CHECK(expand_m(Partition({2, 1}), 2) == x1 * x1 * x2v + x1 * x2v * x2v);
    CHECK_THROWS(expand_m(Partition({1, 1, 1}), 2));
}

TEST_CASE("e_in_p") {
    CHECK(e_in_p(1) == PExpr::p(1));

    PExpr e2 = (PExpr::p(1) * PExpr::p(1) - PExpr::p(2)).scaled(Rat(1, 2));
    CHECK(e_in_p(2) == e2);

    PExpr e3 = (PExpr::p(1).pow(3) - (PExpr::p(1) * PExpr::p(2)).scaled(Rat(3)) +
                PExpr::p(3).scaled(Rat(2)))
                   .scaled(Rat(1, 6));
    CHECK(e_in_p(3) == e3);

    // cross-check by expanding both sides in 3 explicit variables
    VarFamily x3 = VarFamily::gen(3, "x", 1);
    std::vector<PExpr> gens;
    MultiPoly lhs = expand_e(3, 3);
    MultiPoly rhs(x3);
    PExpr e3p = e_in_p(3);
    for (const auto& [lam, c] : e3p.terms()) {
        MultiPoly t = MultiPoly::constant(x3, c);
        for (int part : lam.parts())
            t = t * expand_p(part, 3);
        rhs += t;
    }
    CHECK(lhs == rhs);
}

TEST_CASE("u_poly and the Newton relation p_n = u_n(e_1..e_n)") {
    VarFamily y1 = VarFamily::gen(1, "y", 1);
    CHECK(u_poly(1) == MultiPoly::variable(y1, 0));

    VarFamily y2 = VarFamily::gen(2, "y", 1);
    MultiPoly v1 = MultiPoly::variable(y2, 0), v2 = MultiPoly::variable(y2, 1);
    CHECK(u_poly(2) == v1 * v1 - v2.scaled(Rat(2)));

    VarFamily y3 = VarFamily::gen(3, "y", 1);
    MultiPoly w1 = MultiPoly::variable(y3, 0), w2 = MultiPoly::variable(y3, 1),
              w3 = MultiPoly::variable(y3, 2);
    CHECK(u_poly(3) == w1.pow(3) - (w1 * w2).scaled(Rat(3)) + w3.scaled(Rat(3)));

    for (int n = 1; n <= 8; ++n) {
        std::vector<MultiPoly> es;
        for (int i = 1; i <= n; ++i)
            es.push_back(expand_e(i, n));
        CHECK(poly_substitute(u_poly(n), es, VarFamily::gen(n, "x", 1)) == expand_p(n, n));
    }
}

TEST_CASE("newton round trip through power sums") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<PExpr> es;
        for (int i = 1; i <= n; ++i)
            es.push_back(e_in_p(i));
        CHECK(pexpr_substitute(u_poly(n), es) == PExpr::p(n));
    }
}

TEST_CASE("reduce_p") {
    CHECK(reduce_p(2, 5) == PExpr::p(2));

    PExpr expect32 = (PExpr::p(1) * PExpr::p(2)).scaled(Rat(3, 2)) -
                     PExpr::p(1).pow(3).scaled(Rat(1, 2));
    CHECK(reduce_p(3, 2) == expect32);
    CHECK(expect32.evaluate({Rat(1), Rat(1)}) == Rat(2));

    std::mt19937_64 rng(2024);
    for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 10; ++k) {
            PExpr red = reduce_p(k, r);
            for (int t = 0; t < 20; ++t) {
                auto x = random_point(rng, r);
                CHECK(red.evaluate(x) == power_sum(x, k));
            }
        }

    // closed multinomial route agrees
    for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 8; ++k)
            CHECK(reduce_p(k, r) == reduce_p_closed(k, r));
}

TEST_CASE("reduce_p_mod_p1 reproduces the printed few-variable identities") {
    for (int k = 1; k <= 8; ++k)
        CHECK(reduce_p_mod_p1(k, 1).is_zero());

    for (int k = 1; k <= 8; ++k) {
        PExpr got = reduce_p_mod_p1(k, 2);
        if (k % 2 == 1) {
            CHECK(got.is_zero());
        } else {
            PExpr expect = PExpr::p(2).pow(k / 2).scaled(Rat(2).pow(1 - k / 2));
            CHECK(got == expect);
        }
    }
    CHECK(reduce_p_mod_p1(4, 2) == PExpr::p(2).pow(2).scaled(Rat(1, 2)));

    for (int k = 1; k <= 8; ++k) {
        PExpr expect;
        for (int r3 = 0; 3 * r3 <= k; ++r3) {
            if ((k - 3 * r3) % 2 != 0)
                continue;
            int r2 = (k - 3 * r3) / 2;
            if (r2 == 0 && r3 == 0)
                continue;
            Rat coeff = Rat(k) / Rat(r2 + r3) * binomial(r2 + r3, r2) /
                        (Rat(2).pow(r2) * Rat(3).pow(r3));
            expect += (PExpr::p(2).pow(r2) * PExpr::p(3).pow(r3)).scaled(coeff);
        }
        CHECK(reduce_p_mod_p1(k, 3) == expect);
    }
    CHECK(reduce_p_mod_p1(5, 3) == (PExpr::p(2) * PExpr::p(3)).scaled(Rat(5, 6)));
}

TEST_CASE("a_coeffs") {
    // all parts <= r: identity
    auto a22 = a_coeffs(2, 2);
    Partition two({2}), oneone({1, 1});
    CHECK(a22.at({two, two}) == Rat(1));
    CHECK(a22.at({oneone, oneone}) == Rat(1));
    CHECK(a22.count({two, oneone}) == 0);
    CHECK(a22.count({oneone, two}) == 0);

    auto a32 = a_coeffs(3, 2);
    Partition three({3}), twoone({2, 1}), t111({1, 1, 1});
    CHECK(a32.at({three, twoone}) == Rat(3, 2));
    CHECK(a32.at({three, t111}) == Rat(-1, 2));

    // row consistency at random rational points
    std::mt19937_64 rng(555);
    for (int r = 1; r <= 4; ++r)
        for (int n = 0; n <= 6; ++n) {
            auto ac = a_coeffs(n, r);
            for (const Partition& lam : partitions_of(n)) {
                for (int t = 0; t < 5; ++t) {
                    auto x = random_point(rng, r);
                    Rat lhs(1);
                    for (int part : lam.parts())
                        lhs *= power_sum(x, part);
                    Rat rhs(0);
                    for (const Partition& mu : partitions_of(n, r)) {
                        auto it = ac.find({lam, mu});
                        if (it == ac.end())
                            continue;
                        Rat pm(1);
                        for (int part : mu.parts())
                            pm *= power_sum(x, part);
                        rhs += it->second * pm;
                    }
                    CHECK(lhs == rhs);
                }
            }
        }
}

TEST_CASE("dual Cauchy kernel") {
    CHECK(cauchy_check(1, 1, 2));
    CHECK(cauchy_check(2, 2, 4));
    CHECK(cauchy_check(3, 2, 5));
    for (int nx = 1; nx <= 3; ++nx)
        for (int ny = 1; ny <= 3; ++ny)
            for (int d = 1; d <= 6; ++d)
                CHECK(cauchy_check(nx, ny, d));
}

TEST_CASE("power sum system companion polynomial") {
    CHECK(power_sum_system_poly({Rat(0)}) == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(power_sum_system_poly({Rat(0), Rat(2)}) ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});
    CHECK(power_sum_system_poly({Rat(3), Rat(5)}) ==
          std::vector<Rat>{Rat(1), Rat(-3), Rat(2)});

    // Newton forward: the e_i encoded in the coefficients reproduce the
    // prescribed power sums, with no root extraction.
    std::mt19937_64 rng(31337);
    for (int r = 1; r <= 5; ++r)
        for (int t = 0; t < 10; ++t) {
            auto a = random_point(rng, r);
            auto coeffs = power_sum_system_poly(a);
            std::vector<Rat> e(r + 1);
            for (int i = 0; i <= r; ++i)
                e[i] = (i % 2 == 0) ? coeffs[i] : -coeffs[i];
            for (int k = 1; k <= r; ++k) {
                Rat pk(0); // p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
                std::vector<Rat> p(k + 1);
                for (int m = 1; m <= k; ++m) {
                    Rat s(0);
                    for (int i = 1; i < m; ++i)
                        s += (i % 2 == 1 ? e[i] * p[m - i] : -(e[i] * p[m - i]));
                    s += (m % 2 == 1 ? Rat(m) * e[m] : -(Rat(m) * e[m]));
                    p[m] = s;
                }
                pk = p[k];
                CHECK(pk == a[k - 1]);
            }
        }
}
