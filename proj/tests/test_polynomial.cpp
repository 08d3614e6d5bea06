#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotfan/rational_function.hpp"

#include <random>

using namespace quotfan;

namespace {

Polynomial var(size_t n, size_t i) { return Polynomial::variable(n, i); }
Polynomial c(size_t n, long long v) { return Polynomial::constant(n, Rat(v)); }

} // namespace

TEST_CASE("polynomial arithmetic") {
    auto x = var(2, 0), y = var(2, 1);
    auto p = (x + y) * (x - y);
    auto q = x * x - y * y;
    CHECK(p == q);
    CHECK((p - q).is_zero());
    CHECK(p.total_degree() == 2);
    CHECK(p.eval({Rat(3), Rat(2)}) == Rat(5));

    auto cube = (x + c(2, 1)).pow(3);
    CHECK(cube.eval({Rat(1), Rat(0)}) == Rat(8));
    CHECK(cube.term_count() == 4);
}

TEST_CASE("grlex leading terms") {
    auto x = var(2, 0), y = var(2, 1);
    auto p = x * y + x * x * x + y;
    auto lead = p.leading();
    CHECK(lead.first == ExpVec{3, 0});
    CHECK(lead.second == 1);
    auto q = x * y + y * y + x * x;
    CHECK(q.leading().first == ExpVec{2, 0});
}

TEST_CASE("content and primitive part") {
    auto x = var(1, 0);
    auto p = x.scaled(Rat(4, 3)) + c(1, 2);
    Rat ct = p.content_rat();
    auto pp = p.primitive_part();
    CHECK(pp == x.scaled(Rat(2)) + c(1, 3));
    CHECK(pp.scaled(ct) == p);
    auto m = -x + c(1, 1);
    CHECK(m.primitive_part() == x - c(1, 1));
}

TEST_CASE("exact division") {
    auto x = var(2, 0), y = var(2, 1);
    auto a = (x + y) * (x * x + y);
    auto q = poly_divide_exact(a, x + y);
    REQUIRE(q.has_value());
    CHECK(*q == x * x + y);
    CHECK_FALSE(poly_divide_exact(a + c(2, 1), x + y).has_value());
}

TEST_CASE("multivariate gcd") {
    auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
    auto g = x * y - z * z;
    auto a = g * (x + z);
    auto b = g * (y - z);
    CHECK(poly_gcd(a, b) == g);
    CHECK(poly_gcd(a, b + c(3, 1)).is_constant());
    CHECK(poly_gcd(Polynomial(3), a) == a.primitive_part());
    CHECK(poly_gcd(a.scaled(Rat(6)), b.scaled(Rat(-15, 7))) == g);
}

TEST_CASE("gcd on random products") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<int> cf(-4, 4);
    auto rand_poly = [&](size_t nv, int terms) {
        Polynomial p(nv);
        std::uniform_int_distribution<int> ed(0, 2);
        for (int t = 0; t < terms; ++t) {
            ExpVec e(nv);
            for (auto& k : e) k = ed(rng);
            p.add_term(e, Rat(cf(rng)));
        }
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial g = rand_poly(3, 3);
        Polynomial a = rand_poly(3, 3), b = rand_poly(3, 3);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        Polynomial d = poly_gcd(a * g, b * g);
        CHECK(poly_divide_exact(d, poly_gcd(g, d)).has_value());
        CHECK(poly_divide_exact(a * g, d).has_value());
        CHECK(poly_divide_exact(b * g, d).has_value());
    }
}

TEST_CASE("rational function normal form") {
    auto x = var(2, 0), y = var(2, 1);
    RationalFunction f(x * x - y * y, x + y);
    CHECK(f == RationalFunction(x - y));

    RationalFunction g(x, y.scaled(Rat(-2)));
    CHECK(g.den() == y);
    CHECK(g.num() == x.scaled(Rat(-1, 2)));

    RationalFunction h = f / f;
    CHECK(h == RationalFunction::constant(2, 1));
    CHECK((f - f).is_zero());
}

TEST_CASE("rational function arithmetic and evaluation") {
    size_t nv = 1;
    auto x = RationalFunction::variable(nv, 0);
    auto f = (x + RationalFunction::constant(nv, 1)).inverse();
    auto g = f + f;
    auto v = g.eval({Rat(1)});
    REQUIRE(v.has_value());
    CHECK(*v == Rat(1));
    CHECK_FALSE(g.eval({Rat(-1)}).has_value());

    auto id = x.pow(3) / x.pow(2);
    CHECK(id == x);
}

TEST_CASE("rational function substitution") {
    size_t nv = 2;
    auto x = RationalFunction::variable(nv, 0);
    auto y = RationalFunction::variable(nv, 1);
    auto f = x / y;
    auto u = RationalFunction::variable(1, 0);
    auto sub = f.substitute({u.inverse(), u});
    CHECK(sub == u.pow(2).inverse());
}

TEST_CASE("normal form equality matches evaluation") {
    std::mt19937_64 rng(20240202);
    auto x = var(2, 0), y = var(2, 1);
    RationalFunction f((x + y).pow(2) - x * x - y * y, x * y.scaled(Rat(2)));
    CHECK(f == RationalFunction::constant(2, 1));
    int evals = 0;
    std::uniform_int_distribution<long> pd(-50, 50);
    while (evals < 20) {
        RatVec p = {Rat(pd(rng)), Rat(pd(rng))};
        auto v = f.eval(p);
        if (!v) continue;
        CHECK(*v == Rat(1));
        ++evals;
    }
}
