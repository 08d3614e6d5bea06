#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotfan/mutations.hpp"
#include "quotfan/quadric_maps.hpp"
#include "quotfan/linalg.hpp"

#include <algorithm>

using namespace quotfan;

TEST_CASE("identity and composition") {
    auto id = MultiProjectiveMap::identity({2});
    CHECK(maps_equal(compose(id, id), id));
    auto r2 = mutation_map(4, 1, 2);
    CHECK(maps_equal(compose(id, r2), r2));
    CHECK(maps_equal(compose(r2, id), r2));
}

TEST_CASE("lines mutation table") {
    // n=4, i=2: [-z2 : -z2+z3 : -z2+z4].
    auto r2 = mutation_map(4, 1, 2);
    size_t nv = 3;
    auto z = [&](size_t i) { return Polynomial::variable(nv, i); };
    std::vector<Polynomial> expect = {-z(0), z(1) - z(0), z(2) - z(0)};
    MultiProjectiveMap expected({2}, {2}, {expect});
    CHECK(maps_equal(r2, expected));

    // i >= 3 swaps adjacent coordinates.
    auto r3 = mutation_map(4, 1, 3);
    MultiProjectiveMap swap12({2}, {2}, {{z(1), z(0), z(2)}});
    CHECK(maps_equal(r3, swap12));

    // r1 is the standard Cremona inversion, cleared.
    auto r1 = mutation_map(4, 1, 1);
    MultiProjectiveMap cremona({2}, {2}, {{z(1) * z(2), z(0) * z(2), z(0) * z(1)}});
    CHECK(maps_equal(r1, cremona));
}

TEST_CASE("squares of the lines generators are the identity") {
    for (size_t n : {3, 4, 5}) {
        auto id = MultiProjectiveMap::identity(std::vector<size_t>(1, n - 2));
        for (size_t i = 1; i <= n; ++i) {
            auto r = mutation_map(n, 1, i);
            CHECK(maps_equal(compose(r, r), id));
        }
    }
}

TEST_CASE("degenerate inversion on the projective line") {
    // i=k with n-k=2: the inversion on P^1 is coordinate swap, no base locus.
    auto r = mutation_map(3, 1, 1);
    size_t nv = 2;
    auto z = [&](size_t i) { return Polynomial::variable(nv, i); };
    MultiProjectiveMap swap01({1}, {1}, {{z(1), z(0)}});
    CHECK(maps_equal(r, swap01));
    CHECK(base_locus_components(r) == 0);
}

TEST_CASE("base locus counting") {
    // Lines Cremona on P^2 (n=4): three coordinate-pair loci.
    CHECK(base_locus_components(mutation_map(4, 1, 1)) == 3);
    // Mutation r_k for (n,k)=(5,2): C(3,2) = 3.
    CHECK(base_locus_components(mutation_map(5, 2, 2)) == 3);
    // Coordinate permutations are isomorphisms.
    CHECK(base_locus_components(mutation_map(5, 2, 4)) == 0);
    CHECK(base_locus_components(mutation_map(5, 2, 3)) == 0);
    CHECK(base_locus_components(mutation_map(4, 2, 1)) == 0);
}

TEST_CASE("apply point and marked point exchanges") {
    size_t n = 4;
    auto pts = lines_marked_points(n); // p1..p4 in P^2
    // r2 sends p1 = [1:1:1] to [-1:0:0] = p2.
    auto img = apply_point(mutation_map(n, 1, 2), {pts[0]});
    CHECK(img[0] == pts[1]);
    // r_i exchanges p_{i-1} and p_i for i >= 3.
    for (size_t nn : {4, 5}) {
        auto ps = lines_marked_points(nn);
        for (size_t i = 3; i <= nn; ++i) {
            auto r = mutation_map(nn, 1, i);
            CHECK(apply_point(r, {ps[i - 2]})[0] == ps[i - 1]);
            CHECK(apply_point(r, {ps[i - 1]})[0] == ps[i - 2]);
        }
    }
    // r1 = Cremona at a coordinate point is indeterminate for n >= 4.
    RatVec e1 = {Rat(1), Rat(0), Rat(0)};
    CHECK_THROWS_WITH_AS(apply_point(mutation_map(4, 1, 1), {e1}), "indeterminate", Error);
}

TEST_CASE("lines point orbit is the full set of marked points") {
    for (size_t n : {4, 5}) {
        auto orbit = lines_point_orbit(n);
        auto expect = lines_marked_points(n);
        for (auto& p : expect) p = normalize_projective_point(p);
        std::sort(expect.begin(), expect.end());
        CHECK(orbit == expect);
        CHECK(orbit.size() == n);
    }
}

TEST_CASE("coxeter relations for the lines cases") {
    for (size_t n : {3, 4}) {
        std::vector<MultiProjectiveMap> gens;
        for (size_t i = 1; i <= n; ++i) gens.push_back(mutation_map(n, 1, i));
        auto report = verify_coxeter(gens);
        CHECK(report.mode == "symbolic");
        CHECK(report.all_hold);
    }
}

TEST_CASE("coxeter relations for the plane case (4,2)") {
    std::vector<MultiProjectiveMap> gens;
    for (size_t i = 1; i <= 4; ++i) gens.push_back(mutation_map(4, 2, i));
    auto report = verify_coxeter(gens);
    CHECK(report.mode == "symbolic");
    CHECK(report.all_hold);
}

TEST_CASE("corrupted generator fails with a witness") {
    size_t n = 3;
    std::vector<MultiProjectiveMap> gens;
    for (size_t i = 1; i <= n; ++i) gens.push_back(mutation_map(n, 1, i));
    // Flip a sign in r2.
    size_t nv = 2;
    auto z = [&](size_t i) { return Polynomial::variable(nv, i); };
    gens[1] = MultiProjectiveMap({1}, {1}, {{z(0), z(1) - z(0)}});
    auto report = verify_coxeter(gens);
    CHECK_FALSE(report.all_hold);
    bool r2sq_failed = false;
    for (const auto& c : report.checks)
        if (c.relation == "r2^2" && !c.holds && !c.witness.empty()) r2sq_failed = true;
    CHECK(r2sq_failed);
}

TEST_CASE("weyl chart maps are involutions on the chart") {
    for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{{3, 1}, {4, 1}, {4, 2}}) {
        auto id = AffineRationalMap::identity((k + 1) * (n - k));
        for (size_t i = 1; i <= n; ++i) {
            auto r = grassmann_weyl_chart_map(n, k, i);
            CHECK(r.compose_after(r) == id);
        }
    }
}

TEST_CASE("quotient map specialization for the smallest line case") {
    // n=3, k=1: the single component y = u^0_2 u^1_3 / (u^1_2 u^0_3).
    auto q = grassmann_quotient_map(3, 1);
    REQUIRE(q.comps.size() == 1);
    size_t nv = 4;
    auto u = [&](size_t j, size_t l) {
        return RationalFunction::variable(nv, grassmann_chart_var(3, 1, j, l));
    };
    CHECK(q.comps[0] == (u(0, 2) * u(1, 3)) / (u(1, 2) * u(0, 3)));
}

TEST_CASE("quotient map components are invariant monomials") {
    // The weight of the numerator equals the weight of the denominator:
    // the exponent vector of each component lies in the kernel of the
    // weight matrix.
    for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
        auto q = grassmann_quotient_map(n, k);
        for (const auto& comp : q.comps) {
            ExpVec en = comp.num().leading().first;
            ExpVec ed = comp.den().leading().first;
            CHECK(comp.num().term_count() == 1);
            CHECK(comp.den().term_count() == 1);
            // Build the exponent vector num - den and pair with the weights.
            // Weight of u^j_l is e_l - e_j (t-basis, e_0 = 0).
            IntVec weight(n, Int(0));
            size_t idx = 0;
            for (size_t j = 0; j <= k; ++j)
                for (size_t l = k + 1; l <= n; ++l, ++idx) {
                    long e = en[idx] - ed[idx];
                    if (e == 0) continue;
                    weight[l - 1] += e;
                    if (j >= 1) weight[j - 1] -= e;
                }
            CHECK(is_zero(weight));
        }
    }
}

TEST_CASE("equivariance for the small grassmannians") {
    for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{{3, 1}, {4, 1}, {4, 2}}) {
        auto report = verify_equivariance(n, k);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(report.all_hold);
    }
}

TEST_CASE("equivariance specialization n=3 k=1 i=3") {
    // q(r3(u)) = 1/y: the lower swap inverts the cross ratio.
    auto q = grassmann_quotient_map(3, 1);
    auto r3 = grassmann_weyl_chart_map(3, 1, 3);
    auto lhs = q.compose_after(r3);
    CHECK(lhs.comps[0] == q.comps[0].inverse());
}

TEST_CASE("quadric transitions") {
    auto m2 = quadric_transition(3, 2);
    CHECK(m2 == IntMatrix{{1, 0, 0}, {-1, -1, -1}, {0, 0, 1}});
    auto m3 = quadric_transition(3, 3);
    CHECK(m3 == IntMatrix{{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}});
    for (size_t n : {2, 3, 4, 5})
        for (size_t i = 2; i <= n; ++i) {
            auto m = quadric_transition(n, i);
            CHECK(m.mul(m) == IntMatrix::identity(n));
            CHECK(determinant(m) != 0);
        }
    CHECK(quadric_transition_antipodal(4) == IntMatrix::identity(4));
    for (size_t n : {3, 4, 5})
        for (size_t i = 2; i <= n; ++i) {
            auto m = quadric_transition_even(n, i);
            CHECK(m.mul(m) == IntMatrix::identity(n - 1));
        }
}

TEST_CASE("quadric boundary divisors") {
    auto b3 = quadric_boundary(3);
    REQUIRE(b3.size() == 3);
    CHECK(std::find(b3.begin(), b3.end(), IntVec{1, 1, 1}) != b3.end());
    CHECK(std::find(b3.begin(), b3.end(), IntVec{0, 1, 0}) != b3.end());
    CHECK(std::find(b3.begin(), b3.end(), IntVec{0, 0, 1}) != b3.end());

    auto b4 = quadric_boundary(4);
    CHECK(b4.size() == 4);

    auto e3 = quadric_boundary_even(3);
    REQUIRE(e3.size() == 3);
    CHECK(std::find(e3.begin(), e3.end(), IntVec{1, 1}) != e3.end());

    auto e4 = quadric_boundary_even(4);
    CHECK(e4.size() == 4);
}
