#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotfan/catalog.hpp"
#include "quotfan/quotient.hpp"

#include <random>

using namespace quotfan;

namespace {

WeightSystem b_chart(size_t n) { return chart_weights(ChartSpec::quadric_odd(n)); }

Fan p2() { return standard_fan_projective(2); }

} // namespace

TEST_CASE("gale dual of the odd quadric chart") {
    WeightSystem ws = b_chart(3);
    GaleProjection g = transposed_gale_dual(ws);
    CHECK(g.q.rows() == 2);
    CHECK(g.q.cols() == 5);
    CHECK(ws.matrix().mul(g.q.transpose()).is_zero());
    CHECK(row_lattice_basis(g.q) ==
          row_lattice_basis(expected_gale(ChartSpec::quadric_odd(3))));
    for (const auto& f : smith_invariant_factors(g.q)) CHECK(f == 1);
}

TEST_CASE("gale duality is reflexive") {
    for (auto spec : {ChartSpec::quadric_odd(3), ChartSpec::ptpn(3), ChartSpec::grassmann(4, 1)}) {
        WeightSystem ws = chart_weights(spec);
        IntMatrix q = transposed_gale_dual(ws).q;
        // Saturated kernel of q = saturated row space of w.
        CHECK(integer_kernel(q) == integer_kernel(integer_kernel(ws.matrix())));
    }
}

TEST_CASE("full definiteness of the catalog charts") {
    for (auto spec : {ChartSpec::quadric_odd(2), ChartSpec::quadric_odd(3),
                      ChartSpec::quadric_even(3), ChartSpec::ptpn(2), ChartSpec::ptpn(3),
                      ChartSpec::grassmann(4, 1), ChartSpec::grassmann(5, 2)}) {
        CAPTURE(spec.name());
        WeightSystem ws = chart_weights(spec);
        auto res = is_fully_definite(ws);
        CHECK(res.fully_definite);
        REQUIRE(res.certificate.has_value());
        CHECK(is_unimodular(*res.certificate));
        IntMatrix uw = res.certificate->mul(ws.matrix());
        for (size_t j = 0; j < uw.cols(); ++j) {
            bool nonzero = false;
            for (size_t i = 0; i < uw.rows(); ++i) {
                CHECK(uw.at(i, j) >= 0);
                if (uw.at(i, j) != 0) nonzero = true;
            }
            CHECK(nonzero);
        }
    }
}

TEST_CASE("non fully definite systems") {
    WeightSystem pm(IntMatrix{{1, -1}});
    CHECK_FALSE(is_fully_definite(pm).fully_definite);

    // A zero weight is forbidden even with a pointed cone.
    WeightSystem withzero(IntMatrix{{1, 0}});
    CHECK_FALSE(is_fully_definite(withzero).fully_definite);

    WeightSystem b2 = b_chart(2);
    CHECK(is_fully_definite(b2).fully_definite);
}

TEST_CASE("quotient fan of the odd quadric chart n=3 is the projective plane") {
    Fan f = quotient_fan(b_chart(3));
    CHECK(f == p2());
    CHECK(fan_is_valid(f));
}

TEST_CASE("quotient fan with the displayed projection has the standard rays") {
    for (size_t n : {2, 3, 4}) {
        ChartSpec spec = ChartSpec::quadric_odd(n);
        Fan f = quotient_fan_with_projection(chart_weights(spec), expected_gale(spec));
        Fan std_fan = standard_fan_projective(n - 1);
        CHECK(f == std_fan);
    }
}

TEST_CASE("quotient fan of the flag chart") {
    for (size_t n : {2, 3}) {
        ChartSpec spec = ChartSpec::ptpn(n);
        Fan f = quotient_fan(chart_weights(spec));
        CHECK(f == standard_fan_projective(n - 1));
    }
}

TEST_CASE("quotient fan of the line grassmannian chart n=4 is the hexagon") {
    Fan f = quotient_fan(chart_weights(ChartSpec::grassmann(4, 1)));
    CHECK(f.rays().size() == 6);
    CHECK(f.max_cones().size() == 6);
    auto iso = fan_isomorphic(f, standard_fan_permutohedral(2));
    CHECK(iso.has_value());
}

TEST_CASE("quotient fan is invariant under unimodular retakes of the gale dual") {
    WeightSystem ws = b_chart(3);
    IntMatrix q = transposed_gale_dual(ws).q;
    std::mt19937_64 rng(4711);
    std::uniform_int_distribution<int> dist(-2, 2);
    Fan base = quotient_fan(ws);
    for (int t = 0; t < 5; ++t) {
        // Random unimodular 2x2 from two shears.
        IntMatrix u{{1, 0}, {0, 1}};
        u.at(0, 1) = dist(rng);
        IntMatrix l{{1, 0}, {0, 1}};
        l.at(1, 0) = dist(rng);
        IntMatrix uu = u.mul(l);
        REQUIRE(is_unimodular(uu));
        Fan f = quotient_fan_with_projection(ws, uu.mul(q));
        auto iso = fan_isomorphic(f, base);
        CHECK(iso.has_value());
    }
}

TEST_CASE("quotient fan general") {
    // Identity projection refines the fan by itself.
    Fan pp = standard_fan_product({1, 1});
    CHECK(quotient_fan_general(pp, IntMatrix::identity(2)) == pp);

    // Projection of the line fan to rank 0.
    Fan p1 = standard_fan_projective(1);
    Fan t = quotient_fan_general(p1, IntMatrix(0, 1));
    CHECK(t == Fan::trivial(0));

    // (P^1)^3 modulo the diagonal gives the 2-dimensional permutohedral fan.
    auto [f, s] = diagonal_action_projection(1, 3);
    CHECK(s.rows() == 2);
    CHECK(s.cols() == 3);
    CHECK(s.mul(IntVec{1, 1, 1}) == IntVec{0, 0});
    Fan q = quotient_fan_general(f, s);
    auto iso = fan_isomorphic(q, standard_fan_permutohedral(2));
    CHECK(iso.has_value());
    Fan gr41 = quotient_fan(chart_weights(ChartSpec::grassmann(4, 1)));
    CHECK(fan_isomorphic(q, gr41).has_value());
}

TEST_CASE("git chambers of the odd quadric charts") {
    ChamberComplex c3 = git_chambers(b_chart(3));
    CHECK(c3.chambers.size() == 4);
    for (size_t i = 0; i < c3.chambers.size(); ++i) {
        CHECK(c3.chambers[i].contains_in_interior(c3.representatives[i]));
        CHECK(c3.support.contains_cone(c3.chambers[i]));
    }

    // Single weight column: one chamber.
    WeightSystem single(IntMatrix{{1}});
    ChamberComplex c1 = git_chambers(single);
    CHECK(c1.chambers.size() == 1);

    // Flag chart for n=2: weights alpha1, alpha1+alpha2, alpha2; the middle
    // ray splits the cone into two chambers.
    ChamberComplex cf = git_chambers(chart_weights(ChartSpec::ptpn(2)));
    CHECK(cf.chambers.size() == 2);
}

TEST_CASE("fiber polytopes of the smallest quadric chart") {
    WeightSystem b2 = b_chart(2);
    // v = (-2, 0): the segment from (2,0,0) to (0,1,1).
    Polytope f = fiber_polytope(b2, RatVec{Rat(-2), Rat(0)});
    CHECK(f.bounded());
    REQUIRE(f.vertices().size() == 2);
    CHECK(f.vertices()[0] == RatVec{Rat(0), Rat(1), Rat(1)});
    CHECK(f.vertices()[1] == RatVec{Rat(2), Rat(0), Rat(0)});

    // v = 0: the single point 0.
    Polytope z = fiber_polytope(b2, RatVec{Rat(0), Rat(0)});
    CHECK(z.bounded());
    REQUIRE(z.vertices().size() == 1);

    // v outside the weight cone: empty, reported rather than thrown.
    Polytope e = fiber_polytope(b2, RatVec{Rat(1), Rat(0)});
    CHECK(e.empty());

    // A non fully definite system has an unbounded fiber over zero.
    WeightSystem pm(IntMatrix{{1, -1}});
    Polytope u = fiber_polytope(pm, RatVec{Rat(0)});
    CHECK_FALSE(u.bounded());
}

TEST_CASE("git quotient fans") {
    WeightSystem b2 = b_chart(2);
    Fan f = git_quotient_fan(b2, RatVec{Rat(-2), Rat(0)});
    CHECK(f == standard_fan_projective(1));

    CHECK(git_quotient_fan(b2, RatVec{Rat(0), Rat(0)}) == Fan::trivial(0));

    WeightSystem pm(IntMatrix{{1, -1}});
    CHECK_THROWS_WITH_AS(git_quotient_fan(pm, RatVec{Rat(0)}),
                         "not fully definite at this linearization", Error);

    // Every chamber of the n=3 chart gives the projective plane, equal to
    // the quotient fan itself (Picard number one).
    WeightSystem b3 = b_chart(3);
    Fan qf = quotient_fan(b3);
    ChamberComplex cc = git_chambers(b3);
    for (const auto& rep : cc.representatives) {
        RatVec v(rep.size());
        for (size_t i = 0; i < rep.size(); ++i) v[i] = Rat(rep[i]);
        Fan gf = git_quotient_fan(b3, v);
        CHECK(gf == qf);
    }
}

TEST_CASE("git fans coarsen the quotient fan") {
    WeightSystem gr = chart_weights(ChartSpec::grassmann(4, 1));
    Fan qf = quotient_fan(gr);
    ChamberComplex cc = git_chambers(gr);
    for (const auto& rep : cc.representatives) {
        RatVec v(rep.size());
        for (size_t i = 0; i < rep.size(); ++i) v[i] = Rat(rep[i]);
        Fan gf = git_quotient_fan(gr, v);
        CHECK(is_coarsening(gf, qf));
    }
}

TEST_CASE("projected face cones are unions of quotient fan cones") {
    for (auto spec : {ChartSpec::quadric_odd(3), ChartSpec::ptpn(3)}) {
        WeightSystem ws = chart_weights(spec);
        Fan qf = quotient_fan(ws);
        IntMatrix q = transposed_gale_dual(ws).q;
        for (const auto& c : column_subset_cones(q)) CHECK(is_union_of_cones(qf, c));
    }
}

TEST_CASE("semistable support patterns") {
    WeightSystem b3 = b_chart(3);
    // Chamber spanned by -e1, e2-e1, e3-e1 (all plus signs): the plus
    // hyperplanes are the deleted ones.
    RatVec v = {Rat(-3), Rat(1), Rat(1)};
    auto flags = semistable_support(b3, v);
    REQUIRE(flags.size() == 5);
    CHECK(flags[0]);        // rho1 keeps semistable points
    CHECK_FALSE(flags[1]);  // rho2+ deleted
    CHECK_FALSE(flags[2]);  // rho3+ deleted
    CHECK(flags[3]);        // rho2- survives
    CHECK(flags[4]);        // rho3- survives

    // v = 0: the fiber is the origin, every coordinate vanishes there.
    auto zero_flags = semistable_support(b3, RatVec{Rat(0), Rat(0), Rat(0)});
    for (bool f : zero_flags) CHECK(f);

    // Single weight at its own linearization: the coordinate is forced positive.
    WeightSystem single(IntMatrix{{1}});
    auto sflags = semistable_support(single, RatVec{Rat(1)});
    REQUIRE(sflags.size() == 1);
    CHECK_FALSE(sflags[0]);
}

TEST_CASE("chow polytope") {
    WeightSystem b3 = b_chart(3);
    Polytope cp = chow_polytope(b3);
    CHECK(cp.bounded());
    Fan nf = normal_fan_in_basis(cp, IntMatrix::identity(2));
    CHECK(nf == quotient_fan(b3));

    WeightSystem gr = chart_weights(ChartSpec::grassmann(4, 1));
    Polytope hex = chow_polytope(gr);
    CHECK(hex.vertices().size() == 6);
    CHECK(normal_fan_in_basis(hex, IntMatrix::identity(2)) == quotient_fan(gr));

    // Single chamber: the chow polytope is that chamber's fiber.
    WeightSystem single(IntMatrix{{1}});
    Polytope sp = chow_polytope(single);
    CHECK(sp.bounded());

    WeightSystem pm(IntMatrix{{1, -1}});
    CHECK_THROWS_AS(chow_polytope(pm), Error);
}
