#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotfan/polytope.hpp"

#include <random>

using namespace quotfan;

namespace {

AffineForm ge(IntVec c, long long b) { return AffineForm{std::move(c), Int(b)}; }

Polytope nonneg_orthant_slice(std::vector<AffineForm> eqs, size_t rank) {
    std::vector<AffineForm> ineqs;
    for (size_t i = 0; i < rank; ++i) {
        IntVec e(rank, Int(0));
        e[i] = 1;
        ineqs.push_back(ge(e, 0));
    }
    return Polytope::from_h_rep(ineqs, eqs, rank);
}

} // namespace

TEST_CASE("vertex enumeration of a fiber-style polytope") {
    // {x >= 0, x1+x2+x3 = 2, x2-x3 = 0}
    Polytope p = nonneg_orthant_slice({ge({1, 1, 1}, 2), ge({0, 1, -1}, 0)}, 3);
    CHECK(p.bounded());
    REQUIRE(p.vertices().size() == 2);
    CHECK(p.vertices()[0] == RatVec{Rat(0), Rat(1), Rat(1)});
    CHECK(p.vertices()[1] == RatVec{Rat(2), Rat(0), Rat(0)});
}

TEST_CASE("single point and unbounded flags") {
    Polytope pt = nonneg_orthant_slice({ge({1}, 0)}, 1);
    CHECK(pt.bounded());
    REQUIRE(pt.vertices().size() == 1);
    CHECK(pt.vertices()[0] == RatVec{Rat(0)});

    // {x >= 0, x1 - x2 = 0} in rank 2 recedes along (1,1).
    Polytope ub = nonneg_orthant_slice({ge({1, -1}, 0)}, 2);
    CHECK_FALSE(ub.bounded());
    REQUIRE(ub.recession_rays().size() == 1);
    CHECK(ub.recession_rays()[0] == IntVec{1, 1});
}

TEST_CASE("empty polytope") {
    Polytope e = nonneg_orthant_slice({ge({1, 1}, -1)}, 2);
    CHECK(e.empty());
    CHECK(e.vertices().empty());
}

TEST_CASE("hull round trip") {
    std::vector<RatVec> pts = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)},
                               {Rat(1, 3), Rat(1, 3)}};
    Polytope p = Polytope::from_points(pts, {}, 2);
    CHECK(p.bounded());
    CHECK(p.vertices().size() == 3); // the interior point is not a vertex
    CHECK(p.dim() == 2);
    CHECK(p.contains(RatVec{Rat(1, 3), Rat(1, 3)}));
    CHECK_FALSE(p.contains(RatVec{Rat(1), Rat(1)}));
}

TEST_CASE("normal fan of a segment is the fan of the projective line") {
    Polytope seg = Polytope::from_points({{Rat(0)}, {Rat(1)}}, {}, 1);
    Fan f = normal_fan(seg);
    CHECK(f.rays() == std::vector<IntVec>{{-1}, {1}});
    CHECK(f.max_cones().size() == 2);
    CHECK(fan_report(f).is_complete);
}

TEST_CASE("normal fan of the standard triangle is the projective plane fan") {
    Polytope tri = Polytope::from_points({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}},
                                         {}, 2);
    Fan f = normal_fan(tri);
    std::vector<IntVec> expected = {{-1, -1}, {0, 1}, {1, 0}};
    CHECK(f.rays() == expected);
    CHECK(f.max_cones().size() == 3);
}

TEST_CASE("normal fan of the 2d permutohedron is the hexagon fan") {
    std::vector<RatVec> verts;
    int perm[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (auto& pr : perm) verts.push_back(RatVec{Rat(pr[0]), Rat(pr[1]), Rat(pr[2])});
    Polytope p = Polytope::from_points(verts, {}, 3);
    CHECK(p.dim() == 2);
    Fan f = normal_fan(p);
    CHECK(f.rank() == 2);
    CHECK(f.rays().size() == 6);
    CHECK(f.max_cones().size() == 6);
    auto rep = fan_report(f);
    CHECK(rep.is_complete);
    CHECK(rep.is_smooth);
}

TEST_CASE("normal fan errors") {
    Polytope ub = nonneg_orthant_slice({}, 2);
    CHECK_THROWS_AS(normal_fan(ub), Error);
    Polytope e = nonneg_orthant_slice({ge({1, 1}, -1)}, 2);
    CHECK_THROWS_AS(normal_fan(e), Error);
}

TEST_CASE("minkowski sums") {
    Polytope sx = Polytope::from_points({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}, {}, 2);
    Polytope sy = Polytope::from_points({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}}, {}, 2);
    Polytope square = minkowski_sum({sx, sy});
    CHECK(square.vertices().size() == 4);

    Polytope pt = Polytope::from_points({{Rat(5), Rat(7)}}, {}, 2);
    Polytope moved = minkowski_sum({sx, pt});
    REQUIRE(moved.vertices().size() == 2);
    CHECK(moved.vertices()[0] == RatVec{Rat(5), Rat(7)});
    CHECK(moved.vertices()[1] == RatVec{Rat(6), Rat(7)});

    Polytope tri = Polytope::from_points({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}},
                                         {}, 2);
    Polytope antitri =
        Polytope::from_points({{Rat(0), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}}, {}, 2);
    Polytope hex = minkowski_sum({tri, antitri});
    CHECK(hex.vertices().size() == 6);
}

TEST_CASE("normal fan of a minkowski sum is the refinement of the normal fans") {
    std::mt19937_64 rng(20250808);
    std::uniform_int_distribution<int> coord(-3, 3);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 12; ++trial) {
        size_t d = 2 + trial % 2;
        auto random_poly = [&]() {
            std::vector<RatVec> pts;
            for (size_t i = 0; i < d + 2; ++i) {
                RatVec v(d);
                for (auto& x : v) x = Rat(coord(rng));
                pts.push_back(v);
            }
            return Polytope::from_points(pts, {}, d);
        };
        Polytope a = random_poly(), b = random_poly();
        if (a.dim() != d || b.dim() != d) continue; // need full-dimensional summands
        Fan fa = normal_fan(a), fb = normal_fan(b);
        Fan sum_fan = normal_fan(minkowski_sum({a, b}));
        std::vector<Cone> all = fa.cones();
        for (const auto& c : fb.cones()) all.push_back(c);
        Fan refined = common_refinement(all, d);
        CHECK(sum_fan == refined);
        ++done;
    }
    CHECK(done >= 12);
}

TEST_CASE("lattice points of a simplex") {
    Polytope tri = Polytope::from_points({{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(2)}},
                                         {}, 2);
    auto pts = tri.lattice_points();
    CHECK(pts.size() == 6);
}
