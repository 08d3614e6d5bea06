#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotfan/catalog.hpp"

using namespace quotfan;

TEST_CASE("flag chart weights") {
    WeightSystem ws = chart_weights(ChartSpec::ptpn(2));
    CHECK(ws.matrix() == IntMatrix{{1, 1, 0}, {0, 1, 1}});
    CHECK(expected_gale(ChartSpec::ptpn(2)) == IntMatrix{{1, -1, 1}});
    // n = 3: weights alpha1, alpha1+alpha2, alpha1+alpha2+alpha3, alpha2+alpha3, alpha3
    WeightSystem w3 = chart_weights(ChartSpec::ptpn(3));
    CHECK(w3.matrix() ==
          IntMatrix{{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}});
}

TEST_CASE("odd quadric chart weights") {
    WeightSystem ws = chart_weights(ChartSpec::quadric_odd(3));
    // Columns: -e1, e2-e1, e3-e1, -e2-e1, -e3-e1.
    CHECK(ws.matrix() == IntMatrix{{-1, -1, -1, -1, -1},
                                   {0, 1, 0, -1, 0},
                                   {0, 0, 1, 0, -1}});
    CHECK(ws.labels() ==
          std::vector<std::string>{"rho1", "rho2+", "rho3+", "rho2-", "rho3-"});
    CHECK(expected_gale(ChartSpec::quadric_odd(3)) ==
          IntMatrix{{-2, 1, 0, 1, 0}, {-2, 0, 1, 0, 1}});
}

TEST_CASE("even quadric chart weights") {
    CHECK(expected_gale(ChartSpec::quadric_even(3)) == IntMatrix{{-1, 1, -1, 1}});
    WeightSystem ws = chart_weights(ChartSpec::quadric_even(3));
    CHECK(ws.matrix().cols() == 4);
    CHECK(ws.matrix().mul(expected_gale(ChartSpec::quadric_even(3)).transpose()).is_zero());
}

TEST_CASE("grassmann chart weights match the displayed n=5 k=2 matrices") {
    WeightSystem ws = chart_weights(ChartSpec::grassmann(5, 2));
    IntMatrix expected{{0, 0, 0, -1, -1, -1, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, -1, -1, -1},
                       {1, 0, 0, 1, 0, 0, 1, 0, 0},
                       {0, 1, 0, 0, 1, 0, 0, 1, 0},
                       {0, 0, 1, 0, 0, 1, 0, 0, 1}};
    CHECK(ws.matrix() == expected);
    CHECK(ws.labels()[0] == "u^0_3");
    CHECK(ws.labels()[8] == "u^2_5");
}

TEST_CASE("grassmann gale dual is the kronecker of delta blocks") {
    for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
        ChartSpec spec = ChartSpec::grassmann(n, k);
        WeightSystem ws = chart_weights(spec);
        IntMatrix g = expected_gale(spec);
        CHECK(g.rows() == k * (n - k - 1));
        CHECK(ws.matrix().mul(g.transpose()).is_zero());
        CHECK(row_lattice_basis(transposed_gale_dual(ws).q) == row_lattice_basis(g));
    }
}

TEST_CASE("grassmann subtorus gale dual is delta tensor identity") {
    // The last n-k rows of the weight matrix: their kernel basis has row
    // space Delta^k (x) I_{n-k}.
    for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{{4, 1}, {4, 2}, {5, 2}}) {
        WeightSystem ws = chart_weights(ChartSpec::grassmann(n, k));
        IntMatrix sub(n - k, ws.matrix().cols());
        for (size_t i = 0; i < n - k; ++i)
            for (size_t j = 0; j < ws.matrix().cols(); ++j)
                sub.at(i, j) = ws.matrix().at(k + i, j);
        IntMatrix expected = kronecker(delta_block(k), IntMatrix::identity(n - k));
        CHECK(sub.mul(expected.transpose()).is_zero());
        CHECK(row_lattice_basis(transposed_gale_dual(sub).q) == row_lattice_basis(expected));
    }
}

TEST_CASE("standard fans") {
    Fan p1 = standard_fan_projective(1);
    CHECK(p1.rays() == std::vector<IntVec>{{-1}, {1}});

    Fan perm1 = standard_fan_permutohedral(1);
    CHECK(fan_isomorphic(perm1, p1).has_value());

    Fan perm2 = standard_fan_permutohedral(2);
    CHECK(perm2.rays().size() == 6);
    CHECK(perm2.max_cones().size() == 6);
    auto rep = fan_report(perm2);
    CHECK(rep.is_smooth);
    CHECK(rep.is_complete);

    Fan pp = standard_fan_product({1, 1});
    CHECK(pp.rays().size() == 4);
    CHECK(pp.max_cones().size() == 4);
    auto rep2 = fan_report(pp);
    CHECK(rep2.is_smooth);
    CHECK(rep2.is_complete);
    CHECK(rep2.picard_number.value() == 2);

    Fan p2x = standard_fan_product({2, 2});
    CHECK(p2x.rays().size() == 6);
    CHECK(p2x.max_cones().size() == 9);
}

TEST_CASE("diagonal action data") {
    auto [f3, s3] = diagonal_action_projection(1, 3);
    CHECK(f3.rank() == 3);
    CHECK(f3.max_cones().size() == 8);
    CHECK(s3.rows() == 2);
    CHECK(s3.mul(IntVec{1, 1, 1}) == IntVec{0, 0});

    auto [f22, s22] = diagonal_action_projection(2, 2);
    CHECK(f22.rank() == 4);
    CHECK(s22.rows() == 2);
    CHECK(s22.mul(IntVec{1, 0, 1, 0}) == IntVec{0, 0});
    CHECK(s22.mul(IntVec{0, 1, 0, 1}) == IntVec{0, 0});
    for (const auto& d : smith_invariant_factors(s22)) CHECK(d == 1);

    // k=1, copies=2: the quotient fan is the fan of the projective line.
    auto [f2, s2] = diagonal_action_projection(1, 2);
    Fan q = quotient_fan_general(f2, s2);
    CHECK(fan_isomorphic(q, standard_fan_permutohedral(1)).has_value());
}

TEST_CASE("fixed point weights") {
    auto quad = fixed_point_weights(ChartSpec::quadric_odd(2));
    CHECK(quad.weights.size() == 4);
    CHECK(quad.weight_polytope.vertices().size() == 4); // cross-polytope
    CHECK(quad.weight_polytope.dim() == 2);

    auto gr = fixed_point_weights(ChartSpec::grassmann(3, 1));
    CHECK(gr.weights.size() == 6); // pairs from 4 indices
    CHECK(gr.weight_polytope.dim() == 3); // octahedron inside the sum hyperplane
    CHECK(gr.weight_polytope.vertices().size() == 6);
    // All weights pairwise distinct.
    for (size_t i = 0; i < gr.weights.size(); ++i)
        for (size_t j = i + 1; j < gr.weights.size(); ++j)
            CHECK(gr.weights[i] != gr.weights[j]);
}

TEST_CASE("invalid chart parameters") {
    CHECK_THROWS_AS(ChartSpec::ptpn(1), Error);
    CHECK_THROWS_AS(ChartSpec::quadric_even(2), Error);
    CHECK_THROWS_AS(ChartSpec::grassmann(3, 2), Error);
    CHECK_THROWS_AS(ChartSpec::product_diagonal(0, 3), Error);
    CHECK_THROWS_AS(ChartSpec::parse("nope", 3, 1, 0), Error);
}
