#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quotfan/cone.hpp"

#include <random>

using namespace quotfan;

TEST_CASE("orthant is self dual") {
    Cone c = Cone::positive_orthant(2);
    CHECK(c.rays() == std::vector<IntVec>{{0, 1}, {1, 0}});
    CHECK(c.dual() == c);
    CHECK(c.dim() == 2);
    CHECK(c.is_pointed());
}

TEST_CASE("dual of a simplicial cone") {
    Cone c = Cone::from_generators({{1, 0}, {1, 1}}, 2);
    Cone d = c.dual();
    CHECK(d == Cone::from_generators({{0, 1}, {1, -1}}, 2));
}

TEST_CASE("dual of the full space is the zero cone") {
    Cone full = Cone::full_space(2);
    CHECK(full.is_full_space());
    Cone d = full.dual();
    CHECK(d.is_zero_cone());
    CHECK(d.dual() == full);
}

TEST_CASE("cone intersection") {
    Cone a = Cone::from_generators({{1, 0}, {1, 1}}, 2);
    Cone b = Cone::from_generators({{1, 1}, {0, 1}}, 2);
    Cone i = a.intersect(b);
    CHECK(i == Cone::from_generators({{1, 1}}, 2));

    CHECK(a.intersect(a) == a);

    Cone orth = Cone::positive_orthant(2);
    Cone neg = Cone::from_generators({{-1, 0}, {0, -1}}, 2);
    CHECK(orth.intersect(neg).is_zero_cone());
}

TEST_CASE("membership and interior") {
    Cone c = Cone::from_generators({{1, 0}, {1, 2}}, 2);
    CHECK(c.contains(IntVec{1, 1}));
    CHECK(c.contains_in_interior(IntVec{1, 1}));
    CHECK(c.contains(IntVec{1, 0}));
    CHECK_FALSE(c.contains_in_interior(IntVec{1, 0}));
    CHECK_FALSE(c.contains(IntVec{0, 1}));
    IntVec p = c.interior_point();
    CHECK(c.contains_in_interior(p));
}

TEST_CASE("half plane keeps its lineality") {
    Cone h = Cone::from_inequalities({{0, 1}}, {}, 2);
    CHECK(h.lineality().size() == 1);
    CHECK(h.rays().size() == 1);
    CHECK(h.contains(IntVec{5, 0}));
    CHECK(h.contains(IntVec{-5, 0}));
    CHECK(h.contains(IntVec{0, 3}));
    CHECK_FALSE(h.contains(IntVec{0, -3}));
    CHECK(h.dim() == 2);
    CHECK_FALSE(h.is_pointed());
}

TEST_CASE("lower dimensional cone records span equations") {
    Cone r = Cone::from_generators({{1, 1, 0}}, 3);
    CHECK(r.dim() == 1);
    CHECK(r.span_equations().size() == 2);
    for (const auto& e : r.span_equations()) CHECK(dot(e, IntVec{1, 1, 0}) == 0);
}

TEST_CASE("face tests") {
    Cone q = Cone::positive_orthant(2);
    CHECK(q.has_face(Cone::from_generators({{1, 0}}, 2)));
    CHECK(q.has_face(Cone::zero(2)));
    CHECK(q.has_face(q));
    CHECK_FALSE(q.has_face(Cone::from_generators({{1, 1}}, 2)));

    Cone ab = Cone::from_generators({{-1, -1}, {1, 0}}, 2);
    Cone bc = Cone::from_generators({{1, 0}, {0, 1}}, 2);
    Cone w = ab.intersect(bc);
    CHECK(w == Cone::from_generators({{1, 0}}, 2));
    CHECK(ab.has_face(w));
    CHECK(bc.has_face(w));
}

TEST_CASE("dual dual is identity on random cones") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        size_t d = 2 + trial % 3; // ranks 2..4
        std::vector<IntVec> gens;
        size_t m = 1 + (size_t)(rng() % (d + 2));
        for (size_t i = 0; i < m; ++i) {
            IntVec g(d);
            bool zero = true;
            for (auto& x : g) {
                x = dist(rng);
                if (x != 0) zero = false;
            }
            if (!zero) gens.push_back(g);
        }
        Cone c = Cone::from_generators(gens, d);
        Cone dd = c.dual().dual();
        CHECK(dd == c);
        // Both ways containment as sets.
        CHECK(dd.contains_cone(c));
        CHECK(c.contains_cone(dd));
    }
}

TEST_CASE("H and V representations describe the same set") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        size_t d = 2 + trial % 3;
        std::vector<IntVec> gens;
        for (size_t i = 0; i < d + 1; ++i) {
            IntVec g(d);
            bool zero = true;
            for (auto& x : g) {
                x = dist(rng);
                if (x != 0) zero = false;
            }
            if (!zero) gens.push_back(g);
        }
        Cone c = Cone::from_generators(gens, d);
        // Every original generator satisfies the computed H-representation.
        for (const auto& g : gens) CHECK(c.contains(g));
        // Every ray is irredundant: dropping it changes the cone.
        for (size_t i = 0; i < c.rays().size(); ++i) {
            std::vector<IntVec> rest;
            for (size_t j = 0; j < c.rays().size(); ++j)
                if (j != i) rest.push_back(c.rays()[j]);
            for (const auto& l : c.lineality()) rest.push_back(l);
            Cone smaller = Cone::from_generators(rest, d);
            if (!c.lineality().empty()) continue; // representative ambiguity
            CHECK_FALSE(smaller.contains(c.rays()[i]));
        }
    }
}
