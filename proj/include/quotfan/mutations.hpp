#pragma once

#include "quotfan/projective_map.hpp"
#include "quotfan/rational_function.hpp"

#include <cstdint>

namespace quotfan {

/// Rational self-map of an affine chart, one component per coordinate.
struct AffineRationalMap {
    size_t nvars = 0;
    std::vector<RationalFunction> comps;

    static AffineRationalMap identity(size_t nvars);
    AffineRationalMap compose_after(const AffineRationalMap& inner) const; // this(inner(u))
    bool operator==(const AffineRationalMap& o) const {
        return nvars == o.nvars && comps == o.comps;
    }
};

/// Chart coordinates u^j_l, j = 0..k, l = k+1..n, in (j,l)-lex order.
size_t grassmann_chart_var(size_t n, size_t k, size_t j, size_t l);

/// The Weyl generator r_i acting on the chart coordinates: index swaps for
/// i <= k and i > k+1, the bordered-matrix formula for i = k+1.
AffineRationalMap grassmann_weyl_chart_map(size_t n, size_t k, size_t i);

/// The rational quotient map u -> y with y^j_l = (u^j_l u^k_n)/(u^k_l u^j_n),
/// j = 0..k-1, l = k+1..n-1; components indexed in (j,l)-lex order.
AffineRationalMap grassmann_quotient_map(size_t n, size_t k);

/// Mutation generator r_i as a birational self-map of (P^{n-k-1})^k in the
/// homogeneous coordinates z^j_l, factor j = 0..k-1, l = k+1..n.
MultiProjectiveMap mutation_map(size_t n, size_t k, size_t i);

/// The same map read in the affine coordinates y^j_l = z^j_l / z^j_n.
AffineRationalMap mutation_map_affine(size_t n, size_t k, size_t i);

enum class VerifyMode { automatic, symbolic, evaluation };

struct RelationCheck {
    std::string relation;
    bool holds = false;
    std::string witness; // reduced defect when failing
};

struct RelationReport {
    bool all_hold = true;
    std::string mode;  // "symbolic" or "evaluation"
    std::uint64_t seed = 0;
    std::vector<RelationCheck> checks;
};

/// Coxeter presentation check for generators r_1..r_n of the symmetric
/// group: r_i^2 = 1, (r_i r_{i+1})^3 = 1, (r_i r_j)^2 = 1 for |i-j| >= 2.
/// Symbolic mode composes maps exactly; evaluation mode certifies the
/// identities at >= 20 random rational points per relation (seed recorded).
RelationReport verify_coxeter(const std::vector<MultiProjectiveMap>& maps,
                              VerifyMode mode = VerifyMode::automatic,
                              std::uint64_t seed = 20240911);

/// Equivariance of the quotient map: q o r_i = mu(r_i) o q for all i.
RelationReport verify_equivariance(size_t n, size_t k,
                                   VerifyMode mode = VerifyMode::automatic,
                                   std::uint64_t seed = 20240911);

/// The n marked points p_1 = [1:...:1], p_2 = [1:0:...:0], ..., p_n in the
/// line-case quotient P^{n-2}.
std::vector<RatVec> lines_marked_points(size_t n);

/// Orbit of the marked points under the mutations r_2..r_n (k = 1).
std::vector<RatVec> lines_point_orbit(size_t n);

} // namespace quotfan
