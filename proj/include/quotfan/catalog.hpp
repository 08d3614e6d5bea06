#pragma once

#include "quotfan/polytope.hpp"
#include "quotfan/quotient.hpp"

namespace quotfan {

enum class ChartFamily { ptpn, quadric_odd, quadric_even, grassmann, product_diagonal };

/// Identifier for the example families: flag/quadric/Grassmannian charts
/// and diagonal actions on products of projective spaces.
struct ChartSpec {
    ChartFamily family;
    size_t n = 0;
    size_t k = 0;
    size_t copies = 0;

    static ChartSpec ptpn(size_t n);
    static ChartSpec quadric_odd(size_t n);
    static ChartSpec quadric_even(size_t n);
    static ChartSpec grassmann(size_t n, size_t k);
    static ChartSpec product_diagonal(size_t k, size_t copies);
    static ChartSpec parse(const std::string& family, size_t n, size_t k, size_t copies);

    std::string name() const;
};

/// Weight matrix of the torus action on the chart coordinates, with the
/// documented coordinate orders and labels.
WeightSystem chart_weights(const ChartSpec& spec);

/// The projection matrix displayed for each family, assembled from identity
/// blocks, all-ones blocks and Kronecker products.
IntMatrix expected_gale(const ChartSpec& spec);

/// Delta^m = [ I_m | -(1)_{m x 1} ], an m x (m+1) block.
IntMatrix delta_block(size_t m);

enum class StandardFanKind { projective_space, product_of_projective_spaces, permutohedral };

Fan standard_fan_projective(size_t dim);
Fan standard_fan_product(const std::vector<size_t>& dims);
Fan standard_fan_permutohedral(size_t dim);

/// Fan of (P^k)^copies together with the saturated surjection whose kernel
/// is the diagonally embedded rank-k sublattice.
std::pair<Fan, IntMatrix> diagonal_action_projection(size_t k, size_t copies);

struct FixedPointWeightData {
    std::vector<std::string> labels;
    std::vector<IntVec> weights;
    Polytope weight_polytope;
};

/// Ambient fixed-point weights for the global families (quadrics and
/// Grassmannians) and their weight polytope.
FixedPointWeightData fixed_point_weights(const ChartSpec& spec);

} // namespace quotfan
