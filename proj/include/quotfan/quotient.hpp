#pragma once

#include "quotfan/polytope.hpp"
#include "quotfan/weights.hpp"

namespace quotfan {

/// GIT chamber decomposition of the projected orthant.
struct ChamberComplex {
    size_t ambient_rank = 0;
    Cone support;                      // image of the positive orthant
    std::vector<Cone> chambers;        // maximal chambers
    std::vector<IntVec> representatives; // one interior lattice point each
};

/// Cones over all column subsets of m (the images of the orthant faces).
std::vector<Cone> column_subset_cones(const IntMatrix& m);

/// Quotient fan of the positive orthant: common refinement of the images of
/// its faces under the canonical Gale projection.
Fan quotient_fan(const WeightSystem& ws);

/// Same, but with an explicit projection whose rows must span the kernel of
/// the weight matrix (any unimodular retake of the Gale dual).
Fan quotient_fan_with_projection(const WeightSystem& ws, const IntMatrix& proj);

/// Quotient fan of an arbitrary fan under a saturated surjection.
Fan quotient_fan_general(const Fan& f, const IntMatrix& q);

ChamberComplex git_chambers(const WeightSystem& ws);

/// The polytope {x >= 0, W x = v} in ambient coordinates.
Polytope fiber_polytope(const WeightSystem& ws, const RatVec& v);

/// The same fiber written in the quotient lattice coordinates determined by
/// the Gale basis rows (vertices relative to the first vertex).
Polytope fiber_in_quotient_coords(const WeightSystem& ws, const RatVec& v);

/// Normal fan of the fiber polytope in the quotient lattice.
Fan git_quotient_fan(const WeightSystem& ws, const RatVec& v);

/// For each coordinate: true iff some lattice point of a fiber over a
/// multiple of v vanishes there (the coordinate hyperplane keeps semistable
/// points); false marks the deleted orbit closures.
std::vector<bool> semistable_support(const WeightSystem& ws, const RatVec& v);

/// Minkowski sum over the maximal chambers of the fibers at their interior
/// representatives, in quotient coordinates. Its normal fan is the quotient
/// fan.
Polytope chow_polytope(const WeightSystem& ws);

} // namespace quotfan
