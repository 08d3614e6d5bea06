#pragma once

#include "quotfan/fan.hpp"

#include <string>

namespace quotfan {

/// Transposed Gale dual of a weight matrix: a saturated canonical (HNF)
/// basis of the integer kernel, representing the projection onto the
/// quotient cocharacter lattice.
struct GaleProjection {
    IntMatrix q; // (cols - r) x cols, saturated, row-HNF canonical
};

/// Torus action on affine coordinates, given by the integer matrix whose
/// columns are the weights. Full row rank is enforced at construction: pass
/// the effective torus.
class WeightSystem {
public:
    WeightSystem(IntMatrix w, std::vector<std::string> labels);
    explicit WeightSystem(IntMatrix w);

    const IntMatrix& matrix() const { return w_; }
    size_t torus_rank() const { return w_.rows(); }
    size_t coordinate_count() const { return w_.cols(); }
    size_t quotient_rank() const { return w_.cols() - w_.rows(); }
    const std::vector<std::string>& labels() const { return labels_; }
    IntVec weight(size_t i) const { return w_.col(i); }

private:
    IntMatrix w_;
    std::vector<std::string> labels_;
};

GaleProjection transposed_gale_dual(const WeightSystem& ws);
GaleProjection transposed_gale_dual(const IntMatrix& w);

struct FullyDefiniteResult {
    bool fully_definite = false;
    std::optional<IntMatrix> certificate; // unimodular u with u*w >= 0, no zero column
};

/// Definiteness test: no zero weight and the weight cone is strictly convex.
/// On success the certificate is a basis change making all weights
/// componentwise nonnegative.
FullyDefiniteResult is_fully_definite(const WeightSystem& ws);

} // namespace quotfan
