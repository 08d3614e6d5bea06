#pragma once

#include "quotfan/cone.hpp"

#include <optional>

namespace quotfan {

struct FanReport {
    bool is_smooth = false;
    bool is_simplicial = false;
    bool is_complete = false;
    std::optional<size_t> picard_number; // defined iff simplicial && complete
    size_t ray_count = 0;
    size_t max_cone_count = 0;
};

/// A fan given by its primitive rays and maximal cones as ray-index sets.
/// Canonical form: rays sorted lexicographically, each cone's index list
/// sorted, the cone list sorted. All cones must be pointed.
class Fan {
public:
    Fan() = default;

    /// Assemble a fan from its maximal cones (deduplicated, canonicalized).
    static Fan from_cones(const std::vector<Cone>& max_cones, size_t rank);

    /// The fan with the single cone {0} (rank may be 0).
    static Fan trivial(size_t rank);

    size_t rank() const { return rank_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<std::vector<size_t>>& max_cones() const { return max_cones_; }

    Cone cone(size_t i) const;
    std::vector<Cone> cones() const;

    bool operator==(const Fan& o) const {
        return rank_ == o.rank_ && rays_ == o.rays_ && max_cones_ == o.max_cones_;
    }
    bool operator!=(const Fan& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    size_t rank_ = 0;
    std::vector<IntVec> rays_;
    std::vector<std::vector<size_t>> max_cones_;
};

FanReport fan_report(const Fan& f);

/// Searches for a unimodular matrix mapping rays of f bijectively onto rays
/// of g and maximal cones onto maximal cones. Exhaustive over ray matchings
/// with degree pruning; refuses fans with more than `ray_cap` rays.
std::optional<IntMatrix> fan_isomorphic(const Fan& f, const Fan& g, size_t ray_cap = 14);

/// True iff every maximal cone of `fine` is contained in some maximal cone
/// of `coarse` (for complete fans this makes every coarse cone a union of
/// fine cones).
bool is_coarsening(const Fan& coarse, const Fan& fine);

/// Checks that pairwise intersections of maximal cones are faces of both.
/// Exhaustive up to `pair_cap` cone pairs, deterministic sample beyond.
bool fan_is_valid(const Fan& f, size_t pair_cap = 200 * 200);

/// True iff c is a union of cones of f (c must lie in the support).
bool is_union_of_cones(const Fan& f, const Cone& c);

/// Common refinement of the family of cones C(y) = closures of the regions
/// on which the membership pattern with respect to `orbit_cones` is
/// constant, computed by wall-crossing over the true cells. Correct for
/// families of projected cones of a fan (quotient fans, GIT chambers).
Fan chamber_fan(const std::vector<Cone>& orbit_cones, size_t rank);

/// Like chamber_fan but also returns one interior lattice point per
/// maximal cell (cells indexed as in the fan's max_cones()).
struct ChamberFanResult {
    Fan fan;
    std::vector<Cone> chambers;        // in max_cones() order
    std::vector<IntVec> representatives;
};
ChamberFanResult chamber_fan_with_reps(const std::vector<Cone>& orbit_cones, size_t rank);

/// General common refinement of a list of cones via the full hyperplane
/// arrangement of their facets, merging adjacent cells with equal membership
/// patterns. Supports full-dimensional inputs plus lower-dimensional inputs
/// covered by them; families all sharing one linear span are reduced to that
/// span. Output support = union of inputs.
Fan common_refinement(const std::vector<Cone>& cones, size_t rank);

} // namespace quotfan
