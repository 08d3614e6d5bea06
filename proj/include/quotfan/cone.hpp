#pragma once

#include "quotfan/linalg.hpp"

#include <optional>

namespace quotfan {

/// Output of a double description run: extreme rays modulo lineality plus a
/// basis of the lineality space.
struct DDRays {
    std::vector<IntVec> rays;      // primitive, canonical representatives
    std::vector<IntVec> lineality; // HNF basis rows (may be empty)
};

/// Extreme rays of {x : eqs*x = 0, ineqs*x >= 0}. Exact, deterministic.
DDRays dd_rays(const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs, size_t rank);

/// Rational polyhedral cone over a fixed lattice, immutable after
/// construction. Both representations are kept canonical: rays are primitive
/// and sorted, the lineality basis is in HNF, facets are primitive covectors
/// and sorted, span equations are in HNF.
class Cone {
public:
    Cone() = default; // the zero cone in rank 0

    static Cone from_generators(const std::vector<IntVec>& gens, size_t rank);
    static Cone from_generators_rat(const std::vector<RatVec>& gens, size_t rank);
    static Cone from_inequalities(const std::vector<IntVec>& ineqs,
                                  const std::vector<IntVec>& eqs, size_t rank);
    static Cone zero(size_t rank);
    static Cone full_space(size_t rank);
    static Cone positive_orthant(size_t rank);

    size_t rank() const { return rank_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<IntVec>& lineality() const { return lineality_; }
    const std::vector<IntVec>& facets() const { return facets_; }
    const std::vector<IntVec>& span_equations() const { return span_equations_; }

    /// Irredundant generator list: extreme rays plus +-(lineality basis).
    std::vector<IntVec> generators() const;

    size_t dim() const;
    bool is_pointed() const { return lineality_.empty(); }
    bool is_zero_cone() const { return rays_.empty() && lineality_.empty(); }
    bool is_full_space() const { return lineality_.size() == rank_; }

    bool contains(const IntVec& x) const;
    bool contains(const RatVec& x) const;
    bool contains_in_interior(const IntVec& x) const; // relative interior
    bool contains_cone(const Cone& c) const;

    /// Sum of the extreme rays: a relative-interior lattice point
    /// (the zero vector for the zero cone or a pure subspace).
    IntVec interior_point() const;

    Cone dual() const;
    Cone intersect(const Cone& other) const;

    /// The face of this cone cut out by all facets vanishing on `sub`;
    /// used for face tests.
    bool has_face(const Cone& sub) const;

    bool operator==(const Cone& o) const;
    bool operator!=(const Cone& o) const { return !(*this == o); }
    bool operator<(const Cone& o) const; // canonical order for dedup

    std::string to_string() const;

private:
    void build_from_rays(DDRays vrep, size_t rank);

    size_t rank_ = 0;
    std::vector<IntVec> rays_;
    std::vector<IntVec> lineality_;
    std::vector<IntVec> facets_;
    std::vector<IntVec> span_equations_;
};

} // namespace quotfan
