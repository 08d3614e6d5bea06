#pragma once

#include "quotfan/fan.hpp"

namespace quotfan {

/// Inequality <coeffs, x> >= offset (or equation <coeffs, x> = offset).
struct AffineForm {
    IntVec coeffs;
    Int offset;
    bool operator==(const AffineForm& o) const {
        return coeffs == o.coeffs && offset == o.offset;
    }
    bool operator<(const AffineForm& o) const {
        if (coeffs != o.coeffs) return coeffs < o.coeffs;
        return offset < o.offset;
    }
};

/// Exact rational polytope (possibly unbounded polyhedron) in H-representation
/// with the V-representation computed on demand via homogenization.
class Polytope {
public:
    Polytope() = default;
    static Polytope from_h_rep(std::vector<AffineForm> ineqs, std::vector<AffineForm> eqs,
                               size_t rank);
    /// Convex hull of rational points plus recession generators.
    static Polytope from_points(const std::vector<RatVec>& points,
                                const std::vector<IntVec>& recession_rays, size_t rank);

    size_t rank() const { return rank_; }
    const std::vector<AffineForm>& inequalities() const { return ineqs_; }
    const std::vector<AffineForm>& equations() const { return eqs_; }

    const std::vector<RatVec>& vertices() const;
    const std::vector<IntVec>& recession_rays() const;
    bool bounded() const;
    bool empty() const;
    size_t dim() const; // dimension of the affine span; 0 for a point

    /// Canonical irredundant H-representation recovered from the vertices
    /// (facet inequalities primitive, equations in HNF form).
    Polytope canonicalized() const;

    /// All lattice points; throws when the enumeration exceeds `cap` steps
    /// or the polytope is unbounded.
    std::vector<IntVec> lattice_points(size_t cap = 10000000) const;

    bool contains(const RatVec& x) const;

    std::string to_string() const;

private:
    void compute() const;

    size_t rank_ = 0;
    std::vector<AffineForm> ineqs_, eqs_;
    mutable bool computed_ = false;
    mutable std::vector<RatVec> vertices_;
    mutable std::vector<IntVec> recession_rays_;
    mutable std::vector<IntVec> recession_lineality_;
};

/// Inner normal fan of a bounded polytope, taken in the dual of the
/// canonical saturated lattice basis of its affine span's direction space.
Fan normal_fan(const Polytope& p);

/// Inner normal fan with the direction space coordinatized by the given
/// saturated basis rows (the polytope must be full-dimensional in that
/// basis's span). Used when the quotient lattice is fixed externally.
Fan normal_fan_in_basis(const Polytope& p, const IntMatrix& basis_rows);

/// Exact Minkowski sum via V-representations.
Polytope minkowski_sum(const std::vector<Polytope>& ps);

} // namespace quotfan
