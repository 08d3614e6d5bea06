#pragma once

#include "quotfan/polynomial.hpp"

namespace quotfan {

/// Map between products of projective spaces: per target factor, a tuple of
/// multi-homogeneous polynomials in the flattened source coordinates.
/// Components are kept cleared: no common polynomial factor within a target
/// factor, integral coprime coefficients, first nonzero component with
/// positive leading coefficient.
class MultiProjectiveMap {
public:
    MultiProjectiveMap(std::vector<size_t> source_dims, std::vector<size_t> target_dims,
                       std::vector<std::vector<Polynomial>> components);

    static MultiProjectiveMap identity(const std::vector<size_t>& dims);

    const std::vector<size_t>& source_dims() const { return source_dims_; }
    const std::vector<size_t>& target_dims() const { return target_dims_; }
    const std::vector<std::vector<Polynomial>>& components() const { return components_; }
    size_t source_var_count() const;

    bool operator==(const MultiProjectiveMap& o) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void normalize();
    std::vector<size_t> source_dims_, target_dims_;
    std::vector<std::vector<Polynomial>> components_;
};

/// f after g (target signature of g = source signature of f).
MultiProjectiveMap compose(const MultiProjectiveMap& f, const MultiProjectiveMap& g);

/// Equality as rational maps: componentwise proportionality per factor,
/// checked by vanishing of the 2x2 minors.
bool maps_equal(const MultiProjectiveMap& a, const MultiProjectiveMap& b);

/// Canonical representative of a projective point: primitive integer
/// vector, first nonzero coordinate positive.
RatVec normalize_projective_point(const RatVec& v);

/// Exact image of a tuple of projective points; throws "indeterminate" on
/// the base locus.
std::vector<RatVec> apply_point(const MultiProjectiveMap& f, const std::vector<RatVec>& pts);

/// Number of loci {z_u = z_v = 0}, with u, v coordinates of one source
/// factor (and the locus nonempty in that factor), on which all components
/// of some target factor vanish. These are the pullbacks of codimension-two
/// coordinate subspaces of a single factor. Supported for maps with
/// monomial or linear components.
size_t base_locus_components(const MultiProjectiveMap& f);

} // namespace quotfan
