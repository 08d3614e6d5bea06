#pragma once

#include "quotfan/matrix.hpp"

#include <optional>
#include <utility>

namespace quotfan {

struct HnfResult {
    IntMatrix h; // U*a == h
    IntMatrix u; // unimodular
};

/// Row-style Hermite normal form: h = u*a with u unimodular, h in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into [0, pivot). Zero rows sink to the bottom. The nonzero rows are the
/// canonical basis of the row lattice of a.
HnfResult hermite_normal_form(const IntMatrix& a);

/// Nonzero rows of the HNF, i.e. the canonical basis of the row lattice.
IntMatrix row_lattice_basis(const IntMatrix& a);

size_t rank(const IntMatrix& a);

/// Basis of the saturated lattice {x integral : a*x = 0}, one row per basis
/// vector, canonicalized by HNF. Shape (cols - rank) x cols.
IntMatrix integer_kernel(const IntMatrix& a);

/// Invariant factors d_1 | d_2 | ... of the Smith normal form (nonzero ones).
std::vector<Int> smith_invariant_factors(IntMatrix a);

/// Determinant (square matrices), Bareiss-style exact elimination.
Int determinant(const IntMatrix& a);

/// True iff the matrix is square with determinant +-1.
bool is_unimodular(const IntMatrix& a);

/// Unimodular matrix whose first row is the given primitive vector.
/// Throws if v is not primitive.
IntMatrix unimodular_extension(const IntVec& v);

/// Given a saturated lattice basis b (k x d, k <= d), returns a d x d
/// unimodular matrix whose first k rows are exactly b.
IntMatrix unimodular_completion(const IntMatrix& b);

/// Exact inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Solve a*x = b over the rationals; nullopt if inconsistent. When the
/// solution is not unique, returns the one with free variables set to zero
/// (deterministic pivot choice).
std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b);

/// Rank of a rational row set (used by polyhedral incidence tests).
size_t rank_of_rows(const std::vector<IntVec>& rows);

} // namespace quotfan
