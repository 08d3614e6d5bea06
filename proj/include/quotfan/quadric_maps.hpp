#pragma once

#include "quotfan/matrix.hpp"

namespace quotfan {

/// Transition between the quotients of the first chart and chart i of an
/// odd quadric, as an invertible linear involution of P^{n-1} in the
/// coordinates (y_1 : ... : y_n): the i-th coordinate is replaced by
/// -(y_1 + ... + y_n). Requires 2 <= i <= n.
IntMatrix quadric_transition(size_t n, size_t i);

/// Transition to the antipodal chart: the identity.
IntMatrix quadric_transition_antipodal(size_t n);

/// Even-quadric variant on P^{n-2} in the coordinates (y_2 : ... : y_n).
IntMatrix quadric_transition_even(size_t n, size_t i);

/// Boundary hyperplane forms of the odd-quadric quotient: the pullbacks of
/// the chart boundary {y_j = 0, j >= 2} under all transitions plus the
/// identity chart. Verifies the set equals {y_1+...+y_n, y_2, ..., y_n}.
std::vector<IntVec> quadric_boundary(size_t n);

/// Even variant: {y_2+...+y_n, y_2, ..., y_n} on P^{n-2}.
std::vector<IntVec> quadric_boundary_even(size_t n);

} // namespace quotfan
