#include "quotfan/quadric_maps.hpp"

#include "quotfan/linalg.hpp"

#include <algorithm>
#include <set>

namespace quotfan {

IntMatrix quadric_transition(size_t n, size_t i) {
    if (n < 2 || i < 2 || i > n) throw Error("quadric_transition: need 2 <= i <= n");
    IntMatrix m = IntMatrix::identity(n);
    for (size_t j = 0; j < n; ++j) m.at(i - 1, j) = -1;
    return m;
}

IntMatrix quadric_transition_antipodal(size_t n) { return IntMatrix::identity(n); }

IntMatrix quadric_transition_even(size_t n, size_t i) {
    if (n < 3 || i < 2 || i > n) throw Error("quadric_transition_even: need 2 <= i <= n");
    IntMatrix m = IntMatrix::identity(n - 1);
    for (size_t j = 0; j + 1 < n; ++j) m.at(i - 2, j) = -1;
    return m;
}

namespace {

IntVec canonical_form(IntVec v) {
    v = primitive(v);
    for (const auto& x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : v) y = -y;
            break;
        }
    }
    return v;
}

std::vector<IntVec> collect_boundary(size_t dim, const std::vector<IntMatrix>& transitions,
                                     const std::vector<size_t>& boundary_rows) {
    std::set<IntVec> forms;
    // Identity chart contributes its own boundary hyperplanes.
    for (size_t r : boundary_rows) {
        IntVec e(dim, Int(0));
        e[r] = 1;
        forms.insert(canonical_form(e));
    }
    for (const auto& t : transitions) {
        if (determinant(t) == 0) throw Error("quadric boundary: singular transition");
        for (size_t r : boundary_rows) forms.insert(canonical_form(t.row(r)));
    }
    return {forms.begin(), forms.end()};
}

} // namespace

std::vector<IntVec> quadric_boundary(size_t n) {
    if (n < 2) throw Error("quadric_boundary: need n >= 2");
    std::vector<IntMatrix> transitions;
    for (size_t i = 2; i <= n; ++i) transitions.push_back(quadric_transition(n, i));
    std::vector<size_t> brows;
    for (size_t r = 1; r < n; ++r) brows.push_back(r); // y_j = 0, j >= 2
    auto forms = collect_boundary(n, transitions, brows);
    // Expected set: y_1+...+y_n together with the coordinate forms y_2..y_n.
    std::set<IntVec> expected;
    expected.insert(IntVec(n, Int(1)));
    for (size_t r = 1; r < n; ++r) {
        IntVec e(n, Int(0));
        e[r] = 1;
        expected.insert(e);
    }
    if (std::set<IntVec>(forms.begin(), forms.end()) != expected)
        throw Error("quadric_boundary: unexpected boundary set");
    return forms;
}

std::vector<IntVec> quadric_boundary_even(size_t n) {
    if (n < 3) throw Error("quadric_boundary_even: need n >= 3");
    std::vector<IntMatrix> transitions;
    for (size_t i = 2; i <= n; ++i) transitions.push_back(quadric_transition_even(n, i));
    std::vector<size_t> brows;
    for (size_t r = 0; r + 1 < n; ++r) brows.push_back(r); // all coordinates y_2..y_n
    auto forms = collect_boundary(n - 1, transitions, brows);
    std::set<IntVec> expected;
    expected.insert(IntVec(n - 1, Int(1)));
    for (size_t r = 0; r + 1 < n; ++r) {
        IntVec e(n - 1, Int(0));
        e[r] = 1;
        expected.insert(e);
    }
    if (std::set<IntVec>(forms.begin(), forms.end()) != expected)
        throw Error("quadric_boundary_even: unexpected boundary set");
    return forms;
}

} // namespace quotfan
