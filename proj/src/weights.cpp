#include "quotfan/weights.hpp"

namespace quotfan {

WeightSystem::WeightSystem(IntMatrix w, std::vector<std::string> labels)
    : w_(std::move(w)), labels_(std::move(labels)) {
    if (w_.rows() > w_.cols() || rank(w_) != w_.rows())
        throw Error("weight matrix not of full rank");
    if (labels_.empty())
        for (size_t i = 0; i < w_.cols(); ++i) labels_.push_back("x" + std::to_string(i + 1));
    if (labels_.size() != w_.cols()) throw Error("WeightSystem: label count mismatch");
}

WeightSystem::WeightSystem(IntMatrix w) : WeightSystem(std::move(w), {}) {}

GaleProjection transposed_gale_dual(const IntMatrix& w) {
    if (w.rows() > w.cols() || rank(w) != w.rows())
        throw Error("weight matrix not of full rank");
    return GaleProjection{integer_kernel(w)};
}

GaleProjection transposed_gale_dual(const WeightSystem& ws) {
    return GaleProjection{integer_kernel(ws.matrix())};
}

FullyDefiniteResult is_fully_definite(const WeightSystem& ws) {
    const IntMatrix& w = ws.matrix();
    const size_t r = w.rows(), n = w.cols();
    for (size_t j = 0; j < n; ++j)
        if (is_zero(w.col(j))) return {};

    // Pointedness of the weight cone: its dual must be full-dimensional,
    // i.e. there is a covector strictly positive on every weight.
    std::vector<IntVec> cols;
    for (size_t j = 0; j < n; ++j) cols.push_back(w.col(j));
    Cone dual = Cone::from_inequalities(cols, {}, r);
    if (dual.dim() != r) return {};
    IntVec c = dual.interior_point();
    for (size_t j = 0; j < n; ++j)
        if (dot(c, w.col(j)) <= 0) throw Error("is_fully_definite: internal certificate failure");

    // Extend the interior covector to a basis and shear the other rows in.
    IntMatrix u = unimodular_extension(primitive(c));
    IntMatrix uw = u.mul(w);
    for (size_t i = 1; i < r; ++i) {
        Int lambda = 0;
        for (size_t j = 0; j < n; ++j) {
            if (uw.at(i, j) >= 0) continue;
            // ceil(-uw(i,j) / uw(0,j)) with uw(0,j) > 0
            Int need = (-uw.at(i, j) + uw.at(0, j) - 1) / uw.at(0, j);
            if (need > lambda) lambda = need;
        }
        if (lambda > 0) {
            for (size_t j = 0; j < u.cols(); ++j) u.at(i, j) += lambda * u.at(0, j);
            for (size_t j = 0; j < n; ++j) uw.at(i, j) += lambda * uw.at(0, j);
        }
    }
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j)
            if (uw.at(i, j) < 0) throw Error("is_fully_definite: shear failed");
    return {true, u};
}

} // namespace quotfan
