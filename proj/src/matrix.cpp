#include "quotfan/matrix.hpp"

#include <sstream>

namespace quotfan {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
        for (auto x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("IntMatrix: row length mismatch");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVec>& cols, size_t rows) {
    IntMatrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error("IntMatrix: column length mismatch");
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMatrix::row(size_t i) const {
    IntVec v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

IntVec IntMatrix::col(size_t j) const {
    IntVec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void IntMatrix::set_row(size_t i, const IntVec& v) {
    for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw Error("IntMatrix::mul: shape mismatch");
    IntMatrix r(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < other.cols_; ++j) r.at(i, j) += a * other.at(k, j);
        }
    return r;
}

IntVec IntMatrix::mul(const IntVec& v) const {
    if (cols_ != v.size()) throw Error("IntMatrix::mul: vector length mismatch");
    IntVec r(rows_, Int(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

RatVec IntMatrix::mul(const RatVec& v) const {
    if (cols_ != v.size()) throw Error("IntMatrix::mul: vector length mismatch");
    RatVec r(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r[i] += Rat(at(i, j)) * v[j];
    return r;
}

IntMatrix IntMatrix::stack(const IntMatrix& other) const {
    if (cols_ != other.cols_ && other.rows_ != 0) throw Error("IntMatrix::stack: column mismatch");
    IntMatrix r(rows_ + other.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t i = 0; i < other.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = other.at(i, j);
    return r;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i1 = 0; i1 < a.rows(); ++i1)
        for (size_t j1 = 0; j1 < a.cols(); ++j1) {
            if (a.at(i1, j1) == 0) continue;
            for (size_t i2 = 0; i2 < b.rows(); ++i2)
                for (size_t j2 = 0; j2 < b.cols(); ++j2)
                    r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = a.at(i1, j1) * b.at(i2, j2);
        }
    return r;
}

} // namespace quotfan
