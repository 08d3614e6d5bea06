#pragma once

#include "quotfan/rational.hpp"

#include <cstddef>
#include <initializer_list>

namespace quotfan {

/// Dense matrix with arbitrary-precision integer entries, row-major.
/// Values are immutable in spirit: all algorithms return fresh matrices.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, size_t cols);
    static IntMatrix from_cols(const std::vector<IntVec>& cols, size_t rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    IntVec row(size_t i) const;
    IntVec col(size_t j) const;
    void set_row(size_t i, const IntVec& v);

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& other) const;
    IntVec mul(const IntVec& v) const;
    RatVec mul(const RatVec& v) const;

    /// Appends the rows of other (same column count).
    IntMatrix stack(const IntMatrix& other) const;

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    std::string to_string() const;

private:
    size_t rows_, cols_;
    std::vector<Int> data_;
};

/// Kronecker product, row index (i1,i2) -> i1*b.rows()+i2, same for columns.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

} // namespace quotfan
