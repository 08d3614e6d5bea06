#include "quotfan/linalg.hpp"

#include <algorithm>

namespace quotfan {

namespace {

// Row operations used by the HNF loop, mirrored on the transform matrix.
void swap_rows(IntMatrix& m, size_t a, size_t b) {
    if (a == b) return;
    IntVec ra = m.row(a), rb = m.row(b);
    m.set_row(a, rb);
    m.set_row(b, ra);
}

void negate_row(IntMatrix& m, size_t a) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

// row_a -= q * row_b
void addmul_row(IntMatrix& m, size_t a, size_t b, Int q) {
    if (q == 0) return;
    for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

// Floor division, used to keep HNF reductions canonical.
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

} // namespace

HnfResult hermite_normal_form(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    size_t cur = 0;
    for (size_t col = 0; col < a.cols() && cur < a.rows(); ++col) {
        // Euclid over the entries of this column at or below `cur`.
        while (true) {
            size_t piv = cur;
            bool found = false;
            for (size_t i = cur; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (!found || abs(h.at(i, col)) < abs(h.at(piv, col))) {
                    piv = i;
                    found = true;
                }
            }
            if (!found) break;
            swap_rows(h, cur, piv);
            swap_rows(u, cur, piv);
            bool cleared = true;
            for (size_t i = cur + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = h.at(i, col) / h.at(cur, col);
                addmul_row(h, i, cur, q);
                addmul_row(u, i, cur, q);
                if (h.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(cur, col) == 0) continue;
        if (h.at(cur, col) < 0) {
            negate_row(h, cur);
            negate_row(u, cur);
        }
        for (size_t i = 0; i < cur; ++i) {
            Int q = fdiv(h.at(i, col), h.at(cur, col));
            addmul_row(h, i, cur, q);
            addmul_row(u, i, cur, q);
        }
        ++cur;
    }
    return {h, u};
}

IntMatrix row_lattice_basis(const IntMatrix& a) {
    IntMatrix h = hermite_normal_form(a).h;
    std::vector<IntVec> rows;
    for (size_t i = 0; i < h.rows(); ++i) {
        IntVec r = h.row(i);
        if (!is_zero(r)) rows.push_back(r);
    }
    return IntMatrix::from_rows(rows, a.cols());
}

size_t rank(const IntMatrix& a) { return row_lattice_basis(a).rows(); }

IntMatrix integer_kernel(const IntMatrix& a) {
    // V * a^T = H; the rows of V across zero rows of H span {x : a x = 0},
    // and they do so saturated because V is unimodular.
    HnfResult r = hermite_normal_form(a.transpose());
    std::vector<IntVec> ker;
    for (size_t i = 0; i < r.h.rows(); ++i)
        if (is_zero(r.h.row(i))) ker.push_back(r.u.row(i));
    IntMatrix k = IntMatrix::from_rows(ker, a.cols());
    return row_lattice_basis(k);
}

std::vector<Int> smith_invariant_factors(IntMatrix a) {
    std::vector<Int> factors;
    size_t top = 0;
    while (top < a.rows() && top < a.cols()) {
        // Find a nonzero pivot in the remaining block.
        size_t pi = top, pj = top;
        bool found = false;
        for (size_t i = top; i < a.rows(); ++i)
            for (size_t j = top; j < a.cols(); ++j)
                if (a.at(i, j) != 0 &&
                    (!found || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(a, top, pi);
        // Column swap.
        if (pj != top)
            for (size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, top), a.at(i, pj));
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = top + 1; i < a.rows(); ++i) {
                if (a.at(i, top) == 0) continue;
                Int q = a.at(i, top) / a.at(top, top);
                addmul_row(a, i, top, q);
                if (a.at(i, top) != 0) { // remainder smaller, swap up
                    swap_rows(a, top, i);
                    dirty = true;
                }
            }
            for (size_t j = top + 1; j < a.cols(); ++j) {
                if (a.at(top, j) == 0) continue;
                Int q = a.at(top, j) / a.at(top, top);
                for (size_t i = 0; i < a.rows(); ++i) a.at(i, j) -= q * a.at(i, top);
                if (a.at(top, j) != 0) {
                    for (size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, top), a.at(i, j));
                    dirty = true;
                }
            }
        }
        // Divisibility sweep: pivot must divide every remaining entry.
        bool redo = false;
        for (size_t i = top + 1; i < a.rows() && !redo; ++i)
            for (size_t j = top + 1; j < a.cols() && !redo; ++j)
                if (a.at(i, j) % a.at(top, top) != 0) {
                    addmul_row(a, top, i, Int(-1));
                    redo = true;
                }
        if (redo) continue;
        factors.push_back(abs(a.at(top, top)));
        ++top;
    }
    return factors;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw Error("determinant: matrix not square");
    size_t n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix m = a;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t swap = k + 1;
            while (swap < n && m.at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            swap_rows(m, k, swap);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) return false;
    Int d = determinant(a);
    return d == 1 || d == -1;
}

namespace {

// Column-operation engine shared by unimodular_extension/completion.
// Reduces b (k x d, saturated basis rows) to [I_k | 0] by column ops while
// accumulating the inverse transform, whose rows then extend b to a basis.
IntMatrix completion_impl(const IntMatrix& b) {
    size_t k = b.rows(), d = b.cols();
    if (k > d) throw Error("unimodular_completion: more rows than columns");
    IntMatrix w = b;
    IntMatrix inv = IntMatrix::identity(d); // accumulates C^{-1}

    auto col_swap = [&](size_t x, size_t y) {
        if (x == y) return;
        for (size_t i = 0; i < k; ++i) std::swap(w.at(i, x), w.at(i, y));
        swap_rows(inv, x, y);
    };
    auto col_negate = [&](size_t x) {
        for (size_t i = 0; i < k; ++i) w.at(i, x) = -w.at(i, x);
        negate_row(inv, x);
    };
    // col_y -= q * col_x  (inverse transform: row_x += q * row_y)
    auto col_addmul = [&](size_t y, size_t x, Int q) {
        if (q == 0) return;
        for (size_t i = 0; i < k; ++i) w.at(i, y) -= q * w.at(i, x);
        addmul_row(inv, x, y, -q);
    };

    for (size_t i = 0; i < k; ++i) {
        while (true) {
            size_t piv = i;
            bool found = false;
            for (size_t j = i; j < d; ++j) {
                if (w.at(i, j) == 0) continue;
                if (!found || abs(w.at(i, j)) < abs(w.at(i, piv))) {
                    piv = j;
                    found = true;
                }
            }
            if (!found) throw Error("unimodular_completion: rows not independent");
            col_swap(i, piv);
            bool cleared = true;
            for (size_t j = i + 1; j < d; ++j) {
                if (w.at(i, j) == 0) continue;
                col_addmul(j, i, w.at(i, j) / w.at(i, i));
                if (w.at(i, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (w.at(i, i) < 0) col_negate(i);
        if (w.at(i, i) != 1) throw Error("unimodular_completion: basis not saturated");
        for (size_t j = 0; j < i; ++j) col_addmul(j, i, w.at(i, j));
    }
    return inv;
}

} // namespace

IntMatrix unimodular_completion(const IntMatrix& b) {
    IntMatrix ext = completion_impl(b);
    for (size_t i = 0; i < b.rows(); ++i)
        if (ext.row(i) != b.row(i)) throw Error("unimodular_completion: internal mismatch");
    return ext;
}

IntMatrix unimodular_extension(const IntVec& v) {
    if (is_zero(v)) throw Error("unimodular_extension: zero vector");
    if (content(v) != 1) throw Error("unimodular_extension: vector not primitive");
    return unimodular_completion(IntMatrix::from_rows({v}, v.size()));
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (!is_unimodular(a)) throw Error("unimodular_inverse: matrix not unimodular");
    size_t n = a.rows();
    // Rational Gauss-Jordan; the result is integral because |det| = 1.
    std::vector<RatVec> m(n, RatVec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
        m[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (m[piv][col] == 0) ++piv;
        std::swap(m[col], m[piv]);
        Rat p = m[col][col];
        for (auto& x : m[col]) x /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    IntMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (den(m[i][n + j]) != 1) throw Error("unimodular_inverse: non-integral entry");
            inv.at(i, j) = num(m[i][n + j]);
        }
    return inv;
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b) {
    if (a.rows() != b.size()) throw Error("solve_rational: shape mismatch");
    size_t nr = a.rows(), nc = a.cols();
    std::vector<RatVec> m(nr, RatVec(nc + 1, Rat(0)));
    for (size_t i = 0; i < nr; ++i) {
        for (size_t j = 0; j < nc; ++j) m[i][j] = Rat(a.at(i, j));
        m[i][nc] = b[i];
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < nc && row < nr; ++col) {
        size_t piv = row;
        while (piv < nr && m[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[row], m[piv]);
        Rat p = m[row][col];
        for (auto& x : m[row]) x /= p;
        for (size_t i = 0; i < nr; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j <= nc; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < nr; ++i)
        if (m[i][nc] != 0) return std::nullopt;
    RatVec x(nc, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][nc];
    return x;
}

size_t rank_of_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return 0;
    return rank(IntMatrix::from_rows(rows, rows[0].size()));
}

} // namespace quotfan
