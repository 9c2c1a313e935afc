#include "dualcore/exactla.hpp"

#include <limits>
#include <utility>
#include <vector>

#include "dualcore/errors.hpp"

namespace dualcore::la {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::msb;

// Integer copy of m with denominators cleared row by row; `scale` collects the
// product of the row multipliers (the integer determinant must be divided by it).
std::vector<std::vector<Int>> clear_denominators(const RMatrix& m, Int* scale) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    if (scale) *scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, den(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = num(m(i, j)) * (l / den(m(i, j)));
        if (scale) *scale *= l;
    }
    return a;
}

std::size_t bit_size(const Int& x) {
    return x == 0 ? 0 : static_cast<std::size_t>(msb(abs(x))) + 1;
}

// Fraction-free elimination with full pivoting; pivot = nonzero entry of
// smallest bit size (ties broken by position, so the run is deterministic).
// Returns the rank; when `detp` is non-null the matrix must be square and the
// signed last pivot (i.e. the determinant of the integer matrix) is stored,
// 0 if singular.
std::size_t bareiss(std::vector<std::vector<Int>> a, Int* detp) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    int sign = 1;
    Int prev = 1;
    std::size_t k = 0;
    const std::size_t steps = std::min(rows, cols);
    for (; k < steps; ++k) {
        std::size_t pi = rows, pj = cols;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                const std::size_t b = bit_size(a[i][j]);
                if (b < best) {
                    best = b;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break; // remaining block is zero
        if (pi != k) {
            std::swap(a[pi], a[k]);
            sign = -sign;
        }
        if (pj != k) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][k]);
            sign = -sign;
        }
        const Int pivot = a[k][k];
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = pivot;
    }
    if (detp) {
        check_invariant(rows == cols, "bareiss: determinant of non-square matrix");
        *detp = (rows == 0) ? Int(1) : (k == rows ? Int(sign) * a[rows - 1][rows - 1] : Int(0));
    }
    return k;
}

} // namespace

Rational det(const RMatrix& m) {
    require(m.is_square(), "det: matrix is not square");
    Int scale;
    auto a = clear_denominators(m, &scale);
    Int d;
    bareiss(std::move(a), &d);
    return Rational(d, scale);
}

std::size_t rank(const RMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(clear_denominators(m, nullptr), nullptr);
}

RMatrix rref(const RMatrix& m, std::vector<std::size_t>* pivot_cols) {
    RMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        // Any pivot choice yields the same (unique) RREF; pick the entry with
        // the smallest combined bit size to keep intermediates small.
        std::size_t pr = a.rows();
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = row; i < a.rows(); ++i) {
            if (a(i, col) == 0) continue;
            const std::size_t b = bit_size(num(a(i, col))) + bit_size(den(a(i, col)));
            if (b < best) {
                best = b;
                pr = i;
            }
        }
        if (pr == a.rows()) continue;
        a.swap_rows(row, pr);
        const Rational inv = Rational(1) / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    if (pivot_cols) *pivot_cols = pivots;
    return a.block(0, 0, row, a.cols());
}

RMatrix kernel_basis(const RMatrix& m) {
    std::vector<std::size_t> pivots;
    const RMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RMatrix k(m.cols(), free_cols.size());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        const std::size_t f = free_cols[fi];
        k(f, fi) = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) k(pivots[p], fi) = -r(p, f);
    }
    return k;
}

RMatrix coker_projection(const RMatrix& m) {
    const RMatrix left = kernel_basis(m.transpose()); // rows(m) x (rows - rank)
    if (left.cols() == 0) return RMatrix(0, m.rows());
    return rref(left.transpose());
}

RMatrix solve(const RMatrix& a, const RMatrix& b) {
    require(a.is_square(), "solve: coefficient matrix is not square");
    require(a.rows() == b.rows(), "solve: right-hand side shape mismatch");
    const RMatrix aug = RMatrix::hstack({a, b});
    std::vector<std::size_t> pivots;
    const RMatrix r = rref(aug, &pivots);
    require(pivots.size() == a.cols() &&
                (pivots.empty() || pivots.back() == a.cols() - 1),
            "solve: singular coefficient matrix");
    return r.block(0, a.cols(), a.rows(), b.cols());
}

RMatrix inverse(const RMatrix& m) {
    return solve(m, RMatrix::identity(m.rows()));
}

RMatrix star(const RMatrix& g, const RMatrix& o) {
    RMatrix s(g.rows() * o.rows(), g.cols() * o.cols());
    for (std::size_t bs = 0; bs < o.rows(); ++bs)
        for (std::size_t bt = 0; bt < o.cols(); ++bt) {
            const Rational& w = o(bs, bt);
            if (w == 0) continue;
            for (std::size_t i = 0; i < g.rows(); ++i)
                for (std::size_t j = 0; j < g.cols(); ++j)
                    s(bs * g.rows() + i, bt * g.cols() + j) = w * g(i, j);
        }
    return s;
}

RMatrix eval_pencil(const std::array<RMatrix, 3>& triple,
                    const std::array<Rational, 3>& point) {
    require(triple[0].rows() == triple[1].rows() && triple[1].rows() == triple[2].rows() &&
                triple[0].cols() == triple[1].cols() && triple[1].cols() == triple[2].cols(),
            "eval_pencil: matrices have different shapes");
    return triple[0].scaled(point[0]) + triple[1].scaled(point[1]) +
           triple[2].scaled(point[2]);
}

} // namespace dualcore::la
