#include "dualcore/rmatrix.hpp"

#include <algorithm>
#include <utility>

#include "dualcore/errors.hpp"

namespace dualcore {

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        require(row.size() == cols_, "RMatrix: ragged initializer");
        for (const auto& x : row) e_.push_back(x);
    }
}

RMatrix RMatrix::identity(std::size_t n) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x == 0; });
}

RMatrix RMatrix::transpose() const {
    RMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
    require(cols_ == o.rows_, "matrix product: inner dimensions differ");
    RMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
        }
    return p;
}

RMatrix RMatrix::operator+(const RMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: shape mismatch");
    RMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
    return s;
}

RMatrix RMatrix::operator-(const RMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference: shape mismatch");
    RMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
    return s;
}

RMatrix RMatrix::operator-() const { return scaled(Rational(-1)); }

RMatrix RMatrix::scaled(const Rational& c) const {
    RMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] * c;
    return s;
}

RMatrix RMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    RMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

RMatrix RMatrix::hstack(const std::vector<RMatrix>& parts) {
    require(!parts.empty(), "hstack: no parts");
    const std::size_t r = parts.front().rows();
    std::size_t c = 0;
    for (const auto& p : parts) {
        require(p.rows() == r, "hstack: row count mismatch");
        c += p.cols();
    }
    RMatrix m(r, c);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) m(i, off + j) = p(i, j);
        off += p.cols();
    }
    return m;
}

RMatrix RMatrix::vstack(const std::vector<RMatrix>& parts) {
    require(!parts.empty(), "vstack: no parts");
    const std::size_t c = parts.front().cols();
    std::size_t r = 0;
    for (const auto& p : parts) {
        require(p.cols() == c, "vstack: column count mismatch");
        r += p.rows();
    }
    RMatrix m(r, c);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < c; ++j) m(off + i, j) = p(i, j);
        off += p.rows();
    }
    return m;
}

void RMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(e_[a * cols_ + j], e_[b * cols_ + j]);
}

void RMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap(e_[i * cols_ + a], e_[i * cols_ + b]);
}

} // namespace dualcore
