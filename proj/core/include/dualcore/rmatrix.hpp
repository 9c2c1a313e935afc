#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dualcore/rational.hpp"

namespace dualcore {

// Dense matrix of exact rationals, row-major. 0xN and Nx0 shapes are legal.
class RMatrix {
public:
    RMatrix() : rows_(0), cols_(0) {}
    RMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    RMatrix(std::initializer_list<std::initializer_list<Rational>> init);

    static RMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const RMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const RMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    RMatrix transpose() const;
    RMatrix operator*(const RMatrix& o) const; // throws contract_error on mismatch
    RMatrix operator+(const RMatrix& o) const;
    RMatrix operator-(const RMatrix& o) const;
    RMatrix operator-() const;
    RMatrix scaled(const Rational& c) const;

    // Copy of the sub-block [r0, r0+nr) x [c0, c0+nc).
    RMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    static RMatrix hstack(const std::vector<RMatrix>& parts);
    static RMatrix vstack(const std::vector<RMatrix>& parts);

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

} // namespace dualcore
