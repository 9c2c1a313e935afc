#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dualcore/rmatrix.hpp"

namespace dualcore::la {

// Exact determinant via fraction-free (Bareiss) elimination with full pivoting;
// pivot selection by smallest bit size to limit coefficient growth.
Rational det(const RMatrix& m);

// Exact rank via the same fraction-free elimination.
std::size_t rank(const RMatrix& m);

// Reduced row echelon form with zero rows dropped (canonical, hence
// deterministic regardless of pivot strategy). Optionally reports pivot columns.
RMatrix rref(const RMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

// Columns form the canonical basis (from RREF) of { v : Mv = 0 }.
RMatrix kernel_basis(const RMatrix& m);

// (rows-rank) x rows matrix P of full row rank with P*M = 0; rows are the
// canonical RREF basis of the left kernel.
RMatrix coker_projection(const RMatrix& m);

// Inverse of a nonsingular square matrix. Throws contract_error if singular.
RMatrix inverse(const RMatrix& m);

// Solve A*X = B for square nonsingular A.
RMatrix solve(const RMatrix& a, const RMatrix& b);

// Block matrix whose (s,t) block is O(s,t) * G; shape (m*k) x (n*l).
RMatrix star(const RMatrix& g, const RMatrix& o);

// x*M1 + y*M2 + z*M3 for equally shaped matrices.
RMatrix eval_pencil(const std::array<RMatrix, 3>& triple,
                    const std::array<Rational, 3>& point);

} // namespace dualcore::la
