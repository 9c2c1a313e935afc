#pragma once

#include <array>
#include <tuple>
#include <utility>
#include <vector>

#include "dualcore/quiver.hpp"
#include "dualcore/rmatrix.hpp"

namespace dualcore::sheaf {

// Pencil of d x d matrices x*B_x + y*B_y + z*B_z presenting a 1-dimensional
// sheaf on the plane. Chart membership is queryable, not an invariant.
struct Pencil {
    int d = 0;
    std::array<RMatrix, 3> triple;

    Pencil() = default;
    Pencil(int d_, std::array<RMatrix, 3> triple_);
    bool operator==(const Pencil&) const = default;
};

// (n, 2n) representation read as the resolution of a rank-n bundle; the three
// matrices are 2n x n and their 6n x n stack must have rank n.
struct BundleRep {
    int n = 0;
    std::array<RMatrix, 3> triple;

    BundleRep() = default;
    BundleRep(int n_, std::array<RMatrix, 3> triple_);
    bool operator==(const BundleRep&) const = default;
};

// Homogeneous polynomial in x, y, z; coefficients indexed by the fixed
// graded-lex monomial order (exponent triples descending, x^d first).
struct HomogPoly {
    int degree = 0;
    std::vector<Rational> coeffs;

    bool is_zero() const;
    Rational eval(const Rational& x, const Rational& y, const Rational& z) const;
    bool operator==(const HomogPoly&) const = default;
};

struct CohomProfile {
    long h0 = 0, h1 = 0, h2 = 0;
    bool operator==(const CohomProfile&) const = default;
};

// Exponent triples (i, j, k) with i + j + k = d, descending lex order.
std::vector<std::array<int, 3>> monomials(int degree);

quiver::Rep to_rep(const Pencil& w);
quiver::Rep to_rep(const BundleRep& v);
Pencil pencil_from_rep(const quiver::Rep& r);
BundleRep bundle_from_rep(const quiver::Rep& r);

// det(x*B_x + y*B_y + z*B_z), computed by exact interpolation on a fixed
// deterministic grid of (d+1)(d+2)/2 points.
HomogPoly support_curve(const Pencil& w);

// True iff support_curve(w) is not identically zero.
bool in_chart(const Pencil& w);

// Entrywise transpose of the three pencil matrices; an involution.
Pencil ddual(const Pencil& w);

// The distinguished (3,3) pencil [[y,-z,0],[-x,0,z],[0,x,-y]] whose determinant
// vanishes identically.
Pencil lambda3();

// Matrix of multiplication by a*x + b*y + c*z from degree-k forms to
// degree-(k+1) forms on the fixed monomial bases. Requires k >= 0.
// Convention used throughout: the induced map on the Serre-dual spaces in
// negative twists is the transpose of the multiplication matrix in the
// complementary degree.
RMatrix mult_matrix(const std::array<Rational, 3>& ell, int k);

// dim Hom(G, O) = 6n - rank of the 6n x 6n matrix of
// Phi |-> Phi o (x*A~_x + y*A~_y + z*A~_z) on H0(O(1))^{2n} -> H0(O(2))^n.
long hom_to_O(const BundleRep& v);

// Largest i with rank(C(V, Lambda3)) <= 3n - i; equals hom_to_O.
// Requires the underlying rep to be reflectable.
long strata_index(const BundleRep& v);

// (h0, h1, h2) of the presented sheaf twisted by k, from the twisted
// resolution; supported range -4 <= k <= 8. The Euler characteristic is
// cross-checked internally against 2n*chi(O(k-1)) - n*chi(O(k-2)).
CohomProfile coh_twist(const BundleRep& v, int k);

// (h0, h1) of the tensor with the sheaf presented by W; requires in_chart(W).
// h0 = h1 always (checked internally).
std::pair<long, long> h0_tensor(const BundleRep& v, const Pencil& w);

} // namespace dualcore::sheaf
