#include "dualcore/sheafbridge.hpp"

#include <map>
#include <string>

#include "dualcore/errors.hpp"
#include "dualcore/exactla.hpp"

namespace dualcore::sheaf {

namespace {

std::size_t u(long x) { return static_cast<std::size_t>(x); }

long forms_dim(int k) { return k < 0 ? 0 : long(k + 1) * (k + 2) / 2; }

// Euler characteristic of the line bundle O(m) on the plane, any twist.
long chi_line(int m) { return long(m + 1) * (m + 2) / 2; }

} // namespace

Pencil::Pencil(int d_, std::array<RMatrix, 3> triple_) : d(d_), triple(std::move(triple_)) {
    require(d >= 1, "Pencil: d must be positive");
    for (const auto& m : triple)
        require(m.rows() == u(d) && m.cols() == u(d), "Pencil: matrices must be d x d");
}

BundleRep::BundleRep(int n_, std::array<RMatrix, 3> triple_)
    : n(n_), triple(std::move(triple_)) {
    require(n >= 1, "BundleRep: n must be positive");
    for (const auto& m : triple)
        require(m.rows() == u(2L * n) && m.cols() == u(n),
                "BundleRep: matrices must be 2n x n");
    const RMatrix stacked = RMatrix::vstack({triple[0], triple[1], triple[2]});
    require(la::rank(stacked) == u(n),
            "BundleRep: stacked 6n x n matrix must have rank n");
}

bool HomogPoly::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

Rational HomogPoly::eval(const Rational& x, const Rational& y, const Rational& z) const {
    const auto mons = monomials(degree);
    check_invariant(mons.size() == coeffs.size(), "HomogPoly: coefficient count mismatch");
    Rational acc(0);
    for (std::size_t m = 0; m < mons.size(); ++m) {
        if (coeffs[m] == 0) continue;
        Rational term = coeffs[m];
        for (int i = 0; i < mons[m][0]; ++i) term *= x;
        for (int i = 0; i < mons[m][1]; ++i) term *= y;
        for (int i = 0; i < mons[m][2]; ++i) term *= z;
        acc += term;
    }
    return acc;
}

std::vector<std::array<int, 3>> monomials(int degree) {
    require(degree >= 0, "monomials: negative degree");
    std::vector<std::array<int, 3>> out;
    out.reserve(static_cast<std::size_t>(forms_dim(degree)));
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
    return out;
}

quiver::Rep to_rep(const Pencil& w) {
    return quiver::Rep(3, quiver::DimVec{w.d, w.d},
                       {w.triple[0], w.triple[1], w.triple[2]});
}

quiver::Rep to_rep(const BundleRep& v) {
    return quiver::Rep(3, quiver::DimVec{v.n, 2L * v.n},
                       {v.triple[0], v.triple[1], v.triple[2]});
}

Pencil pencil_from_rep(const quiver::Rep& r) {
    require(r.q == 3, "pencil_from_rep: q must be 3");
    require(r.dim.a1 == r.dim.a2 && r.dim.a1 >= 1,
            "pencil_from_rep: dimension must be (d, d)");
    return Pencil(static_cast<int>(r.dim.a1), {r.mats[0], r.mats[1], r.mats[2]});
}

BundleRep bundle_from_rep(const quiver::Rep& r) {
    require(r.q == 3, "bundle_from_rep: q must be 3");
    require(r.dim.a2 == 2 * r.dim.a1 && r.dim.a1 >= 1,
            "bundle_from_rep: dimension must be (n, 2n)");
    return BundleRep(static_cast<int>(r.dim.a1), {r.mats[0], r.mats[1], r.mats[2]});
}

HomogPoly support_curve(const Pencil& w) {
    const int d = w.d;
    const auto mons = monomials(d);
    const std::size_t count = mons.size(); // (d+1)(d+2)/2
    // Deterministic poised grid: {(i,j,1) : i+j <= d-1}, {(i,1,0) : i < d}, (1,0,0).
    std::vector<std::array<Rational, 3>> pts;
    pts.reserve(count);
    for (int i = 0; i <= d - 1; ++i)
        for (int j = 0; i + j <= d - 1; ++j)
            pts.push_back({Rational(i), Rational(j), Rational(1)});
    for (int i = 0; i <= d - 1; ++i) pts.push_back({Rational(i), Rational(1), Rational(0)});
    pts.push_back({Rational(1), Rational(0), Rational(0)});
    check_invariant(pts.size() == count, "support_curve: grid size mismatch");

    RMatrix vand(count, count);
    RMatrix rhs(count, 1);
    for (std::size_t p = 0; p < count; ++p) {
        for (std::size_t m = 0; m < count; ++m) {
            Rational t(1);
            for (int e = 0; e < mons[m][0]; ++e) t *= pts[p][0];
            for (int e = 0; e < mons[m][1]; ++e) t *= pts[p][1];
            for (int e = 0; e < mons[m][2]; ++e) t *= pts[p][2];
            vand(p, m) = t;
        }
        rhs(p, 0) = la::det(la::eval_pencil(w.triple, pts[p]));
    }
    const RMatrix sol = la::solve(vand, rhs);
    HomogPoly poly;
    poly.degree = d;
    poly.coeffs.reserve(count);
    for (std::size_t m = 0; m < count; ++m) poly.coeffs.push_back(sol(m, 0));
    return poly;
}

bool in_chart(const Pencil& w) { return !support_curve(w).is_zero(); }

Pencil ddual(const Pencil& w) {
    return Pencil(w.d, {w.triple[0].transpose(), w.triple[1].transpose(),
                        w.triple[2].transpose()});
}

Pencil lambda3() {
    // Coefficient matrices of the pencil [[y,-z,0],[-x,0,z],[0,x,-y]].
    const RMatrix bx{{0, 0, 0}, {-1, 0, 0}, {0, 1, 0}};
    const RMatrix by{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}};
    const RMatrix bz{{0, -1, 0}, {0, 0, 1}, {0, 0, 0}};
    return Pencil(3, {bx, by, bz});
}

RMatrix mult_matrix(const std::array<Rational, 3>& ell, int k) {
    require(k >= 0, "mult_matrix: twist out of range (k must be >= 0)");
    const auto src = monomials(k);
    const auto dst = monomials(k + 1);
    std::map<std::array<int, 3>, std::size_t> index;
    for (std::size_t m = 0; m < dst.size(); ++m) index[dst[m]] = m;
    RMatrix out(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const auto& e = src[j];
        out(index.at({e[0] + 1, e[1], e[2]}), j) += ell[0];
        out(index.at({e[0], e[1] + 1, e[2]}), j) += ell[1];
        out(index.at({e[0], e[1], e[2] + 1}), j) += ell[2];
    }
    return out;
}

namespace {

// The H0 map of the resolution twisted so the source sits in degree k:
// H0(O(k))^n -> H0(O(k+1))^{2n}, block (i, j) = multiplication by the linear
// form (A~x[i][j], A~y[i][j], A~z[i][j]).
RMatrix resolution_h0_map(const BundleRep& v, int k) {
    const std::size_t n = u(v.n);
    const std::size_t sdim = u(forms_dim(k));
    const std::size_t ddim = u(forms_dim(k + 1));
    RMatrix m(2 * n * ddim, n * sdim);
    if (sdim == 0) return m;
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::array<Rational, 3> ell{v.triple[0](i, j), v.triple[1](i, j),
                                              v.triple[2](i, j)};
            const RMatrix blk = mult_matrix(ell, k);
            for (std::size_t r = 0; r < ddim; ++r)
                for (std::size_t c = 0; c < sdim; ++c)
                    m(i * ddim + r, j * sdim + c) = blk(r, c);
        }
    return m;
}

// The corresponding map on the H2 side: O(k)^n -> O(k+1)^{2n} in twists k <= -3
// (so both H2 spaces can be nonzero). By the fixed Serre-duality convention the
// block action of a linear form is the transpose of its multiplication matrix
// in the complementary degree: H2(O(k)) -> H2(O(k+1)) is mult(ell, -4-k)^T,
// of shape forms_dim(-3-(k+1)) ... forms_dim(-3-k) columns.
RMatrix resolution_h2_map(const BundleRep& v, int k) {
    const std::size_t n = u(v.n);
    const std::size_t sdim = u(forms_dim(-3 - k));
    const std::size_t ddim = u(forms_dim(-4 - k));
    RMatrix m(2 * n * ddim, n * sdim);
    if (sdim == 0 || ddim == 0) return m;
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::array<Rational, 3> ell{v.triple[0](i, j), v.triple[1](i, j),
                                              v.triple[2](i, j)};
            const RMatrix blk = mult_matrix(ell, -4 - k).transpose(); // ddim x sdim
            for (std::size_t r = 0; r < ddim; ++r)
                for (std::size_t c = 0; c < sdim; ++c)
                    m(i * ddim + r, j * sdim + c) = blk(r, c);
        }
    return m;
}

} // namespace

long hom_to_O(const BundleRep& v) {
    // Phi |-> Phi o pencil as a 6n x 6n matrix: rows indexed by the degree-2
    // monomial blocks of the n target components, columns by the x/y/z
    // coefficient blocks of the 2n linear-form components.
    const std::size_t n = u(v.n);
    const RMatrix ax = v.triple[0].transpose(); // n x 2n
    const RMatrix ay = v.triple[1].transpose();
    const RMatrix az = v.triple[2].transpose();
    const RMatrix zero(n, 2 * n);
    const RMatrix m = RMatrix::vstack({
        RMatrix::hstack({ax, zero, zero}),   // x^2
        RMatrix::hstack({ay, ax, zero}),     // xy
        RMatrix::hstack({az, zero, ax}),     // xz
        RMatrix::hstack({zero, ay, zero}),   // y^2
        RMatrix::hstack({zero, az, ay}),     // yz
        RMatrix::hstack({zero, zero, az}),   // z^2
    });
    return 6L * v.n - static_cast<long>(la::rank(m));
}

long strata_index(const BundleRep& v) {
    const RMatrix c = quiver::C_matrix(to_rep(v), to_rep(lambda3()));
    return 3L * v.n - static_cast<long>(la::rank(c));
}

CohomProfile coh_twist(const BundleRep& v, int k) {
    require(k >= -4 && k <= 8, "coh_twist: twist out of supported range [-4, 8]");
    const long n = v.n;
    const RMatrix m0 = resolution_h0_map(v, k - 2);
    const long rank0 = static_cast<long>(la::rank(m0));
    const RMatrix m2 = resolution_h2_map(v, k - 2);
    const long rank2 = static_cast<long>(la::rank(m2));

    CohomProfile p;
    p.h0 = 2 * n * forms_dim(k - 1) - rank0;
    p.h1 = n * forms_dim(-1 - k) - rank2;       // ker of the H2 map
    p.h2 = 2 * n * forms_dim(-2 - k) - rank2;   // coker of the H2 map
    const long chi = 2 * n * chi_line(k - 1) - n * chi_line(k - 2);
    check_invariant(p.h0 - p.h1 + p.h2 == chi,
                    "coh_twist: Euler characteristic mismatch");
    check_invariant(p.h0 >= 0 && p.h1 >= 0 && p.h2 >= 0,
                    "coh_twist: negative cohomology dimension");
    return p;
}

std::pair<long, long> h0_tensor(const BundleRep& v, const Pencil& w) {
    require(in_chart(w), "h0_tensor: pencil is not in the chart (support curve vanishes)");
    const std::size_t n = u(v.n);
    const std::size_t d = u(w.d);

    // H1(G(-2)) as ker of the H2 map H2(O(-4))^n -> H2(O(-3))^{2n}.
    const RMatrix phi2 = resolution_h2_map(v, -4); // (2n) x (3n)
    const RMatrix ker = la::kernel_basis(phi2);    // 3n x k
    const std::size_t kdim = ker.cols();

    // Coordinate slices: row 3j+s of ker is the x/y/z component of the j-th
    // block; the pencil acts through them on H1(G(-2))^d -> H1(G(-1))^d with
    // H1(G(-1)) identified with H2(O(-3))^n = C^n.
    std::array<RMatrix, 3> slice{RMatrix(n, kdim), RMatrix(n, kdim), RMatrix(n, kdim)};
    for (std::size_t j = 0; j < n; ++j)
        for (int s = 0; s < 3; ++s)
            for (std::size_t c = 0; c < kdim; ++c)
                slice[static_cast<std::size_t>(s)](j, c) = ker(3 * j + u(s), c);

    RMatrix t = la::star(slice[0], w.triple[0]);
    t = t + la::star(slice[1], w.triple[1]);
    t = t + la::star(slice[2], w.triple[2]); // (n d) x (k d)
    const long rank_t = static_cast<long>(la::rank(t));
    const long rank_phi2 = static_cast<long>(la::rank(phi2));

    const long h0 = static_cast<long>(kdim * d) - rank_t;
    const long h1 = (static_cast<long>(n * d) - rank_t) +
                    static_cast<long>(d) * (static_cast<long>(2 * n) - rank_phi2);
    check_invariant(h0 == h1, "h0_tensor: h0 != h1 (orthogonality violated)");
    return {h0, h1};
}

} // namespace dualcore::sheaf
