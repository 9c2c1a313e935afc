#include "dualcore/quiver.hpp"

#include <numeric>
#include <string>

#include "dualcore/errors.hpp"
#include "dualcore/rng.hpp"

namespace dualcore::quiver {

namespace {

std::size_t u(long x) { return static_cast<std::size_t>(x); }

RMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    RMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng.uniform_int(-bound, bound);
    return m;
}

} // namespace

Rep::Rep(int q_, DimVec dim_, std::vector<RMatrix> mats_)
    : q(q_), dim(dim_), mats(std::move(mats_)) {
    require(q >= 1, "Rep: arrow count must be positive");
    require(dim.a1 >= 0 && dim.a2 >= 0, "Rep: negative dimension");
    require(mats.size() == static_cast<std::size_t>(q), "Rep: expected q matrices");
    for (const auto& m : mats)
        require(m.rows() == u(dim.a2) && m.cols() == u(dim.a1),
                "Rep: matrix shape must be a2 x a1");
}

long euler_form(int q, const DimVec& alpha, const DimVec& beta) {
    return alpha.a1 * beta.a1 + alpha.a2 * beta.a2 - long(q) * alpha.a1 * beta.a2;
}

RMatrix hom_map(const Rep& v, const Rep& w) {
    require(v.q == w.q, "hom_map: arrow counts differ");
    const std::size_t v1 = u(v.dim.a1), v2 = u(v.dim.a2);
    const std::size_t w1 = u(w.dim.a1), w2 = u(w.dim.a2);
    const std::size_t q = static_cast<std::size_t>(v.q);
    // Domain: f1 (w1 x v1) then f2 (w2 x v2), both vectorized column-major.
    // Codomain per arrow: w2 x v1 matrices, column-major.
    RMatrix m(q * w2 * v1, w1 * v1 + w2 * v2);
    for (std::size_t a = 0; a < q; ++a) {
        const RMatrix& va = v.mats[a];
        const RMatrix& wa = w.mats[a];
        const std::size_t row0 = a * w2 * v1;
        // -(W_a f1): output (r, c) gets -W_a(r, i) from f1(i, c).
        for (std::size_t c = 0; c < v1; ++c)
            for (std::size_t r = 0; r < w2; ++r)
                for (std::size_t i = 0; i < w1; ++i)
                    m(row0 + c * w2 + r, c * w1 + i) = -wa(r, i);
        // +(f2 V_a): output (r, c) gets V_a(j, c) from f2(r, j).
        for (std::size_t c = 0; c < v1; ++c)
            for (std::size_t r = 0; r < w2; ++r)
                for (std::size_t j = 0; j < v2; ++j)
                    m(row0 + c * w2 + r, w1 * v1 + j * w2 + r) = va(j, c);
    }
    return m;
}

std::pair<long, long> hom_ext(const Rep& v, const Rep& w) {
    const RMatrix m = hom_map(v, w);
    const long rk = static_cast<long>(la::rank(m));
    const long hom = static_cast<long>(m.cols()) - rk;
    const long ext = static_cast<long>(m.rows()) - rk;
    return {hom, ext};
}

Rational c_pair(const Rep& v, const Rep& w) {
    require(v.q == w.q, "c_pair: arrow counts differ");
    require(euler_form(v.q, v.dim, w.dim) == 0,
            "c_pair: dimension vectors are not orthogonal");
    const RMatrix m = hom_map(v, w);
    // Reorder the codomain basis from (arrow, column, row) to (column, arrow,
    // row): with the column index outermost, direct sums in V keep the matrix
    // block-triangular and the determinant exactly multiplicative.
    const std::size_t v1 = u(v.dim.a1), w2 = u(w.dim.a2);
    const std::size_t q = static_cast<std::size_t>(v.q);
    RMatrix p(m.rows(), m.cols());
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t c = 0; c < v1; ++c)
            for (std::size_t r = 0; r < w2; ++r)
                for (std::size_t col = 0; col < m.cols(); ++col)
                    p((c * q + a) * w2 + r, col) = m((a * v1 + c) * w2 + r, col);
    return la::det(p);
}

Rep reflect(const Rep& v) {
    const long m1 = v.dim.a1, m2 = v.dim.a2;
    const RMatrix stacked = RMatrix::vstack(v.mats); // (q*m2) x m1
    require(la::rank(stacked) == u(m1),
            "reflect: stacked matrix rank below m1 (not reflectable)");
    const RMatrix p = la::coker_projection(stacked); // (q*m2 - m1) x (q*m2)
    check_invariant((p * stacked).is_zero(), "reflect: projection does not annihilate");
    std::vector<RMatrix> mats;
    mats.reserve(static_cast<std::size_t>(v.q));
    for (int i = 0; i < v.q; ++i)
        mats.push_back(p.block(0, u(m2) * static_cast<std::size_t>(i), p.rows(), u(m2)));
    return Rep(v.q, DimVec{m2, long(v.q) * m2 - m1}, std::move(mats));
}

Rep reflect_inverse(const Rep& vbar) {
    const long b1 = vbar.dim.a1, b2 = vbar.dim.a2;
    const RMatrix t = RMatrix::hstack(vbar.mats); // b2 x (q*b1)
    require(la::rank(t) == u(b2),
            "reflect_inverse: concatenated matrix not of full row rank (not semistable)");
    RMatrix k = la::kernel_basis(t); // (q*b1) x (q*b1 - b2)
    if (k.cols() > 0) {
        // Pin the kernel-basis scale: relative to the canonical complement
        // (the row space of t), force the basis change to have determinant 1.
        const Rational lambda =
            la::det(RMatrix::hstack({t.transpose(), k})) / la::det(k.transpose() * k);
        check_invariant(lambda != 0, "reflect_inverse: degenerate normalization");
        for (std::size_t i = 0; i < k.rows(); ++i) k(i, 0) *= lambda;
    }
    std::vector<RMatrix> mats;
    mats.reserve(static_cast<std::size_t>(vbar.q));
    for (int i = 0; i < vbar.q; ++i)
        mats.push_back(k.block(u(b1) * static_cast<std::size_t>(i), 0, u(b1), k.cols()));
    return Rep(vbar.q, DimVec{long(vbar.q) * b1 - b2, b1}, std::move(mats));
}

RMatrix C_matrix(const Rep& v, const Rep& w) {
    require(v.q == 3 && w.q == 3, "C_matrix: both representations must have q = 3");
    require(v.dim.a2 == 2 * v.dim.a1, "C_matrix: V must have dimension (r, 2r)");
    require(w.dim.a1 == w.dim.a2, "C_matrix: W must have dimension (d, d)");
    const Rep a = reflect_inverse(v); // dimension (r, r)
    RMatrix c = la::star(w.mats[0].transpose(), a.mats[0]);
    c = c + la::star(w.mats[1].transpose(), a.mats[1]);
    c = c + la::star(w.mats[2].transpose(), a.mats[2]);
    return c;
}

std::pair<Rational, Rational> c_pair_kron(const Rep& v, const Rep& w) {
    const Rational compact = la::det(C_matrix(v, w));
    const std::size_t r = u(v.dim.a1);
    const std::size_t d = u(w.dim.a1);
    const RMatrix ir = RMatrix::identity(r);
    const RMatrix id = RMatrix::identity(d);
    std::vector<RMatrix> block_rows;
    block_rows.reserve(3);
    for (int s = 0; s < 3; ++s) {
        block_rows.push_back(RMatrix::hstack(
            {la::star(w.mats[static_cast<std::size_t>(s)], ir),
             -la::star(id, v.mats[static_cast<std::size_t>(s)].transpose())}));
    }
    const Rational big = la::det(RMatrix::vstack(block_rows));
    check_invariant(boost::multiprecision::abs(big) == boost::multiprecision::abs(compact),
                    "c_pair_kron: |big| != |compact|");
    return {big, compact};
}

Rep direct_sum(const Rep& v, const Rep& w) {
    require(v.q == w.q, "direct_sum: arrow counts differ");
    const DimVec dim{v.dim.a1 + w.dim.a1, v.dim.a2 + w.dim.a2};
    std::vector<RMatrix> mats;
    mats.reserve(static_cast<std::size_t>(v.q));
    for (int a = 0; a < v.q; ++a) {
        RMatrix m(u(dim.a2), u(dim.a1));
        const RMatrix& va = v.mats[static_cast<std::size_t>(a)];
        const RMatrix& wa = w.mats[static_cast<std::size_t>(a)];
        for (std::size_t i = 0; i < va.rows(); ++i)
            for (std::size_t j = 0; j < va.cols(); ++j) m(i, j) = va(i, j);
        for (std::size_t i = 0; i < wa.rows(); ++i)
            for (std::size_t j = 0; j < wa.cols(); ++j)
                m(va.rows() + i, va.cols() + j) = wa(i, j);
        mats.push_back(std::move(m));
    }
    return Rep(v.q, dim, std::move(mats));
}

Rep random_rep(int q, const DimVec& alpha, std::uint64_t seed, long bound) {
    require(bound >= 1, "random_rep: bound must be >= 1");
    Rng rng(seed);
    std::vector<RMatrix> mats;
    mats.reserve(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a)
        mats.push_back(random_matrix(rng, u(alpha.a2), u(alpha.a1), bound));
    return Rep(q, alpha, std::move(mats));
}

Rep group_act(const Rep& v, const RMatrix& g1, const RMatrix& g2) {
    require(g1.is_square() && g1.rows() == u(v.dim.a1), "group_act: g1 shape mismatch");
    require(g2.is_square() && g2.rows() == u(v.dim.a2), "group_act: g2 shape mismatch");
    const RMatrix g2inv = la::inverse(g2);
    std::vector<RMatrix> mats;
    mats.reserve(v.mats.size());
    for (const auto& m : v.mats) mats.push_back(g2inv * m * g1);
    return Rep(v.q, v.dim, std::move(mats));
}

namespace {

// dim of the head space generated by the tail subspace U1.
long generated_head_dim(const Rep& v, const RMatrix& u1) {
    std::vector<RMatrix> images;
    images.reserve(v.mats.size());
    for (const auto& m : v.mats) images.push_back(m * u1);
    return static_cast<long>(la::rank(RMatrix::hstack(images)));
}

std::optional<Destabilizer> verify_candidate(const Rep& v, const Weight& sigma,
                                             const RMatrix& u1) {
    const long k = static_cast<long>(la::rank(u1));
    if (k != static_cast<long>(u1.cols())) return std::nullopt; // not a basis
    const long b = generated_head_dim(v, u1);
    const DimVec d{k, b};
    if (sigma(d) > 0) return Destabilizer{u1, d};
    return std::nullopt;
}

} // namespace

std::optional<Destabilizer> destabilize_search(const Rep& v, const Weight& sigma,
                                               int effort, std::uint64_t seed) {
    const long a1 = v.dim.a1, a2 = v.dim.a2;
    // Head-only subrepresentations (0, U2) exist for any U2.
    if (sigma.w2 > 0 && a2 > 0) {
        return Destabilizer{RMatrix(u(a1), 0), DimVec{0, 1}};
    }
    if (a1 == 0) return std::nullopt;

    // Exhaustive coordinate subspaces for small a1.
    if (a1 <= 4) {
        for (unsigned mask = 1; mask < (1u << a1); ++mask) {
            std::vector<std::size_t> idx;
            for (long i = 0; i < a1; ++i)
                if (mask & (1u << i)) idx.push_back(u(i));
            RMatrix u1(u(a1), idx.size());
            for (std::size_t c = 0; c < idx.size(); ++c) u1(idx[c], c) = 1;
            if (auto w = verify_candidate(v, sigma, u1)) return w;
        }
    }

    // Seeded random tail subspaces.
    Rng rng(seed);
    for (int t = 0; t < effort; ++t) {
        const long k = rng.uniform_int(1, a1);
        const RMatrix u1 = random_matrix(rng, u(a1), u(k), 2);
        if (static_cast<long>(la::rank(u1)) != k) continue;
        if (auto w = verify_candidate(v, sigma, u1)) return w;
    }
    return std::nullopt;
}

StabilityVerdict semistable_certificate(const Rep& v, const Weight& sigma,
                                        int trials, int probe_sizes,
                                        std::uint64_t seed, long bound) {
    require(sigma(v.dim) == 0, "semistable_certificate: sigma(dim V) != 0");
    StabilityVerdict verdict;

    if (v.dim.a1 == 0 && v.dim.a2 == 0) {
        verdict.status = Status::Semistable;
        return verdict;
    }
    if (sigma.w1 == 0 && sigma.w2 == 0) {
        // Every subrepresentation has weight 0 <= 0.
        verdict.status = Status::Semistable;
        return verdict;
    }

    // Immediate instability via a head subspace.
    if (sigma.w2 > 0 && v.dim.a2 > 0) {
        verdict.status = Status::Unstable;
        verdict.destabilizer = Destabilizer{RMatrix(u(v.dim.a1), 0), DimVec{0, 1}};
        return verdict;
    }

    // Probe dimension vector: primitive nonnegative beta with <dim V, beta> = 0
    // and weight -<., beta> a positive multiple of sigma. Exists when s2 <= 0
    // and s1 + q*s2 <= 0.
    const long q = v.q;
    std::optional<DimVec> beta0;
    if (sigma.w2 <= 0 && sigma.w1 + q * sigma.w2 <= 0) {
        long b1 = -(sigma.w1 + q * sigma.w2);
        long b2 = -sigma.w2;
        const long g = std::gcd(b1, b2);
        if (g > 0) beta0 = DimVec{b1 / g, b2 / g};
    }

    Rng rng(seed);
    if (beta0) {
        for (int size = 1; size <= probe_sizes; ++size) {
            const DimVec beta{beta0->a1 * size, beta0->a2 * size};
            for (int t = 0; t < trials; ++t) {
                const Rep w = random_rep(v.q, beta, rng.next_u64(), bound);
                if (c_pair(v, w) != 0) {
                    verdict.probe = w;
                    // Semistable for sure; stable when no proper nonzero
                    // sub-dimension-vector can have weight exactly zero.
                    bool zero_wall = false;
                    for (long u1 = 0; u1 <= v.dim.a1 && !zero_wall; ++u1)
                        for (long u2 = 0; u2 <= v.dim.a2; ++u2) {
                            const bool trivial = (u1 == 0 && u2 == 0) ||
                                                 (u1 == v.dim.a1 && u2 == v.dim.a2);
                            if (!trivial && sigma(DimVec{u1, u2}) == 0) {
                                zero_wall = true;
                                break;
                            }
                        }
                    verdict.status = zero_wall ? Status::Semistable : Status::Stable;
                    return verdict;
                }
            }
        }
    }

    if (auto w = destabilize_search(v, sigma, trials, rng.next_u64())) {
        verdict.status = Status::Unstable;
        verdict.destabilizer = w;
        return verdict;
    }
    verdict.status = Status::Unknown;
    return verdict;
}

} // namespace dualcore::quiver
