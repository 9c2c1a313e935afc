#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualcore/errors.hpp"
#include "dualcore/exactla.hpp"
#include "dualcore/quiver.hpp"
#include "dualcore/rng.hpp"

using namespace dualcore;
using quiver::DimVec;
using quiver::Rep;
using quiver::Weight;

namespace {

Rep scalar_triple(long x, long y, long z) {
    return Rep(3, DimVec{1, 1},
               {RMatrix{{Rational(x)}}, RMatrix{{Rational(y)}}, RMatrix{{Rational(z)}}});
}

} // namespace

TEST_CASE("euler_form") {
    CHECK(quiver::euler_form(3, DimVec{2, 4}, DimVec{5, 5}) == 0); // (r,2r) vs (d,d)
    CHECK(quiver::euler_form(3, DimVec{1, 0}, DimVec{0, 1}) == -3);
    CHECK(quiver::euler_form(7, DimVec{0, 0}, DimVec{4, 9}) == 0);
}

TEST_CASE("hom_ext") {
    const Rep simple1(3, DimVec{1, 0}, {RMatrix(0, 1), RMatrix(0, 1), RMatrix(0, 1)});
    const Rep simple2(3, DimVec{0, 1}, {RMatrix(1, 0), RMatrix(1, 0), RMatrix(1, 0)});
    CHECK(quiver::hom_ext(simple1, simple1) == std::pair<long, long>{1, 0});
    CHECK(quiver::hom_ext(simple1, simple2) == std::pair<long, long>{0, 3});

    // Orthogonal dimension vectors force hom = ext.
    Rng rng(3);
    for (int it = 0; it < 10; ++it) {
        const Rep v = quiver::random_rep(3, DimVec{1, 2}, rng.next_u64(), 3);
        const Rep w = quiver::random_rep(3, DimVec{1, 1}, rng.next_u64(), 3);
        const auto [hom, ext] = quiver::hom_ext(v, w);
        CHECK(hom == ext);
    }
}

TEST_CASE("hom - ext equals the Euler form") {
    Rng rng(5);
    for (int it = 0; it < 30; ++it) {
        const int q = static_cast<int>(rng.uniform_int(1, 4));
        const DimVec a{rng.uniform_int(0, 3), rng.uniform_int(0, 3)};
        const DimVec b{rng.uniform_int(0, 3), rng.uniform_int(0, 3)};
        const Rep v = quiver::random_rep(q, a, rng.next_u64(), 3);
        const Rep w = quiver::random_rep(q, b, rng.next_u64(), 3);
        const auto [hom, ext] = quiver::hom_ext(v, w);
        CHECK(hom - ext == quiver::euler_form(q, a, b));
    }
}

TEST_CASE("c_pair") {
    const Rep empty(3, DimVec{0, 0}, {RMatrix(0, 0), RMatrix(0, 0), RMatrix(0, 0)});
    CHECK(quiver::c_pair(empty, empty) == 1);

    // Incidence determinant: point [a1 : a2 : a3] against line (b1, b2, b3).
    const Rep point = quiver::reflect(scalar_triple(2, -1, 3)); // dim (1, 2)
    const Rep on_line = scalar_triple(1, 2, 0);   // 2*1 + (-1)*2 + 3*0 = 0
    const Rep off_line = scalar_triple(1, 1, 1);  // 2 - 1 + 3 = 4
    CHECK(quiver::c_pair(point, on_line) == 0);
    CHECK(quiver::c_pair(point, off_line) != 0);

    // Multiplicativity over direct sums in V.
    Rng rng(17);
    const Rep v1 = quiver::random_rep(3, DimVec{1, 2}, rng.next_u64(), 3);
    const Rep v2 = quiver::random_rep(3, DimVec{1, 2}, rng.next_u64(), 3);
    const Rep w = quiver::random_rep(3, DimVec{1, 1}, rng.next_u64(), 3);
    CHECK(quiver::c_pair(quiver::direct_sum(v1, v2), w) ==
          quiver::c_pair(v1, w) * quiver::c_pair(v2, w));
    // And in W.
    const Rep v = quiver::random_rep(3, DimVec{1, 2}, rng.next_u64(), 3);
    const Rep w1 = quiver::random_rep(3, DimVec{1, 1}, rng.next_u64(), 3);
    const Rep w2 = quiver::random_rep(3, DimVec{1, 1}, rng.next_u64(), 3);
    CHECK(quiver::c_pair(v, quiver::direct_sum(w1, w2)) ==
          quiver::c_pair(v, w1) * quiver::c_pair(v, w2));

    CHECK_THROWS_AS(quiver::c_pair(point, point), contract_error);
}

TEST_CASE("reflect") {
    const Rep v = quiver::reflect(scalar_triple(1, 0, 0));
    CHECK(v.dim == DimVec{1, 2});
    CHECK(v.mats[0] == RMatrix(2, 1)); // (0, 0)^T
    CHECK(v.mats[1] == RMatrix{{1}, {0}});
    CHECK(v.mats[2] == RMatrix{{0}, {1}});

    CHECK_THROWS_AS(quiver::reflect(scalar_triple(0, 0, 0)), contract_error);

    // Empty-kernel case (0, m2): canonical inclusions.
    const Rep zero_tail(3, DimVec{0, 2}, {RMatrix(2, 0), RMatrix(2, 0), RMatrix(2, 0)});
    const Rep r = quiver::reflect(zero_tail);
    CHECK(r.dim == DimVec{2, 6});
    for (int i = 0; i < 3; ++i)
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                CHECK(r.mats[static_cast<std::size_t>(i)](a, b) ==
                      (a == static_cast<std::size_t>(i) * 2 + b ? 1 : 0));
}

TEST_CASE("reflect_inverse") {
    // Inverse of the first reflect example recovers scalars prop. to (1, 0, 0).
    const Rep v = quiver::reflect(scalar_triple(1, 0, 0));
    const Rep back = quiver::reflect_inverse(v);
    CHECK(back.dim == DimVec{1, 1});
    CHECK(back.mats[0](0, 0) != 0);
    CHECK(back.mats[1](0, 0) == 0);
    CHECK(back.mats[2](0, 0) == 0);

    // Canonical inclusion rep inverts to the zero-tail rep.
    const Rep zero_tail(3, DimVec{0, 2}, {RMatrix(2, 0), RMatrix(2, 0), RMatrix(2, 0)});
    const Rep inv = quiver::reflect_inverse(quiver::reflect(zero_tail));
    CHECK(inv.dim == DimVec{0, 2});

    // Roundtrip on random semistable (2, 2) reps: the stacked matrices of the
    // input and output span the same column space (residual exactly zero).
    Rng rng(23);
    for (int it = 0; it < 10; ++it) {
        const Rep w = quiver::random_rep(3, DimVec{2, 2}, rng.next_u64(), 3);
        if (la::rank(RMatrix::vstack(w.mats)) != 2) continue;
        const Rep round = quiver::reflect_inverse(quiver::reflect(w));
        CHECK(round.dim == w.dim);
        const RMatrix joint =
            RMatrix::hstack({RMatrix::vstack(round.mats), RMatrix::vstack(w.mats)});
        CHECK(la::rank(joint) == 2);
    }

    const Rep bad(3, DimVec{1, 2},
                  {RMatrix(2, 1), RMatrix(2, 1), RMatrix(2, 1)}); // all zero
    CHECK_THROWS_AS(quiver::reflect_inverse(bad), contract_error);
}

TEST_CASE("C_matrix") {
    Rng rng(29);
    // d = 1: C is a scalar combination of the inverse-reflection matrices.
    const Rep v = quiver::random_rep(3, DimVec{2, 4}, rng.next_u64(), 3);
    const Rep a = quiver::reflect_inverse(v);
    const Rep w = scalar_triple(5, -2, 7);
    const RMatrix expected = a.mats[0].scaled(5) + a.mats[1].scaled(-2) + a.mats[2].scaled(7);
    CHECK(quiver::C_matrix(v, w) == expected);

    // r = 1 against the singular (3, 3) pencil: rank exactly 2.
    const RMatrix bx{{0, 0, 0}, {-1, 0, 0}, {0, 1, 0}};
    const RMatrix by{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}};
    const RMatrix bz{{0, -1, 0}, {0, 0, 1}, {0, 0, 0}};
    const Rep lam(3, DimVec{3, 3}, {bx, by, bz});
    const Rep point = quiver::reflect(scalar_triple(2, 3, -1));
    CHECK(la::rank(quiver::C_matrix(point, lam)) == 2);

    CHECK_THROWS_AS(quiver::C_matrix(v, v), contract_error);
}

TEST_CASE("c_pair_kron") {
    // Point vs line: both determinants vanish exactly on incidence.
    const Rep point = quiver::reflect(scalar_triple(1, -2, 1));
    const auto [big_on, compact_on] = quiver::c_pair_kron(point, scalar_triple(2, 1, 0));
    CHECK(big_on == 0);
    CHECK(compact_on == 0);
    const auto [big_off, compact_off] = quiver::c_pair_kron(point, scalar_triple(1, 1, 2));
    CHECK(compact_off != 0);
    using boost::multiprecision::abs;
    CHECK(abs(big_off) == abs(compact_off));

    // Block-diagonal V factors the compact determinant.
    Rng rng(31);
    for (int it = 0; it < 5; ++it) {
        const Rep a1 = quiver::random_rep(3, DimVec{1, 2}, rng.next_u64(), 2);
        const Rep a2 = quiver::random_rep(3, DimVec{1, 2}, rng.next_u64(), 2);
        const Rep w = quiver::random_rep(3, DimVec{2, 2}, rng.next_u64(), 2);
        Rational d1, d2, dsum;
        try {
            d1 = la::det(quiver::C_matrix(a1, w));
            d2 = la::det(quiver::C_matrix(a2, w));
            dsum = la::det(quiver::C_matrix(quiver::direct_sum(a1, a2), w));
        } catch (const contract_error&) {
            continue; // degenerate sample
        }
        CHECK(abs(dsum) == abs(d1 * d2));
    }
}

TEST_CASE("random_rep determinism and shape") {
    const Rep a = quiver::random_rep(3, DimVec{2, 3}, 99, 4);
    const Rep b = quiver::random_rep(3, DimVec{2, 3}, 99, 4);
    CHECK(a == b);
    CHECK(a.dim == DimVec{2, 3});
    CHECK(a.mats[0].rows() == 3);
    CHECK(a.mats[0].cols() == 2);
    // Generic (d, d) reps have nonzero pencil determinant almost always.
    int nonzero = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Rep w = quiver::random_rep(3, DimVec{2, 2}, s, 3);
        const RMatrix probe = w.mats[0].scaled(1) + w.mats[1].scaled(2) + w.mats[2].scaled(5);
        if (la::det(probe) != 0) ++nonzero;
    }
    CHECK(nonzero >= 90);
}

TEST_CASE("semistable_certificate") {
    const Weight sigma{1, -1};
    const auto good = quiver::semistable_certificate(scalar_triple(1, 2, 3), sigma,
                                                     8, 3, 123, 3);
    const bool good_ok = good.status == quiver::Status::Semistable ||
                         good.status == quiver::Status::Stable;
    CHECK(good_ok);
    CHECK(good.probe.has_value());

    const auto bad = quiver::semistable_certificate(scalar_triple(0, 0, 0), sigma,
                                                    8, 3, 123, 3);
    CHECK(bad.status == quiver::Status::Unstable);
    REQUIRE(bad.destabilizer.has_value());
    CHECK(sigma(bad.destabilizer->dim) > 0);

    const quiver::Rep empty(3, DimVec{0, 0}, {RMatrix(0, 0), RMatrix(0, 0), RMatrix(0, 0)});
    CHECK(quiver::semistable_certificate(empty, sigma, 1, 1, 0, 1).status ==
          quiver::Status::Semistable);

    CHECK_THROWS_AS(quiver::semistable_certificate(scalar_triple(1, 2, 3),
                                                   Weight{1, 1}, 1, 1, 0, 1),
                    contract_error);
}

TEST_CASE("destabilize_search") {
    const Weight sigma{1, -1};
    const quiver::Rep zero(3, DimVec{1, 1}, {RMatrix(1, 1), RMatrix(1, 1), RMatrix(1, 1)});
    const auto w = quiver::destabilize_search(zero, sigma, 10, 1);
    REQUIRE(w.has_value());
    CHECK(w->dim == DimVec{1, 0});

    // A common kernel vector gives a destabilizer.
    const RMatrix m{{1, 0}, {2, 0}};
    const quiver::Rep common(3, DimVec{2, 2}, {m, m, m});
    const auto w2 = quiver::destabilize_search(common, sigma, 10, 1);
    REQUIRE(w2.has_value());
    CHECK(sigma(w2->dim) > 0);

    // Generic (2, 2) reps admit no destabilizer and certify semistable.
    Rng rng(37);
    const quiver::Rep generic = quiver::random_rep(3, DimVec{2, 2}, rng.next_u64(), 3);
    CHECK(!quiver::destabilize_search(generic, sigma, 50, 2).has_value());
    const auto verdict = quiver::semistable_certificate(generic, sigma, 8, 3, 5, 3);
    const bool generic_ok = verdict.status == quiver::Status::Semistable ||
                            verdict.status == quiver::Status::Stable;
    CHECK(generic_ok);
}

TEST_CASE("reflection preserves certified semistability") {
    Rng rng(41);
    const Weight sigma{1, -1};
    for (int it = 0; it < 5; ++it) {
        const Rep v = quiver::random_rep(3, DimVec{1, 1}, rng.next_u64(), 3);
        if (v.mats[0].is_zero() && v.mats[1].is_zero() && v.mats[2].is_zero()) continue;
        const auto before = quiver::semistable_certificate(v, sigma, 8, 3, it, 3);
        if (before.status != quiver::Status::Semistable &&
            before.status != quiver::Status::Stable)
            continue;
        const Rep r = quiver::reflect(v); // dim (1, 2), sigma' = (2, -1) vanishes on it
        const auto after = quiver::semistable_certificate(r, Weight{2, -1}, 8, 3, it, 3);
        const bool after_ok = after.status == quiver::Status::Semistable ||
                              after.status == quiver::Status::Stable;
        CHECK(after_ok);
    }
}
