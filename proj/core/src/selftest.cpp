#include "dualcore/selftest.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualcore/document.hpp"
#include "dualcore/drezet.hpp"
#include "dualcore/dualitylab.hpp"
#include "dualcore/errors.hpp"
#include "dualcore/exactla.hpp"
#include "dualcore/quiver.hpp"
#include "dualcore/rng.hpp"
#include "dualcore/sheafbridge.hpp"

namespace dualcore::selftest {

namespace {

using quiver::DimVec;
using quiver::Rep;

RMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    RMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform_int(-bound, bound);
    return m;
}

RMatrix random_invertible(Rng& rng, std::size_t n, long bound) {
    for (;;) {
        RMatrix m = random_matrix(rng, n, n, bound);
        if (la::det(m) != 0) return m;
    }
}

Rep point_fixture(long x, long y, long z) {
    const Rep scalars(3, DimVec{1, 1},
                      {RMatrix{{Rational(x)}}, RMatrix{{Rational(y)}},
                       RMatrix{{Rational(z)}}});
    return quiver::reflect(scalars);
}

// --- criterion 1: star product laws ---------------------------------------
bool star_laws() {
    Rng rng(1001);
    for (int it = 0; it < 100; ++it) {
        // (1) star of inverses inverts the star.
        {
            const auto m = static_cast<std::size_t>(rng.uniform_int(1, 3));
            const auto k = static_cast<std::size_t>(rng.uniform_int(1, 3));
            const RMatrix g = random_invertible(rng, m, 3);
            const RMatrix o = random_invertible(rng, k, 3);
            if (la::star(g, o) * la::star(la::inverse(g), la::inverse(o)) !=
                RMatrix::identity(m * k))
                return false;
        }
        // (2) multiplicativity on conformable products.
        {
            const auto m = static_cast<std::size_t>(rng.uniform_int(1, 3));
            const auto n = static_cast<std::size_t>(rng.uniform_int(1, 3));
            const auto p = static_cast<std::size_t>(rng.uniform_int(1, 3));
            const auto k = static_cast<std::size_t>(rng.uniform_int(1, 3));
            const auto l = static_cast<std::size_t>(rng.uniform_int(1, 3));
            const auto t = static_cast<std::size_t>(rng.uniform_int(1, 3));
            const RMatrix g = random_matrix(rng, m, n, 3);
            const RMatrix d = random_matrix(rng, n, p, 3);
            const RMatrix o = random_matrix(rng, k, l, 3);
            const RMatrix lm = random_matrix(rng, l, t, 3);
            if (la::star(g * d, o * lm) != la::star(g, o) * la::star(d, lm)) return false;
        }
        // (3) determinant swap law with the exact sign exponent.
        {
            long m, n, k, l;
            do {
                m = rng.uniform_int(1, 3);
                n = rng.uniform_int(1, 3);
                k = rng.uniform_int(1, 3);
                l = rng.uniform_int(1, 3);
            } while (m * k != n * l);
            RMatrix lhs(static_cast<std::size_t>(m * k), static_cast<std::size_t>(n * l));
            RMatrix rhs(static_cast<std::size_t>(m * k), static_cast<std::size_t>(n * l));
            for (int i = 0; i < 3; ++i) {
                const RMatrix g = random_matrix(rng, static_cast<std::size_t>(m),
                                                static_cast<std::size_t>(n), 3);
                const RMatrix o = random_matrix(rng, static_cast<std::size_t>(k),
                                                static_cast<std::size_t>(l), 3);
                lhs = lhs + la::star(g, o);
                rhs = rhs + la::star(o, g);
            }
            const long e = m * k * ((m - 1) * (k - 1) + (n - 1) * (l - 1));
            if (e % 4 != 0) return false;
            const int sign = ((e / 4) % 2 == 0) ? 1 : -1;
            if (la::det(lhs) != sign * la::det(rhs)) return false;
        }
    }
    return true;
}

// --- criterion 2: big vs compact determinant ------------------------------
bool kron_determinants() {
    Rng rng(2002);
    for (int r = 1; r <= 3; ++r)
        for (int d = 1; d <= 3; ++d) {
            std::optional<Rational> fixed_ratio;
            for (int s = 0; s < 20; ++s) {
                const Rep v = lab::sample_reflectable(rng, r, 3, nullptr);
                const Rep w = quiver::random_rep(3, DimVec{d, d}, rng.next_u64(), 3);
                const auto [big, compact] = quiver::c_pair_kron(v, w);
                using boost::multiprecision::abs;
                if (abs(big) != abs(compact)) return false;
                if (compact != 0) {
                    const Rational ratio = big / compact;
                    if (!fixed_ratio)
                        fixed_ratio = ratio;
                    else if (*fixed_ratio != ratio)
                        return false;
                }
            }
        }
    return true;
}

// --- criterion 3: strata rank identity -------------------------------------
bool strata_identity() {
    const sheaf::Pencil lam = sheaf::lambda3();
    const Rep lam_rep = sheaf::to_rep(lam);
    Rng rng(3003);
    for (int n = 1; n <= 4; ++n) {
        std::vector<Rep> reps;
        for (int s = 0; s < 20; ++s) reps.push_back(lab::sample_reflectable(rng, n, 3, nullptr));
        // Point fixtures: direct sums of ideal-sheaf reps.
        Rep fixture = point_fixture(0, 0, 1);
        for (int i = 1; i < n; ++i) fixture = quiver::direct_sum(fixture, point_fixture(1, i, 1));
        reps.push_back(fixture);
        for (const auto& v : reps) {
            const sheaf::BundleRep bundle = sheaf::bundle_from_rep(v);
            const long hom = sheaf::hom_to_O(bundle);
            const long rk = static_cast<long>(la::rank(quiver::C_matrix(v, lam_rep)));
            if (hom + rk != 3L * n) return false;
        }
    }
    // The n = 1 point fixture must give exactly (hom, rank) = (1, 2).
    const Rep fix = point_fixture(0, 0, 1);
    const sheaf::BundleRep bundle = sheaf::bundle_from_rep(fix);
    if (sheaf::hom_to_O(bundle) != 1) return false;
    if (la::rank(quiver::C_matrix(fix, lam_rep)) != 2) return false;
    return true;
}

// --- criterion 4: vanishing oracle agreement --------------------------------
bool vanishing_oracle() {
    // Both branches of the point/line incidence fixture.
    {
        const Rep v = point_fixture(0, 0, 1);
        const sheaf::BundleRep bundle = sheaf::bundle_from_rep(v);
        const sheaf::Pencil on_line(1, {RMatrix{{1}}, RMatrix{{2}}, RMatrix{{0}}});
        const sheaf::Pencil off_line(1, {RMatrix{{1}}, RMatrix{{2}}, RMatrix{{3}}});
        const Rational det_on = la::det(quiver::C_matrix(v, sheaf::to_rep(on_line)));
        const Rational det_off = la::det(quiver::C_matrix(v, sheaf::to_rep(off_line)));
        const auto [h0_on, h1_on] = sheaf::h0_tensor(bundle, on_line);
        const auto [h0_off, h1_off] = sheaf::h0_tensor(bundle, off_line);
        if (det_on != 0 || h0_on != 1 || h1_on != 1) return false;
        if (det_off == 0 || h0_off != 0 || h1_off != 0) return false;
    }
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            lab::ExperimentConfig cfg;
            cfg.seed = 4004u + static_cast<std::uint64_t>(100 * n + d);
            cfg.n = n;
            cfg.d = d;
            cfg.samples_V = 10;
            cfg.samples_W = 5; // 50 pairs per (n, d)
            cfg.entry_bound = 2;
            const lab::PairingReport rep = lab::vanishing_oracle_experiment(cfg);
            if (rep.pairs_checked != 50 || rep.oracle_disagreements != 0) return false;
        }
    return true;
}

// --- criterion 5: reflection roundtrip --------------------------------------
bool fingerprints_match(const Rep& a, const Rep& b, const DimVec& beta, Rng& rng) {
    std::optional<Rational> scalar;
    int informative = 0;
    for (int k = 0; k < 5; ++k) {
        const Rep probe = quiver::random_rep(3, beta, rng.next_u64(), 3);
        const Rational ca = quiver::c_pair(a, probe);
        const Rational cb = quiver::c_pair(b, probe);
        if ((ca == 0) != (cb == 0)) return false;
        if (ca == 0) continue;
        ++informative;
        const Rational ratio = cb / ca;
        if (!scalar)
            scalar = ratio;
        else if (*scalar != ratio)
            return false;
    }
    return informative >= 1;
}

bool reflection_roundtrip() {
    Rng rng(5005);
    // (d, d) side: reflect then invert.
    for (int d = 1; d <= 4; ++d)
        for (int s = 0; s < 20; ++s) {
            Rep v = quiver::random_rep(3, DimVec{d, d}, rng.next_u64(), 3);
            if (la::rank(RMatrix::vstack(v.mats)) != static_cast<std::size_t>(d)) {
                --s;
                continue;
            }
            const Rep back = quiver::reflect_inverse(quiver::reflect(v));
            if (back.dim != v.dim) return false;
            const RMatrix joint =
                RMatrix::hstack({RMatrix::vstack(back.mats), RMatrix::vstack(v.mats)});
            if (la::rank(joint) != static_cast<std::size_t>(d)) return false;
            const long g = std::gcd(3L * d - d, static_cast<long>(d));
            const DimVec beta{(3L * d - d) / g, d / g};
            if (!fingerprints_match(v, back, beta, rng)) return false;
        }
    // (r, 2r) side: invert then reflect.
    for (int r = 1; r <= 4; ++r)
        for (int s = 0; s < 20; ++s) {
            const Rep vbar = lab::sample_reflectable(rng, r, 3, nullptr);
            if (la::rank(RMatrix::hstack(vbar.mats)) != static_cast<std::size_t>(2 * r)) {
                --s;
                continue;
            }
            const Rep back = quiver::reflect(quiver::reflect_inverse(vbar));
            if (back.dim != vbar.dim) return false;
            const RMatrix joint = RMatrix::vstack(
                {RMatrix::hstack(back.mats), RMatrix::hstack(vbar.mats)});
            if (la::rank(joint) != static_cast<std::size_t>(2 * r)) return false;
            const DimVec beta{1, 1}; // orthogonal to (r, 2r)
            if (!fingerprints_match(vbar, back, beta, rng)) return false;
        }
    return true;
}

// --- criterion 6: semi-invariance weight law ---------------------------------
bool semi_invariance() {
    Rng rng(6006);
    const std::vector<DimVec> alphas = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {1, 3},
                                        {2, 4}, {3, 3}, {2, 5}, {3, 4}, {2, 6}};
    const int q = 3;
    for (const auto& alpha : alphas) {
        // Primitive nonnegative beta orthogonal to alpha.
        const long b1 = q * alpha.a1 - alpha.a2;
        const long b2 = alpha.a1;
        const long g = std::gcd(b1, b2);
        const DimVec beta{b1 / g, b2 / g};
        if (quiver::euler_form(q, alpha, beta) != 0) return false;
        const Rep v = quiver::random_rep(q, alpha, rng.next_u64(), 3);
        const Rep w = quiver::random_rep(q, beta, rng.next_u64(), 3);
        const Rational base = quiver::c_pair(v, w);
        const long sigma1 = q * beta.a2 - beta.a1; // -<e1, beta>
        const long sigma2 = -beta.a2;              // -<e2, beta>
        for (int t = 0; t < 10; ++t) {
            const RMatrix g1 =
                random_invertible(rng, static_cast<std::size_t>(alpha.a1), 2);
            const RMatrix g2 =
                random_invertible(rng, static_cast<std::size_t>(alpha.a2), 2);
            const Rational scale = pow_rational(la::det(g1), sigma1) *
                                   pow_rational(la::det(g2), sigma2);
            if (quiver::c_pair(quiver::group_act(v, g1, g2), w) != scale * base)
                return false;
        }
    }
    return true;
}

// --- criterion 7: exceptional slope calculus --------------------------------
bool slope_calculus() {
    using namespace drezet;
    for (long r = 1; r <= 6; ++r)
        for (long n = 1; n <= 6; ++n) {
            const Rational h = height(r, 0, n);
            if (h != Rational(n - r)) return false;
            if ((h == 0) != (n == r)) return false;
            if (height_chi_crosscheck(r, 0, n) != h) return false;
        }
    if (delta(Rational(0)) != 1) return false;
    if (eps(Dyadic(1, 2)).slope != Rational(2, 5)) return false;
    const ExcSlope e38 = eps(Dyadic(3, 3));
    if (e38.slope != Rational(12, 29) || e38.rank != 29) return false;
    // Rank-product oracle on every dyadic node with exponent <= 6 in (0, 1).
    for (int q = 1; q <= 6; ++q)
        for (long long p = 1; p < (1LL << q); p += 2) {
            const long long m = (p - 1) / 2;
            const ExcSlope left = eps(Dyadic(m, q - 1));
            const ExcSlope right = eps(Dyadic(m + 1, q - 1));
            const ExcSlope node = eps(Dyadic(p, q));
            const Rational expected =
                Rational(left.rank) * Rational(right.rank) * (3 + left.slope - right.slope);
            if (Rational(node.rank) != expected) return false;
        }
    return true;
}

// --- criterion 8: coefficient-span plateaus ----------------------------------
bool span_plateaus() {
    for (int d = 1; d <= 3; ++d) {
        const int target = (d + 1) * (d + 2) / 2;
        if (lab::coeff_span_dim(d, target + 4, 8008u + static_cast<std::uint64_t>(d)) !=
            target)
            return false;
        // Plateau: more samples do not change the span.
        if (lab::coeff_span_dim(d, target + 9, 9008u + static_cast<std::uint64_t>(d)) !=
            target)
            return false;
    }
    return true;
}

// --- criterion 9: hom/ext Euler contract -------------------------------------
bool hom_ext_contract() {
    Rng rng(9009);
    for (int it = 0; it < 50; ++it) {
        const int q = static_cast<int>(rng.uniform_int(1, 4));
        const DimVec alpha{rng.uniform_int(0, 3), rng.uniform_int(0, 3)};
        const DimVec beta{rng.uniform_int(0, 3), rng.uniform_int(0, 3)};
        const Rep v = quiver::random_rep(q, alpha, rng.next_u64(), 3);
        const Rep w = quiver::random_rep(q, beta, rng.next_u64(), 3);
        const auto [hom, ext] = quiver::hom_ext(v, w);
        if (hom - ext != quiver::euler_form(q, alpha, beta)) return false;
    }
    return true;
}

// --- criterion 10: determinism ------------------------------------------------
bool determinism() {
    lab::ExperimentConfig cfg;
    cfg.seed = 10010;
    cfg.r = 2;
    cfg.d = 2;
    cfg.n = 2;
    cfg.samples_V = 4;
    cfg.samples_W = 4;
    cfg.entry_bound = 3;
    cfg.schedule = {1, 2, 4};
    const auto run1 = lab::pairing_matrix(cfg);
    const auto run2 = lab::pairing_matrix(cfg);
    if (run1.first != run2.first) return false;
    if (doc::emit(doc::pairing_report_to_json(run1.second)) !=
        doc::emit(doc::pairing_report_to_json(run2.second)))
        return false;
    const auto census1 = lab::strata_census(2, 5, 777);
    const auto census2 = lab::strata_census(2, 5, 777);
    return doc::emit(doc::strata_report_to_json(census1)) ==
           doc::emit(doc::strata_report_to_json(census2));
}

struct Criterion {
    const char* title;
    bool (*run)();
};

} // namespace

int run_acceptance(std::ostream& out) {
    const Criterion criteria[] = {
        {"star product laws (inverse, multiplicativity, determinant sign)", star_laws},
        {"big vs compact pairing determinant, constant sign per (r, d)", kron_determinants},
        {"strata rank identity hom(G, O) + rank C(V, L3) = 3n", strata_identity},
        {"vanishing oracle: det C = 0 iff h0 > 0, and h0 = h1", vanishing_oracle},
        {"reflection roundtrip residuals and pairing fingerprints", reflection_roundtrip},
        {"semi-invariance determinant weight law", semi_invariance},
        {"exceptional slope calculus and height grid", slope_calculus},
        {"coefficient-span plateaus (d+1)(d+2)/2", span_plateaus},
        {"hom - ext equals the Euler form", hom_ext_contract},
        {"byte-identical reports for identical configs", determinism},
    };
    int failures = 0;
    int index = 1;
    for (const auto& c : criteria) {
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        out << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << c.title
            << note << "\n";
        if (!ok) ++failures;
        ++index;
    }
    return failures;
}

} // namespace dualcore::selftest
