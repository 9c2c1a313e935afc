#include "dualcore/dualitylab.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "dualcore/errors.hpp"
#include "dualcore/exactla.hpp"

namespace dualcore::lab {

namespace {

constexpr int kResampleCap = 64;

std::size_t u(long x) { return static_cast<std::size_t>(x); }

} // namespace

void ExperimentConfig::validate() const {
    require(r >= 1 && d >= 1 && n >= 1, "config: r, d, n must be positive");
    require(samples_V >= 1 && samples_W >= 1, "config: sample counts must be >= 1");
    require(entry_bound >= 1, "config: entry_bound must be >= 1");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        require(schedule[i - 1] < schedule[i], "config: schedule must be strictly increasing");
    if (!schedule.empty()) {
        require(schedule.front() >= 1, "config: schedule entries must be >= 1");
        require(schedule.back() <= std::min(samples_V, samples_W),
                "config: schedule entries must not exceed min(samples_V, samples_W)");
    }
}

quiver::Rep sample_reflectable(Rng& rng, int r, long bound, long* resamples) {
    const quiver::DimVec dim{r, 2L * r};
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        const quiver::Rep v = quiver::random_rep(3, dim, rng.next_u64(), bound);
        // Reject degenerate draws: the stacked matrix must have rank r (the
        // reflectability condition) and the concatenated matrix full row rank
        // 2r (so the inverse reflection behind C_matrix exists).
        if (la::rank(RMatrix::vstack(v.mats)) == u(r) &&
            la::rank(RMatrix::hstack(v.mats)) == u(2L * r))
            return v;
        if (resamples) ++*resamples;
    }
    throw internal_error("sample_reflectable: resample cap exhausted");
}

sheaf::Pencil sample_in_chart(Rng& rng, int d, long bound, long* resamples) {
    const quiver::DimVec dim{d, d};
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        const quiver::Rep w = quiver::random_rep(3, dim, rng.next_u64(), bound);
        const sheaf::Pencil p(d, {w.mats[0], w.mats[1], w.mats[2]});
        if (sheaf::in_chart(p)) return p;
        if (resamples) ++*resamples;
    }
    throw internal_error("sample_in_chart: resample cap exhausted");
}

std::pair<RMatrix, PairingReport> pairing_matrix(const ExperimentConfig& cfg) {
    cfg.validate();
    PairingReport rep;
    rep.config = cfg;
    rep.experiment = "pairing";

    // All randomness drawn up front, so evaluation order cannot affect results.
    Rng rng(cfg.seed);
    std::vector<quiver::Rep> vs;
    std::vector<sheaf::Pencil> ws;
    vs.reserve(u(cfg.samples_V));
    ws.reserve(u(cfg.samples_W));
    for (int i = 0; i < cfg.samples_V; ++i)
        vs.push_back(sample_reflectable(rng, cfg.r, cfg.entry_bound, &rep.resamples));
    for (int j = 0; j < cfg.samples_W; ++j)
        ws.push_back(sample_in_chart(rng, cfg.d, cfg.entry_bound, &rep.resamples));

    RMatrix p(u(cfg.samples_V), u(cfg.samples_W));
    std::vector<sheaf::BundleRep> bundles;
    bundles.reserve(vs.size());
    for (const auto& v : vs) bundles.push_back(sheaf::bundle_from_rep(v));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) {
            p(i, j) = la::det(quiver::C_matrix(vs[i], sheaf::to_rep(ws[j])));
            ++rep.pairs_checked;
            if (p(i, j) == 0) {
                ++rep.zero_cells;
                const auto [h0, h1] = sheaf::h0_tensor(bundles[i], ws[j]);
                if (h0 == 0 || h0 != h1) ++rep.oracle_disagreements;
            }
        }

    rep.matrix_rank = static_cast<int>(la::rank(p));
    for (int s : cfg.schedule) {
        const int size = std::min({s, cfg.samples_V, cfg.samples_W});
        rep.saturation.push_back(
            {s, static_cast<int>(la::rank(p.block(0, 0, u(size), u(size))))});
    }
    return {p, rep};
}

int coeff_span_dim(int d, int samples, std::uint64_t seed, long entry_bound) {
    require(d >= 1 && samples >= 1, "coeff_span_dim: d and samples must be positive");
    Rng rng(seed);
    long resamples = 0;
    std::vector<sheaf::HomogPoly> curves;
    curves.reserve(u(samples));
    for (int j = 0; j < samples; ++j)
        curves.push_back(sheaf::support_curve(sample_in_chart(rng, d, entry_bound, &resamples)));
    std::vector<std::array<Rational, 3>> points;
    points.reserve(u(samples));
    while (points.size() < u(samples)) {
        const long x = rng.uniform_int(-7, 7);
        const long y = rng.uniform_int(-7, 7);
        const long z = rng.uniform_int(-7, 7);
        if (x == 0 && y == 0 && z == 0) continue;
        points.push_back({Rational(x), Rational(y), Rational(z)});
    }
    RMatrix eval(u(samples), u(samples));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < curves.size(); ++j)
            eval(i, j) = curves[j].eval(points[i][0], points[i][1], points[i][2]);
    return static_cast<int>(la::rank(eval));
}

PairingReport vanishing_oracle_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    PairingReport rep;
    rep.config = cfg;
    rep.experiment = "vanishing";

    Rng rng(cfg.seed);
    std::vector<quiver::Rep> vs;
    std::vector<sheaf::Pencil> ws;
    for (int i = 0; i < cfg.samples_V; ++i)
        vs.push_back(sample_reflectable(rng, cfg.n, cfg.entry_bound, &rep.resamples));
    for (int j = 0; j < cfg.samples_W; ++j)
        ws.push_back(sample_in_chart(rng, cfg.d, cfg.entry_bound, &rep.resamples));

    for (std::size_t i = 0; i < vs.size(); ++i) {
        const sheaf::BundleRep bundle = sheaf::bundle_from_rep(vs[i]);
        for (std::size_t j = 0; j < ws.size(); ++j) {
            const Rational detc = la::det(quiver::C_matrix(vs[i], sheaf::to_rep(ws[j])));
            const auto [h0, h1] = sheaf::h0_tensor(bundle, ws[j]);
            ++rep.pairs_checked;
            if (detc == 0) ++rep.zero_cells;
            if ((detc == 0) != (h0 > 0) || h0 != h1) ++rep.oracle_disagreements;
        }
    }
    return rep;
}

namespace {

// (1, 2) representation of the ideal sheaf of a point, as the reflection of the
// scalar triple given by the point's coordinates.
quiver::Rep point_fixture(long x, long y, long z) {
    const quiver::Rep scalars(3, quiver::DimVec{1, 1},
                              {RMatrix{{Rational(x)}}, RMatrix{{Rational(y)}},
                               RMatrix{{Rational(z)}}});
    return quiver::reflect(scalars);
}

} // namespace

StrataReport strata_census(int n, int samples, std::uint64_t seed, long entry_bound) {
    require(n >= 1 && samples >= 0, "strata_census: bad arguments");
    StrataReport rep;
    rep.n = n;
    rep.seed = seed;
    rep.samples = samples;

    Rng rng(seed);
    std::vector<quiver::Rep> reps;
    reps.reserve(u(samples) + 1);
    long resamples = 0;
    for (int i = 0; i < samples; ++i)
        reps.push_back(sample_reflectable(rng, n, entry_bound, &resamples));

    // Fixture: direct sum of n distinct point ideal-sheaf reps; expected index n.
    quiver::Rep fixture = point_fixture(0, 0, 1);
    for (int i = 1; i < n; ++i)
        fixture = quiver::direct_sum(fixture, point_fixture(1, i, 1));
    reps.push_back(fixture);

    for (const auto& v : reps) {
        const sheaf::BundleRep bundle = sheaf::bundle_from_rep(v);
        const long idx = sheaf::strata_index(bundle);
        const long hom = sheaf::hom_to_O(bundle);
        if (hom + (3L * n - idx) != 3L * n) ++rep.residual_violations;
        const int key = static_cast<int>(idx);
        ++rep.counts[key];
        rep.witnesses.emplace(key, v);
    }
    return rep;
}

std::string pairing_report_table(const PairingReport& rep) {
    std::ostringstream os;
    os << "experiment: " << rep.experiment << "\n"
       << "seed=" << rep.config.seed << " r=" << rep.config.r << " d=" << rep.config.d
       << " n=" << rep.config.n << " V=" << rep.config.samples_V
       << " W=" << rep.config.samples_W << " bound=" << rep.config.entry_bound << "\n"
       << "pairs checked:        " << rep.pairs_checked << "\n"
       << "matrix rank:          " << rep.matrix_rank << "\n"
       << "zero cells:           " << rep.zero_cells << "\n"
       << "oracle disagreements: " << rep.oracle_disagreements << "\n"
       << "resamples:            " << rep.resamples << "\n";
    if (!rep.saturation.empty()) {
        os << "saturation:";
        for (const auto& s : rep.saturation) os << " (" << s.size << ", " << s.rank << ")";
        os << "\n";
    }
    return os.str();
}

std::string strata_report_table(const StrataReport& rep) {
    std::ostringstream os;
    os << "strata census: n=" << rep.n << " seed=" << rep.seed
       << " samples=" << rep.samples << "\n";
    for (const auto& [idx, count] : rep.counts)
        os << "index " << idx << ": " << count << "\n";
    os << "residual violations: " << rep.residual_violations << "\n";
    return os.str();
}

} // namespace dualcore::lab
