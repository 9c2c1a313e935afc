#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dualcore/quiver.hpp"
#include "dualcore/rmatrix.hpp"
#include "dualcore/rng.hpp"
#include "dualcore/sheafbridge.hpp"

namespace dualcore::lab {

struct ExperimentConfig {
    std::uint64_t seed = 0;
    int r = 1;
    int d = 1;
    int n = 1;
    int samples_V = 1;
    int samples_W = 1;
    long entry_bound = 3;
    std::vector<int> schedule; // strictly increasing sample sizes

    void validate() const; // throws contract_error
    bool operator==(const ExperimentConfig&) const = default;
};

struct SaturationPoint {
    int size = 0;
    int rank = 0;
    bool operator==(const SaturationPoint&) const = default;
};

struct PairingReport {
    ExperimentConfig config;
    std::string experiment;
    int matrix_rank = 0;
    std::vector<SaturationPoint> saturation;
    long zero_cells = 0;
    long oracle_disagreements = 0;
    long resamples = 0;
    long pairs_checked = 0;
};

struct StrataReport {
    int n = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    std::map<int, long> counts;                  // strata index -> count
    std::map<int, quiver::Rep> witnesses;        // first rep seen per index
    long residual_violations = 0;                // hom_to_O + rank C - 3n != 0
};

// Seeded matrix P[i][j] = det C(V_i, W_j) over reflectable V_i (dim (r,2r)) and
// in-chart W_j (dim (d,d)); exact rank, saturation ranks on leading square
// submatrices per the schedule, and a cohomology cross-check of every zero cell.
std::pair<RMatrix, PairingReport> pairing_matrix(const ExperimentConfig& cfg);

// Rank of the evaluation matrix { support_curve(W_j)(p_i) } over seeded
// samples; plateaus at (d+1)(d+2)/2.
int coeff_span_dim(int d, int samples, std::uint64_t seed, long entry_bound = 3);

// Asserts det C = 0 <=> h0 > 0 and h0 = h1 on seeded (n, d) pairs; the report's
// oracle_disagreements must be 0.
PairingReport vanishing_oracle_experiment(const ExperimentConfig& cfg);

// Samples reflectable (n, 2n) reps plus direct sums of point fixtures and
// reports the strata-index distribution with the exact rank-identity residuals.
StrataReport strata_census(int n, int samples, std::uint64_t seed,
                           long entry_bound = 2);

// Plain-text table for human reading (reports themselves serialize via the
// document layer).
std::string pairing_report_table(const PairingReport& rep);
std::string strata_report_table(const StrataReport& rep);

// Helpers shared with tests: seeded sampling with capped reject-and-resample.
quiver::Rep sample_reflectable(Rng& rng, int r, long bound, long* resamples);
sheaf::Pencil sample_in_chart(Rng& rng, int d, long bound, long* resamples);

} // namespace dualcore::lab
