#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dualcore/exactla.hpp"
#include "dualcore/rmatrix.hpp"

namespace dualcore::quiver {

// Dimension vector (a1 at the tail vertex, a2 at the head vertex).
struct DimVec {
    long a1 = 0;
    long a2 = 0;
    bool operator==(const DimVec&) const = default;
};

// Integral weight sigma on dimension vectors.
struct Weight {
    long w1 = 0;
    long w2 = 0;
    long operator()(const DimVec& d) const { return w1 * d.a1 + w2 * d.a2; }
    bool operator==(const Weight&) const = default;
};

// Representation of the two-vertex quiver with q parallel arrows: q matrices of
// shape a2 x a1, acting on column vectors C^{a1} -> C^{a2}.
struct Rep {
    int q = 0;
    DimVec dim;
    std::vector<RMatrix> mats;

    Rep() = default;
    Rep(int q_, DimVec dim_, std::vector<RMatrix> mats_);
    bool operator==(const Rep&) const = default;
};

// <alpha, beta> = a1*b1 + a2*b2 - q*a1*b2.
long euler_form(int q, const DimVec& alpha, const DimVec& beta);

// The block matrix of the map (f1, f2) |-> (f2*V_a - W_a*f1)_a, with
// column-major vectorization; rows = q*w2*v1, cols = w1*v1 + w2*v2.
RMatrix hom_map(const Rep& v, const Rep& w);

// (dim ker, dim coker) of hom_map; hom - ext = euler_form.
std::pair<long, long> hom_ext(const Rep& v, const Rep& w);

// det(hom_map); requires euler_form = 0 so the matrix is square.
Rational c_pair(const Rep& v, const Rep& w);

// Reflection: (m1, m2) |-> (m2, q*m2 - m1); matrices are the column blocks of
// the canonical cokernel projection of the stacked matrix [A_1; ...; A_q].
// Requires the stacked matrix to have rank m1.
Rep reflect(const Rep& v);

// Inverse reflection: matrices are the row blocks of the canonical kernel basis
// of [A_1, ..., A_q], with the first kernel column rescaled so that the basis
// change relative to the canonical complement has determinant 1 (this pins the
// otherwise basis-dependent scalar in C_matrix determinants).
// Requires [A_1, ..., A_q] to have full row rank.
Rep reflect_inverse(const Rep& vbar);

// C(V, W) = sum_s star(W_s^T, A_s) with A = reflect_inverse(V).
// Requires q = 3, V of dimension (r, 2r), W of dimension (d, d).
RMatrix C_matrix(const Rep& v, const Rep& w);

// big = det of the 3dr x 3dr block matrix with block row s =
// [ star(W_s, I_r) | -star(I_d, A~_s^T) ]; compact = det(C_matrix(V, W)).
// Verifies |big| = |compact| exactly before returning.
std::pair<Rational, Rational> c_pair_kron(const Rep& v, const Rep& w);

Rep direct_sum(const Rep& v, const Rep& w);

// Entries uniform in [-bound, bound], fully determined by the seed.
Rep random_rep(int q, const DimVec& alpha, std::uint64_t seed, long bound);

// Group action used by the semi-invariance law: V_a |-> g2^{-1} * V_a * g1,
// chosen so that c(g.V, W) = det(g1)^{sigma(e1)} * det(g2)^{sigma(e2)} * c(V, W)
// with sigma = -<., dim W>.
Rep group_act(const Rep& v, const RMatrix& g1, const RMatrix& g2);

enum class Status { Semistable, Stable, Unstable, Unknown };

struct Destabilizer {
    RMatrix u1;  // a1 x k basis of the tail subspace (k = 0 for head-only witnesses)
    DimVec dim;  // (k, dim sum_i A_i U1), or (0, u2) for a head-only subspace;
                 // sigma(dim) > 0 in every returned witness
};

struct StabilityVerdict {
    Status status = Status::Unknown;
    std::optional<Rep> probe;              // orthogonal W with c(V, W) != 0
    std::optional<Destabilizer> destabilizer;
};

// Searches subrepresentations generated by tail subspaces (exhaustive over
// coordinate subspaces for a1 <= 4, plus seeded random basis changes).
// Any returned witness is verified exactly; absence is not a verdict.
std::optional<Destabilizer> destabilize_search(const Rep& v, const Weight& sigma,
                                               int effort, std::uint64_t seed);

// Certificate-based verdict; sound, possibly Unknown. Requires sigma(dim V) = 0.
StabilityVerdict semistable_certificate(const Rep& v, const Weight& sigma,
                                        int trials, int probe_sizes,
                                        std::uint64_t seed, long bound);

} // namespace dualcore::quiver
