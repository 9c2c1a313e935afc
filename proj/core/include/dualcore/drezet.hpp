#pragma once

#include "dualcore/rational.hpp"

namespace dualcore::drezet {

// Exceptional slope with its rank and discriminant Delta = (1 - 1/r^2)/2.
struct ExcSlope {
    Rational slope;
    Int rank = 1;
    Rational disc;
    bool operator==(const ExcSlope&) const = default;
};

// Dyadic p / 2^q in canonical form (p odd or q = 0).
struct Dyadic {
    long long p = 0;
    int q = 0;

    Dyadic() = default;
    Dyadic(long long p_, int q_);
    Rational value() const;
    bool operator==(const Dyadic&) const = default;
};

// P(y) = (y^2 + 3y + 2) / 2.
Rational P(const Rational& y);

// a.b = (a+b)/2 + (Delta_b - Delta_a)/(3 + a - b); requires 3 + a - b != 0.
Rational dot(const ExcSlope& a, const ExcSlope& b);

// The slope assigned to a dyadic: eps(n) = n on integers and
// eps((2p+1)/2^q) = eps(p/2^{q-1}) . eps((p+1)/2^{q-1}). Memoized.
ExcSlope eps(const Dyadic& x);

// Exact decision of |mu - a| < x_a where x_a = 3/2 - sqrt(9/4 - 1/r_a^2);
// no irrational endpoint is ever materialized.
bool in_interval(const Rational& mu, const ExcSlope& a);

// The unique exceptional slope whose interval contains mu, found by descending
// the dyadic tree. Throws contract_error("depth exhausted ...") past max_depth.
ExcSlope assoc_exceptional(const Rational& mu, int max_depth = 64);

// delta(mu) = P(-|mu - a|) - Delta_a with a = assoc_exceptional(mu).
Rational delta(const Rational& mu, int max_depth = 64);

// Discriminant of a class (r, c1, c2): (c2 - (1 - 1/r) c1^2 / 2) / r.
Rational discriminant(long r, long c1, long c2);

// height(r, c1, c2) = r * r_a * (Delta(r,c1,c2) - delta(c1/r)); may be negative.
Rational height(long r, long c1, long c2, int max_depth = 64);

// Same value through the Euler-characteristic route
// chi(E, F) = r_E r_F (P(mu_F - mu_E) - Delta_E - Delta_F):
// -chi(E_a, F) when mu <= a, else -chi(F, E_a).
Rational height_chi_crosscheck(long r, long c1, long c2, int max_depth = 64);

// True iff delta(c1/r) <= Delta(r, c1, c2).
bool positive_dim(long r, long c1, long c2, int max_depth = 64);

} // namespace dualcore::drezet
