#include "dualcore/drezet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "dualcore/errors.hpp"

namespace dualcore::drezet {

namespace {

Rational disc_from_rank(const Int& r) {
    // Delta = (1 - 1/r^2) / 2.
    return (Rational(1) - Rational(1, r * r)) / 2;
}

Rational abs_r(const Rational& x) { return x < 0 ? Rational(-x) : x; }

} // namespace

Dyadic::Dyadic(long long p_, int q_) : p(p_), q(q_) {
    require(q >= 0, "Dyadic: negative exponent");
    while (q > 0 && p % 2 == 0) {
        p /= 2;
        --q;
    }
}

Rational Dyadic::value() const {
    Int d = 1;
    d <<= static_cast<unsigned>(q);
    return Rational(Int(p), d);
}

Rational P(const Rational& y) { return (y * y + 3 * y + 2) / 2; }

Rational dot(const ExcSlope& a, const ExcSlope& b) {
    const Rational denom = 3 + a.slope - b.slope;
    require(denom != 0, "dot: 3 + a - b = 0");
    return (a.slope + b.slope) / 2 + (b.disc - a.disc) / denom;
}

ExcSlope eps(const Dyadic& x) {
    static std::map<std::pair<long long, int>, ExcSlope> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({x.p, x.q});
        if (it != memo.end()) return it->second;
    }
    ExcSlope result;
    if (x.q == 0) {
        result.slope = Rational(x.p);
        result.rank = 1;
        result.disc = 0;
    } else {
        // x = (2m+1)/2^q with m = (p-1)/2 at exponent q.
        const long long m = (x.p - 1) / 2;
        const ExcSlope left = eps(Dyadic(m, x.q - 1));
        const ExcSlope right = eps(Dyadic(m + 1, x.q - 1));
        result.slope = dot(left, right);
        result.rank = den(result.slope);
        result.disc = disc_from_rank(result.rank);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::make_pair(x.p, x.q), result);
    return result;
}

bool in_interval(const Rational& mu, const ExcSlope& a) {
    // |mu - a| < x_a = 3/2 - sqrt(9/4 - 1/r^2), decided without materializing
    // the square root: t < x_a  <=>  t < 3/2 and 9/4 - 1/r^2 < (3/2 - t)^2.
    const Rational t = abs_r(mu - a.slope);
    const Rational three_half(3, 2);
    if (t >= three_half) return false;
    const Rational lhs = Rational(9, 4) - Rational(1, a.rank * a.rank);
    const Rational rhs = (three_half - t) * (three_half - t);
    return lhs < rhs;
}

ExcSlope assoc_exceptional(const Rational& mu, int max_depth) {
    // Integer bracket [t, t+1] around mu.
    Int t_floor = num(mu) / den(mu);
    if (mu < 0 && Rational(t_floor) != mu) t_floor -= 1;
    const long long t = static_cast<long long>(t_floor);

    Dyadic lo(t, 0), hi(t + 1, 0);
    ExcSlope a_lo = eps(lo), a_hi = eps(hi);
    if (in_interval(mu, a_lo)) return a_lo;
    if (in_interval(mu, a_hi)) return a_hi;
    for (int depth = 0; depth < max_depth; ++depth) {
        // Dyadic midpoint; eps is order-preserving, so bisection tracks mu.
        const int q = std::max(lo.q, hi.q) + 1;
        if (q > 62)
            throw contract_error(
                "assoc_exceptional: dyadic depth exceeds 62 bits before max_depth");
        const long long pm = (lo.p << (q - lo.q)) / 2 + (hi.p << (q - hi.q)) / 2;
        const Dyadic mid(pm, q);
        const ExcSlope a_mid = eps(mid);
        if (in_interval(mu, a_mid)) return a_mid;
        if (mu < a_mid.slope)
            hi = mid;
        else
            lo = mid;
    }
    throw contract_error("assoc_exceptional: depth exhausted at max_depth = " +
                         std::to_string(max_depth));
}

Rational delta(const Rational& mu, int max_depth) {
    const ExcSlope a = assoc_exceptional(mu, max_depth);
    return P(-abs_r(mu - a.slope)) - a.disc;
}

Rational discriminant(long r, long c1, long c2) {
    require(r >= 1, "discriminant: rank must be positive");
    const Rational rr(r);
    return (Rational(c2) - (1 - 1 / rr) * Rational(c1) * Rational(c1) / 2) / rr;
}

Rational height(long r, long c1, long c2, int max_depth) {
    require(r >= 1, "height: rank must be positive");
    const Rational mu = Rational(c1) / r;
    const ExcSlope a = assoc_exceptional(mu, max_depth);
    const Rational dlt = P(-abs_r(mu - a.slope)) - a.disc;
    return Rational(r) * Rational(a.rank) * (discriminant(r, c1, c2) - dlt);
}

Rational height_chi_crosscheck(long r, long c1, long c2, int max_depth) {
    require(r >= 1, "height_chi_crosscheck: rank must be positive");
    const Rational mu = Rational(c1) / r;
    const ExcSlope a = assoc_exceptional(mu, max_depth);
    const Rational delta_f = discriminant(r, c1, c2);
    // chi(E, F) = r_E r_F (P(mu_F - mu_E) - Delta_E - Delta_F).
    const auto chi = [](const Rational& re, const Rational& mue, const Rational& de,
                        const Rational& rf, const Rational& muf, const Rational& df) {
        return re * rf * (P(muf - mue) - de - df);
    };
    if (mu <= a.slope)
        return -chi(Rational(a.rank), a.slope, a.disc, Rational(r), mu, delta_f);
    return -chi(Rational(r), mu, delta_f, Rational(a.rank), a.slope, a.disc);
}

bool positive_dim(long r, long c1, long c2, int max_depth) {
    require(r >= 1, "positive_dim: rank must be positive");
    return delta(Rational(c1) / r, max_depth) <= discriminant(r, c1, c2);
}

} // namespace dualcore::drezet
