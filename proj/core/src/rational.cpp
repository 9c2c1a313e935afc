#include "dualcore/rational.hpp"

#include <cctype>

namespace dualcore {

std::string rat_to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) {
        s += '/';
        s += den(r).str();
    }
    return s;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) throw parse_error("invalid rational: '" + s + "'");
        return Rational(Int(s));
    }
    const std::string p = s.substr(0, slash);
    const std::string q = s.substr(slash + 1);
    if (!is_integer_token(p) || !is_integer_token(q))
        throw parse_error("invalid rational: '" + s + "'");
    const Int d(q);
    if (d == 0) throw parse_error("zero denominator in rational: '" + s + "'");
    return Rational(Int(p), d);
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    require(base != 0 || e > 0, "pow_rational: 0 to a negative power");
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (k) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1u;
    }
    return acc;
}

} // namespace dualcore
