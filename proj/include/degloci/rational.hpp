#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace degloci {

// Exact arbitrary-precision rational coefficient.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_zero(const Rat& r) { return r.is_zero(); }

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rat(num, den);
}

// Canonical "p/q" form; the "/q" part is omitted when q == 1.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::domain_error("malformed rational literal: " + s);
    }
}

// Exact binomial coefficient with generalized (possibly negative) upper index:
// binom(m, s) = m (m-1) ... (m-s+1) / s!.
inline Rat binom(long long m, long long s) {
    if (s < 0) return Rat(0);
    Rat acc(1);
    for (long long i = 0; i < s; ++i) {
        acc *= Rat(m - i, i + 1);
    }
    return acc;
}

}  // namespace degloci
