#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "qpde/errors.hpp"

namespace qpde {

// Exact arbitrary-precision arithmetic.  cpp_rational keeps values
// canonical (gcd-reduced, positive denominator), which is exactly the
// BigRational contract the rest of the library relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

// Formats "a" or "a/b"; parse_rat accepts the same shapes.
inline std::string format_rat(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat parse_rat(std::string_view text) {
    auto bad = [&] { throw BadInput("cannot parse rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(BigInt(std::string(text)));
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::exception&) {
        bad();
    }
    return Rat(0);  // unreachable
}

// Generalized binomial coefficient C(x, k) for integer x of either sign:
// the product x(x-1)...(x-k+1)/k!, always an exact integer.
inline BigInt binom(const BigInt& x, unsigned k) {
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= x - BigInt(i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

inline long long llgcd(long long a, long long b) { return std::gcd(a, b); }

inline long long lllcm(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

}  // namespace qpde
