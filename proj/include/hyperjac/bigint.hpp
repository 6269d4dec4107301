#ifndef HYPERJAC_BIGINT_HPP
#define HYPERJAC_BIGINT_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperjac {

using BigInt = boost::multiprecision::cpp_int;

/// A positive big integer split as mantissa * 2^exponent with mantissa in [2^63, 2^64)
/// (or the exact value when it fits in 64 bits, exponent 0).
struct ScaledBig {
    long double mantissa = 0.0L;
    long long exponent = 0;
};

inline ScaledBig scale_big(const BigInt& v) {
    if (v < 0) throw std::domain_error("scale_big: negative value");
    if (v == 0) return {};
    const auto top = static_cast<long long>(boost::multiprecision::msb(v));
    if (top < 64) return {static_cast<long double>(static_cast<std::uint64_t>(v)), 0};
    const long long shift = top - 63;
    const BigInt head = v >> static_cast<unsigned>(shift);
    return {static_cast<long double>(static_cast<std::uint64_t>(head)), shift};
}

/// Natural log of a positive big integer without materialising it as a float.
inline long double log_big(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log_big: non-positive argument");
    const ScaledBig s = scale_big(v);
    return std::log(s.mantissa) + static_cast<long double>(s.exponent) * std::log(2.0L);
}

/// log(num/den + 1) for big integers with den > 0 and num > -den.
inline long double log1p_ratio(const BigInt& num, const BigInt& den) {
    if (den <= 0) throw std::domain_error("log1p_ratio: non-positive denominator");
    if (num == 0) return 0.0L;
    if (num + den <= 0) throw std::domain_error("log1p_ratio: argument <= -1");
    const bool neg = num < 0;
    const ScaledBig n = scale_big(neg ? BigInt(-num) : num);
    const ScaledBig d = scale_big(den);
    const long long e = n.exponent - d.exponent;
    const long double m = n.mantissa / d.mantissa;
    if (!neg && e > 60) {
        // ratio >= 2^60: log(1 + r) = log r + log1p(1/r)
        const long double log_r = std::log(m) + static_cast<long double>(e) * std::log(2.0L);
        return log_r + std::log1p(std::ldexp(1.0L / m, static_cast<int>(-e)));
    }
    const long double r = std::ldexp(m, static_cast<int>(e));
    return std::log1p(neg ? -r : r);
}

inline BigInt big_pow(std::uint64_t base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1U) r *= b;
        exp >>= 1U;
        if (exp) b *= b;
    }
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace hyperjac

#endif  // HYPERJAC_BIGINT_HPP
