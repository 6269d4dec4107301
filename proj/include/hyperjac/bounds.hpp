#ifndef HYPERJAC_BOUNDS_HPP
#define HYPERJAC_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperjac/bigint.hpp"
#include "hyperjac/lfunc.hpp"

namespace hyperjac {

/// |log #J - g log q| <= (N - 1) (log max{1, log(7g/(N-1)) / log q} + 3).
inline double genus_bound(int g, std::uint32_t q, int n_galois = 2) {
    if (g < 1 || q < 2 || n_galois < 2) throw std::invalid_argument("genus_bound: need g >= 1, q >= 2, N >= 2");
    const double nm1 = n_galois - 1;
    const double ratio = std::log(7.0 * g / nm1) / std::log(static_cast<double>(q));
    return nm1 * (std::log(std::max(1.0, ratio)) + 3.0);
}

struct WeilInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// ((sqrt q - 1)^{2g}, (sqrt q + 1)^{2g}).
inline WeilInterval weil_interval(int g, std::uint32_t q) {
    if (g < 1) throw std::invalid_argument("weil_interval: g must be >= 1");
    const long double r = std::sqrt(static_cast<long double>(q));
    return {static_cast<double>(std::pow(r - 1.0L, 2.0L * g)), static_cast<double>(std::pow(r + 1.0L, 2.0L * g))};
}

/// (sqrt q +- 1)^{2g} = A +- B sqrt q with integers A, B >= 0.
struct WeilExact {
    BigInt a;
    BigInt b;
};

inline WeilExact weil_exact(int g, std::uint32_t q) {
    // (sqrt q + 1)^2 = (q + 1) + 2 sqrt q; raise x + y sqrt q to the g-th power.
    BigInt a = 1, b = 0;
    const BigInt x = BigInt(q) + 1, y = 2;
    for (int i = 0; i < g; ++i) {
        BigInt na = a * x + b * y * q;
        BigInt nb = a * y + b * x;
        a = std::move(na);
        b = std::move(nb);
    }
    return {a, b};
}

namespace detail {

/// Sign of (h - (A + sign_b * B sqrt q)) computed exactly.
inline int compare_with_quadratic(const BigInt& h, const BigInt& a, const BigInt& b, int sign_b, std::uint32_t q) {
    // h - A compared with sign_b * B sqrt q.
    const BigInt lhs = h - a;
    const BigInt rhs_sq = b * b * q;
    if (sign_b > 0) {
        if (lhs < 0) return -1;
        const BigInt l2 = lhs * lhs;
        return l2 > rhs_sq ? 1 : (l2 < rhs_sq ? -1 : 0);
    }
    if (lhs >= 0) return 1;
    const BigInt l2 = lhs * lhs;
    return l2 < rhs_sq ? 1 : (l2 > rhs_sq ? -1 : 0);
}

}  // namespace detail

/// Exact membership h in [(sqrt q - 1)^{2g}, (sqrt q + 1)^{2g}]: a long double log
/// comparison decides unless log h is within 1e-9 of an endpoint.
inline bool in_weil_interval(const BigInt& h, int g, std::uint32_t q) {
    if (h < 1) return false;
    const long double lh = log_big(h);
    const long double r = std::sqrt(static_cast<long double>(q));
    const long double llo = 2.0L * g * std::log(r - 1.0L);
    const long double lhi = 2.0L * g * std::log(r + 1.0L);
    bool lo_ok = lh > llo + 1e-9L;
    bool hi_ok = lh < lhi - 1e-9L;
    if (lh < llo - 1e-9L || lh > lhi + 1e-9L) return false;
    if (!lo_ok || !hi_ok) {
        const WeilExact w = weil_exact(g, q);
        if (!lo_ok) lo_ok = detail::compare_with_quadratic(h, w.a, w.b, -1, q) >= 0;
        if (!hi_ok) hi_ok = detail::compare_with_quadratic(h, w.a, w.b, +1, q) <= 0;
    }
    return lo_ok && hi_ok;
}

struct Verdict {
    bool weil_ok = true;
    bool genus_ok = true;
    double genus_lhs = 0.0;  // |log h - g log q|
    double genus_rhs = 0.0;
    std::string message;

    bool ok() const noexcept { return weil_ok && genus_ok; }
};

/// Weil membership and the N = 2 bound on the raw difference |log h - g log q|.
inline Verdict verify_curve(const BigInt& h, int g, std::uint32_t q) {
    Verdict v;
    if (g < 1) {
        v.weil_ok = h == 1;
        v.message = v.weil_ok ? "" : "genus 0 curve with class number != 1";
        return v;
    }
    v.weil_ok = in_weil_interval(h, g, q);
    v.genus_rhs = genus_bound(g, q, 2);
    if (h >= 1) {
        v.genus_lhs = static_cast<double>(std::fabs(log_big(h) - static_cast<long double>(g) * std::log(static_cast<long double>(q))));
        v.genus_ok = v.genus_lhs <= v.genus_rhs;
    } else {
        v.genus_ok = false;
        v.genus_lhs = INFINITY;
    }
    if (!v.weil_ok) v.message += "class number " + h.str() + " outside Weil interval";
    if (!v.genus_ok) {
        if (!v.message.empty()) v.message += "; ";
        v.message += "|log h - g log q| exceeds the genus bound";
    }
    return v;
}

inline Verdict verify_curve(const CurveRecord& rec) { return verify_curve(rec.class_number, rec.g, rec.f.q()); }

}  // namespace hyperjac

#endif  // HYPERJAC_BOUNDS_HPP
