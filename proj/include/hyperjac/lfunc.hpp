#ifndef HYPERJAC_LFUNC_HPP
#define HYPERJAC_LFUNC_HPP

// L-polynomials P_C(u) of y^2 = F(x) for monic squarefree F over F_q,
// computed three independent ways, plus class numbers and the statistic
// N_F = log #J - g log q + [d even] log(1 - 1/q).

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperjac/bigint.hpp"
#include "hyperjac/ffield.hpp"
#include "hyperjac/io.hpp"
#include "hyperjac/quadchar.hpp"

namespace hyperjac {

/// Raised when an exact identity that must hold by construction fails
/// (inexact Newton division, non-divisible (1-u), broken functional equation).
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class LMethod { newton, charsum, pointcount };

inline std::string_view to_string(LMethod m) {
    switch (m) {
        case LMethod::newton: return "newton";
        case LMethod::charsum: return "charsum";
        case LMethod::pointcount: return "pointcount";
    }
    return "?";
}

inline LMethod parse_method(std::string_view s) {
    if (s == "newton") return LMethod::newton;
    if (s == "charsum") return LMethod::charsum;
    if (s == "pointcount") return LMethod::pointcount;
    throw std::invalid_argument("unknown L-polynomial method '" + std::string(s) + "'");
}

inline int genus_of_degree(int d) { return (d - 1) / 2; }

struct LPolynomial {
    std::uint32_t q = 0;
    int g = 0;
    bool d_even = false;
    std::vector<BigInt> coeffs;      // a_0 .. a_{2g}
    std::vector<BigInt> power_sums;  // s_1 .. s_g, s_n = sum of alpha_i^n

    friend bool operator==(const LPolynomial&, const LPolynomial&) = default;
};

/// Newton's identities n a_n = -sum_{k=1}^n p_k a_{n-k}, a_0 = 1, for n <= g,
/// then a_{2g-n} = q^{g-n} a_n.  Every division must be exact.
inline std::vector<BigInt> coefficients_from_power_sums(std::span<const BigInt> p, std::uint32_t q, int g) {
    if (static_cast<int>(p.size()) < g) throw std::invalid_argument("coefficients_from_power_sums: need g power sums");
    std::vector<BigInt> a(2 * static_cast<std::size_t>(g) + 1, 0);
    a[0] = 1;
    for (int n = 1; n <= g; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k) acc -= p[static_cast<std::size_t>(k - 1)] * a[static_cast<std::size_t>(n - k)];
        BigInt quot, rem;
        boost::multiprecision::divide_qr(acc, BigInt(n), quot, rem);
        if (rem != 0) throw InternalInvariantError("Newton recursion: inexact division at n = " + std::to_string(n));
        a[static_cast<std::size_t>(n)] = quot;
    }
    BigInt qp = 1;
    for (int n = g - 1; n >= 0; --n) {
        qp *= q;
        a[static_cast<std::size_t>(2 * g - n)] = qp * a[static_cast<std::size_t>(n)];
    }
    return a;
}

/// Inverse Newton: p_n = -n a_n - sum_{k=1}^{n-1} p_k a_{n-k} (a_k = 0 beyond the degree).
inline std::vector<BigInt> power_sums_from_coefficients(std::span<const BigInt> a, int count) {
    std::vector<BigInt> p(static_cast<std::size_t>(count), 0);
    auto coeff = [&](int k) -> BigInt { return k < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k)] : BigInt(0); };
    for (int n = 1; n <= count; ++n) {
        BigInt v = -BigInt(n) * coeff(n);
        for (int k = 1; k < n; ++k) v -= p[static_cast<std::size_t>(k - 1)] * coeff(n - k);
        p[static_cast<std::size_t>(n - 1)] = v;
    }
    return p;
}

/// Throws InternalInvariantError unless a_0 = 1 and a_{2g-n} = q^{g-n} a_n.
inline void check_structure(const LPolynomial& l) {
    if (l.coeffs.size() != 2 * static_cast<std::size_t>(l.g) + 1) throw InternalInvariantError("L-polynomial has wrong length");
    if (l.coeffs[0] != 1) throw InternalInvariantError("L-polynomial: a_0 != 1");
    BigInt qp = 1;
    for (int n = l.g; n >= 0; --n) {
        if (l.coeffs[static_cast<std::size_t>(2 * l.g - n)] != qp * l.coeffs[static_cast<std::size_t>(n)])
            throw InternalInvariantError("L-polynomial: functional equation fails at n = " + std::to_string(n));
        qp *= l.q;
    }
}

inline LPolynomial lpoly_from_power_sums(std::uint32_t q, int d, std::vector<BigInt> p) {
    LPolynomial l;
    l.q = q;
    l.g = genus_of_degree(d);
    l.d_even = d % 2 == 0;
    p.resize(static_cast<std::size_t>(l.g));
    l.coeffs = coefficients_from_power_sums(p, q, l.g);
    l.power_sums = std::move(p);
    return l;
}

inline LPolynomial lpoly_from_coefficients(std::uint32_t q, int d, std::vector<BigInt> a) {
    LPolynomial l;
    l.q = q;
    l.g = genus_of_degree(d);
    l.d_even = d % 2 == 0;
    l.coeffs = std::move(a);
    check_structure(l);
    l.power_sums = power_sums_from_coefficients(l.coeffs, l.g);
    return l;
}

/// #J_C = P_C(1).
inline BigInt class_number(const LPolynomial& l) {
    BigInt h = 0;
    for (const auto& a : l.coeffs) h += a;
    return h;
}

/// N_F from the exact class number: log1p((h (q-1)^e - q^{g+e}) / q^{g+e}), e = [d even].
inline long double nf_statistic_ld(const BigInt& h, std::uint32_t q, int g, bool d_even) {
    if (h < 1) throw std::domain_error("nf_statistic: class number must be >= 1");
    const unsigned e = d_even ? 1U : 0U;
    const BigInt den = big_pow(q, static_cast<unsigned>(g) + e);
    const BigInt num = h * big_pow(q - 1, e) - den;
    return log1p_ratio(num, den);
}

inline double nf_statistic(const LPolynomial& l) {
    return static_cast<double>(nf_statistic_ld(class_number(l), l.q, l.g, l.d_even));
}

namespace detail {

using Rational = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rational>;  // ascending

inline void rtrim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RPoly rmod(RPoly a, const RPoly& b) {
    rtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        rtrim(a);
    }
    return a;
}

inline RPoly rdiv_exact(RPoly a, const RPoly& b) {
    rtrim(a);
    RPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        rtrim(a);
    }
    return quot;
}

/// Square-free part over Q (P / gcd(P, P')).
inline RPoly squarefree_part(const RPoly& p) {
    RPoly dp;
    for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<int>(i));
    rtrim(dp);
    if (dp.empty()) return p;
    RPoly a = p, b = dp;
    while (!b.empty()) {
        RPoly r = rmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rdiv_exact(p, a);
}

/// Aberth iteration on a square-free polynomial with a known root radius hint.
inline std::vector<std::complex<long double>> polynomial_roots(const RPoly& p, long double radius) {
    using C = std::complex<long double>;
    const std::size_t m = p.size() - 1;
    std::vector<long double> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = static_cast<long double>(p[i] / p.back());
    std::vector<C> z(m);
    for (std::size_t k = 0; k < m; ++k) {
        const long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(m) + 0.4L;
        z[k] = std::polar(radius * 1.01L, ang);
    }
    for (int iter = 0; iter < 1000; ++iter) {
        long double worst = 0;
        for (std::size_t k = 0; k < m; ++k) {
            C val = c[m], der = 0;
            for (std::size_t i = m; i-- > 0;) {
                der = der * z[k] + val;
                val = val * z[k] + c[i];
            }
            if (std::abs(val) == 0.0L) continue;
            const C ratio = val / der;
            C s = 0;
            for (std::size_t j = 0; j < m; ++j)
                if (j != k) s += 1.0L / (z[k] - z[j]);
            const C w = ratio / (1.0L - ratio * s);
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max(std::abs(z[k]), 1e-300L));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

}  // namespace detail

/// max over complex roots u of | |u| - q^{-1/2} |.  Roots are taken from the
/// square-free part over Q so repeated roots do not degrade accuracy.
inline double max_root_modulus_deviation(const LPolynomial& l) {
    if (l.g == 0) return 0.0;
    detail::RPoly p;
    for (const auto& a : l.coeffs) p.emplace_back(a);
    const detail::RPoly sf = detail::squarefree_part(p);
    const long double r = 1.0L / std::sqrt(static_cast<long double>(l.q));
    long double worst = 0;
    for (const auto& z : detail::polynomial_roots(sf, r)) worst = std::max(worst, std::fabs(std::abs(z) - r));
    return static_cast<double>(worst);
}

struct CurveRecord {
    FqPoly f;
    int d = 0;
    int g = 0;
    BigInt class_number;
    double n_f = 0.0;
    std::vector<BigInt> s;  // power sums s_1..s_g
};

inline CurveRecord make_curve_record(const FqPoly& f, const LPolynomial& l) {
    return CurveRecord{f, f.degree(), l.g, class_number(l), nf_statistic(l), l.power_sums};
}

inline std::string curve_csv_header(int g) {
    std::string h = "q,d,g,F,class_number,n_f";
    for (int n = 1; n <= g; ++n) h += ",s_" + std::to_string(n);
    return h;
}

/// q,d,g,"c0,c1,...",class_number,n_f,s_1..s_g
inline std::string to_csv_row(const CurveRecord& r) {
    std::string row = std::to_string(r.f.q()) + "," + std::to_string(r.d) + "," + std::to_string(r.g) + "," +
                      csv_quote(format_poly(r.f)) + "," + r.class_number.str() + "," + format_double(r.n_f);
    for (const auto& s : r.s) row += "," + s.str();
    return row;
}

/// Three routes to P_C(u) sharing immutable precomputed tables.
///  - newton: p_n = -(Lambda-sum_n + [d even]) for n <= g, then Newton's identities.
///  - charsum: c_n = sum over monic f of degree n of (F/f), n < d; for even d
///    the series is divided by (1 - u).
///  - pointcount: N_n over F_{q^n} via residue rings with squares tables.
class LFunctionEngine {
public:
    struct Options {
        bool newton = true;
        bool charsum = false;
        bool pointcount = false;
        int extra_power_sums = 0;  // cache primes / extensions up to degree g + extra
        std::uint64_t table_budget = ResidueRing::kDefaultTableBudget;
    };

    LFunctionEngine(FieldCtx field, int max_d, Options opt) : field_(field), max_d_(max_d), opt_(opt) {
        if (max_d < 3) throw std::invalid_argument("LFunctionEngine: degree must be >= 3");
        const int gmax = genus_of_degree(max_d) + opt.extra_power_sums;
        int cache_deg = 0;
        if (opt.newton) cache_deg = std::max(cache_deg, gmax);
        if (opt.charsum) cache_deg = std::max(cache_deg, max_d - 1);
        if (cache_deg > 0) symbols_.emplace(field, cache_deg, opt.table_budget);
        if (opt.charsum) build_factor_sieve(max_d - 1);
        if (opt.pointcount) {
            for (int n = 1; n <= gmax; ++n) {
                const bool table = monic_count(field.q(), n) <= opt.table_budget;
                rings_.emplace_back(least_irreducible(field, n), table, opt.table_budget);
            }
        }
    }

    const FieldCtx& field() const noexcept { return field_; }
    int max_degree() const noexcept { return max_d_; }
    const Options& options() const noexcept { return opt_; }
    const SymbolTableCache& symbols() const {
        if (!symbols_) throw std::logic_error("LFunctionEngine: no symbol cache");
        return *symbols_;
    }
    bool has_symbols() const noexcept { return symbols_.has_value(); }

    /// Number of leading cached primes a method needs for degree d.
    std::size_t primes_needed(int d, LMethod m, int extra = 0) const {
        if (m == LMethod::charsum) return symbols().primes_up_to(d - 1);
        if (m == LMethod::newton) return symbols().primes_up_to(genus_of_degree(d) + extra);
        return 0;
    }

    /// s_n = -(Lambda-sum_n + [d even]) from symbols at the primes of degree <= n.
    BigInt newton_power_sum(int d, std::span<const std::int8_t> syms, int n) const {
        return -BigInt(symbols().lambda_char_sum(syms, n) + (d % 2 == 0 ? 1 : 0));
    }

    LPolynomial newton(int d, std::span<const std::int8_t> syms) const {
        require_degree(d);
        const int g = genus_of_degree(d);
        std::vector<BigInt> p;
        p.reserve(static_cast<std::size_t>(g));
        for (int n = 1; n <= g; ++n) p.push_back(newton_power_sum(d, syms, n));
        return lpoly_from_power_sums(field_.q(), d, std::move(p));
    }

    /// Character sums c_0..c_{d-1} from the symbols at all primes of degree < d.
    std::vector<BigInt> character_sums(int d, std::span<const std::int8_t> syms) const {
        require_degree(d);
        if (!opt_.charsum) throw std::logic_error("LFunctionEngine: charsum tables not built");
        const std::size_t total = sieve_offsets_[static_cast<std::size_t>(d)];
        std::vector<std::int8_t> chi(total);
        chi[0] = 1;
        std::vector<BigInt> c(static_cast<std::size_t>(d), 0);
        c[0] = 1;
        for (int n = 1; n < d; ++n) {
            std::int64_t sum = 0;
            for (std::size_t id = sieve_offsets_[static_cast<std::size_t>(n)]; id < sieve_offsets_[static_cast<std::size_t>(n) + 1]; ++id) {
                const auto v = static_cast<std::int8_t>(syms[sieve_prime_[id]] * chi[sieve_cofactor_[id]]);
                chi[id] = v;
                sum += v;
            }
            c[static_cast<std::size_t>(n)] = sum;
        }
        return c;
    }

    LPolynomial charsum(int d, std::span<const std::int8_t> syms) const {
        std::vector<BigInt> c = character_sums(d, syms);
        if (d % 2 == 1) return lpoly_from_coefficients(field_.q(), d, std::move(c));
        // Even degree: the split place at infinity contributes a factor (1 - u)^{-1}.
        std::vector<BigInt> b(c.size() - 1);
        BigInt run = 0;
        for (std::size_t n = 0; n + 1 < c.size(); ++n) {
            run += c[n];
            b[n] = run;
        }
        if (run + c.back() != 0) throw InternalInvariantError("charsum: L-series not divisible by (1 - u)");
        return lpoly_from_coefficients(field_.q(), d, std::move(b));
    }

    /// Number of affine points on y^2 = F(x) over F_{q^n}.
    std::uint64_t affine_points(const FqPoly& f, int n) const {
        if (n < 1 || n > static_cast<int>(rings_.size())) throw std::out_of_range("affine_points: extension degree not prepared");
        return count_affine(f, rings_[static_cast<std::size_t>(n - 1)]);
    }

    BigInt pointcount_power_sum(const FqPoly& f, int n) const {
        const std::uint64_t at_infinity = f.degree() % 2 == 1 ? 1 : 2;
        const BigInt total = BigInt(affine_points(f, n)) + at_infinity;
        return big_pow(field_.q(), static_cast<unsigned>(n)) + 1 - total;
    }

    LPolynomial pointcount(const FqPoly& f) const {
        require_curve(f);
        const int d = f.degree();
        std::vector<BigInt> p;
        for (int n = 1; n <= genus_of_degree(d); ++n) p.push_back(pointcount_power_sum(f, n));
        return lpoly_from_power_sums(field_.q(), d, std::move(p));
    }

    LPolynomial compute(const FqPoly& f, LMethod m) const {
        require_curve(f);
        if (!is_squarefree(f)) throw std::invalid_argument("l_polynomial: F is not squarefree");
        if (m == LMethod::pointcount) return pointcount(f);
        std::vector<std::int8_t> syms(primes_needed(f.degree(), m));
        symbols().symbols(f, syms);
        return m == LMethod::newton ? newton(f.degree(), syms) : charsum(f.degree(), syms);
    }

private:
    void require_degree(int d) const {
        if (d < 3 || d > max_d_) throw std::invalid_argument("LFunctionEngine: degree " + std::to_string(d) + " out of range");
    }
    void require_curve(const FqPoly& f) const {
        if (f.field() != field_) throw std::invalid_argument("LFunctionEngine: polynomial over a different field");
        if (!f.is_monic()) throw std::invalid_argument("LFunctionEngine: F must be monic");
        require_degree(f.degree());
    }

    // For every monic f of degree <= max_deg (global id = offset[deg] + index),
    // one prime factor P (cache index) and the id of f / P.
    void build_factor_sieve(int max_deg) {
        const auto q = field_.q();
        sieve_offsets_.assign(static_cast<std::size_t>(max_deg) + 3, 0);
        for (int n = 0; n <= max_deg + 1; ++n)
            sieve_offsets_[static_cast<std::size_t>(n) + 1] = sieve_offsets_[static_cast<std::size_t>(n)] + monic_count(q, n);
        const std::size_t total = sieve_offsets_[static_cast<std::size_t>(max_deg) + 1];
        sieve_prime_.assign(total, UINT32_MAX);
        sieve_cofactor_.assign(total, 0);
        const SymbolTableCache& cache = symbols();
        for (std::size_t i = 0; i < cache.primes_up_to(max_deg); ++i) {
            const FqPoly& p = cache.prime(i);
            const int k = p.degree();
            for (int m = 0; m + k <= max_deg; ++m) {
                for (std::uint64_t gi = 0; gi < monic_count(q, m); ++gi) {
                    const FqPoly g = m == 0 ? FqPoly::constant(field_, 1) : monic_from_index(field_, m, gi);
                    const std::size_t id = sieve_offsets_[static_cast<std::size_t>(m + k)] + monic_index_any(p * g);
                    if (sieve_prime_[id] != UINT32_MAX) continue;
                    sieve_prime_[id] = static_cast<std::uint32_t>(i);
                    sieve_cofactor_[id] = static_cast<std::uint32_t>(sieve_offsets_[static_cast<std::size_t>(m)] + gi);
                }
            }
        }
        for (std::size_t id = 1; id < total; ++id)
            if (sieve_prime_[id] == UINT32_MAX) throw std::logic_error("factor sieve: unfactored polynomial");
    }

    static std::uint64_t monic_index_any(const FqPoly& p) { return p.degree() == 0 ? 0 : monic_index(p); }

    // Sum over x of (1 + chi(F(x))).  x runs over lines y + c (c in F_q, y with
    // zero constant digit); along a line G(c) = F(y + c) has degree d in c, so
    // after d + 1 evaluations the remaining values come from forward differences.
    std::uint64_t count_affine(const FqPoly& f, const ResidueRing& ring) const {
        const auto q = field_.q();
        const std::size_t n = static_cast<std::size_t>(ring.degree());
        const int d = f.degree();
        const std::uint64_t size = ring.size();
        if (size == 0) throw std::overflow_error("count_affine: q^n exceeds 64 bits");
        const auto fc = f.coeffs();
        std::vector<std::uint64_t> scratch(2 * n);
        std::vector<Coeff> x(n), v(n), tmp(n);
        auto eval = [&](std::span<const Coeff> pt, std::span<Coeff> out) {
            std::fill(out.begin(), out.end(), 0);
            for (std::size_t j = fc.size(); j-- > 0;) {
                ring.mul_digits(out, pt, tmp, scratch);
                std::copy(tmp.begin(), tmp.end(), out.begin());
                out[0] = field_.add(out[0], fc[j]);
            }
        };
        auto chi = [&](std::span<const Coeff> val) -> int {
            if (ring.has_table()) return ring.table()[static_cast<std::size_t>(ring.encode_digits(val))];
            bool zero = true;
            for (Coeff c : val) zero = zero && c == 0;
            return zero ? 0 : ring.euler_criterion(FqPoly(field_, std::vector<Coeff>(val.begin(), val.end())));
        };
        std::int64_t char_sum = 0;
        const std::uint64_t lines = size / q;
        const bool use_differences = q > static_cast<std::uint32_t>(d) + 1;
        std::vector<Coeff> diff(n * (static_cast<std::size_t>(d) + 1));
        for (std::uint64_t line = 0; line < lines; ++line) {
            std::uint64_t t = line;
            x[0] = 0;
            for (std::size_t i = 1; i < n; ++i) {
                x[i] = static_cast<Coeff>(t % q);
                t /= q;
            }
            if (!use_differences) {
                for (std::uint32_t c = 0; c < q; ++c) {
                    x[0] = c;
                    eval(x, v);
                    char_sum += chi(v);
                }
                continue;
            }
            for (int c = 0; c <= d; ++c) {
                x[0] = static_cast<Coeff>(c);
                eval(x, std::span<Coeff>(diff).subspan(static_cast<std::size_t>(c) * n, n));
            }
            for (int k = 1; k <= d; ++k)
                for (int i = d; i >= k; --i)
                    for (std::size_t t2 = 0; t2 < n; ++t2) {
                        Coeff& hi = diff[static_cast<std::size_t>(i) * n + t2];
                        hi = field_.sub(hi, diff[static_cast<std::size_t>(i - 1) * n + t2]);
                    }
            for (std::uint32_t c = 0; c < q; ++c) {
                char_sum += chi(std::span<const Coeff>(diff).subspan(0, n));
                for (int k = 0; k < d; ++k)
                    for (std::size_t t2 = 0; t2 < n; ++t2) {
                        Coeff& lo = diff[static_cast<std::size_t>(k) * n + t2];
                        lo = field_.add(lo, diff[static_cast<std::size_t>(k + 1) * n + t2]);
                    }
            }
        }
        return static_cast<std::uint64_t>(static_cast<std::int64_t>(size) + char_sum);
    }

    FieldCtx field_;
    int max_d_;
    Options opt_;
    std::optional<SymbolTableCache> symbols_;
    std::vector<ResidueRing> rings_;
    std::vector<std::size_t> sieve_offsets_;
    std::vector<std::uint32_t> sieve_prime_;
    std::vector<std::uint32_t> sieve_cofactor_;
};

/// One-shot convenience; builds the tables the method needs.
inline LPolynomial l_polynomial(const FqPoly& f, LMethod m) {
    LFunctionEngine::Options opt;
    opt.newton = m == LMethod::newton;
    opt.charsum = m == LMethod::charsum;
    opt.pointcount = m == LMethod::pointcount;
    LFunctionEngine engine(f.field(), std::max(f.degree(), 3), opt);
    return engine.compute(f, m);
}

/// -s_n == Lambda-sum_n + [d even], with s_n recovered from the coefficients.
inline bool explicit_formula_check(const FqPoly& f, const LPolynomial& l, int n) {
    if (n < 1 || n > l.g) throw std::invalid_argument("explicit_formula_check: need 1 <= n <= g");
    const auto p = power_sums_from_coefficients(l.coeffs, n);
    return -p[static_cast<std::size_t>(n - 1)] == BigInt(lambda_char_sum(f, n) + (f.degree() % 2 == 0 ? 1 : 0));
}

inline bool explicit_formula_check(const SymbolTableCache& cache, std::span<const std::int8_t> syms, int d, const LPolynomial& l, int n) {
    const auto p = power_sums_from_coefficients(l.coeffs, n);
    return -p[static_cast<std::size_t>(n - 1)] == BigInt(cache.lambda_char_sum(syms, n) + (d % 2 == 0 ? 1 : 0));
}

}  // namespace hyperjac

#endif  // HYPERJAC_LFUNC_HPP
