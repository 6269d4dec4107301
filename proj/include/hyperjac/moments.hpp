#ifndef HYPERJAC_MOMENTS_HPP
#define HYPERJAC_MOMENTS_HPP

// Limiting moments H(s) of N_F as prime sums, the truncated characteristic
// function, and the h(lambda) inequalities.  Every sum is grouped by prime
// degree: a degree-n prime contributes count_n times one per-degree term.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperjac/bigint.hpp"
#include "hyperjac/ffield.hpp"

namespace hyperjac {

/// u = -log(1 - q^-n), v = log(1 + q^-n).
struct UV {
    double u = 0.0;
    double v = 0.0;
};

inline UV u_v(int degree, std::uint32_t q) {
    if (degree < 1) throw std::invalid_argument("u_v: degree must be >= 1");
    const double x = std::pow(static_cast<double>(q), -degree);
    return {-std::log1p(-x), std::log1p(x)};
}

/// u^lambda + (-1)^lambda v^lambda without cancellation for odd lambda.
inline double signed_power_sum(int degree, std::uint32_t q, int lambda) {
    const double x = std::pow(static_cast<double>(q), -degree);
    const UV uv{-std::log1p(-x), std::log1p(x)};
    if (lambda % 2 == 0) return std::pow(uv.u, lambda) + std::pow(uv.v, lambda);
    const double diff = -std::log1p(-x * x);  // u - v
    double s = 0.0;
    for (int k = 0; k < lambda; ++k) s += std::pow(uv.u, lambda - 1 - k) * std::pow(uv.v, k);
    return diff * s;
}

struct EtaTau {
    double eta = 1.0;
    double tau = 0.0;
};

/// Even/odd parity split of (-log(1 - |P|^-1))^lambda via the two-term recursion.
inline EtaTau eta_tau(int lambda, int degree, std::uint32_t q) {
    if (lambda < 0) throw std::invalid_argument("eta_tau: lambda must be >= 0");
    const double x = std::pow(static_cast<double>(q), -degree);
    const double eta1 = -0.5 * std::log1p(-x * x);
    const double tau1 = -std::log1p(-x) - eta1;
    EtaTau cur;
    for (int l = 1; l <= lambda; ++l) cur = {eta1 * cur.eta + tau1 * cur.tau, eta1 * cur.tau + tau1 * cur.eta};
    return cur;
}

/// Primes of degree <= D grouped by degree, with tail bounds for degrees > D.
/// Tails use pi_q(n) <= q^n / n, u - v <= 2 x^2 and u, v <= 2x for x = q^-n <= 1/3.
class TruncationCtx {
public:
    TruncationCtx(std::uint32_t q, int max_degree) : q_(q), d_(max_degree) {
        FieldCtx check(q);
        (void)check;
        if (max_degree < 1) throw std::invalid_argument("TruncationCtx: D must be >= 1");
        for (int n = 1; n <= max_degree; ++n) {
            counts_.push_back(static_cast<double>(static_cast<long double>(prime_count_exact(q, n))));
            x_.push_back(std::pow(static_cast<double>(q), -n));
        }
    }

    /// Explicit groups, e.g. a hand-built prime list; no tail beyond them.
    TruncationCtx(std::uint32_t q, std::vector<int> degrees_per_prime, bool)
        : q_(q), d_(0), exact_list_(true) {
        for (int deg : degrees_per_prime) {
            if (deg < 1) throw std::invalid_argument("TruncationCtx: degree must be >= 1");
            d_ = std::max(d_, deg);
        }
        counts_.assign(static_cast<std::size_t>(d_), 0.0);
        for (int deg : degrees_per_prime) counts_[static_cast<std::size_t>(deg - 1)] += 1.0;
        for (int n = 1; n <= d_; ++n) x_.push_back(std::pow(static_cast<double>(q), -n));
    }

    std::uint32_t q() const noexcept { return q_; }
    int max_degree() const noexcept { return d_; }
    double count(int n) const { return counts_.at(static_cast<std::size_t>(n - 1)); }
    double norm_inverse(int n) const { return x_.at(static_cast<std::size_t>(n - 1)); }
    bool has_tail() const noexcept { return !exact_list_; }

    /// Bound on sum over primes of degree > D of |u^lambda + (-1)^lambda v^lambda|.
    double tail_power_sum(int lambda) const {
        if (exact_list_) return 0.0;
        const double qd = q_;
        const double first = std::pow(qd, -(d_ + 1));
        if (lambda == 1) return 2.0 / (d_ + 1) * first / (1.0 - 1.0 / qd);
        const double ratio = std::pow(qd, 1 - lambda);
        return 2.0 * std::pow(2.0, lambda) / (d_ + 1) * std::pow(first, lambda - 1) / (1.0 - ratio);
    }

    /// Bound on sum over primes of degree > D of |g_P(t)| for the charfun factor.
    double tail_charfun(double t) const {
        if (exact_list_) return 0.0;
        const double qd = q_;
        const double c = 1.25 * t * t + std::fabs(t);
        return c / (d_ + 1) * std::pow(qd, -(d_ + 1)) / (1.0 - 1.0 / qd);
    }

private:
    std::uint32_t q_;
    int d_;
    bool exact_list_ = false;
    std::vector<double> counts_;
    std::vector<double> x_;
};

struct Bounded {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// h(lambda) = sum_P (u_P^lambda + (-1)^lambda v_P^lambda).
inline Bounded h_lambda(int lambda, const TruncationCtx& ctx) {
    if (lambda < 1) throw std::invalid_argument("h_lambda: lambda must be >= 1");
    double s = 0.0, c = 0.0;
    for (int n = ctx.max_degree(); n >= 1; --n) {
        // smallest terms first
        const double term = ctx.count(n) * signed_power_sum(n, ctx.q(), lambda);
        const double y = term - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return {s, ctx.tail_power_sum(lambda)};
}

/// Sum over ordered tuples of pairwise distinct primes (P_1..P_r) of prod f_i(P_i),
/// where f_i depends on the prime only through its degree (f[i][n-1]).  Uses
/// set-partition inclusion-exclusion; the recursion always extracts the block
/// holding the lowest remaining index, so cost is O(3^r D).
template <class T>
T distinct_tuple_sum(const std::vector<std::vector<T>>& f, const TruncationCtx& ctx) {
    const std::size_t r = f.size();
    if (r == 0) return T(1);
    if (r > 16) throw std::invalid_argument("distinct_tuple_sum: at most 16 factors");
    const std::uint32_t full = (1U << r) - 1U;
    const int D = ctx.max_degree();
    std::vector<T> block(full + 1, T(0));
    std::vector<T> prod(static_cast<std::size_t>(D));
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::fill(prod.begin(), prod.end(), T(1));
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1U)
                for (int n = 0; n < D; ++n) prod[static_cast<std::size_t>(n)] *= f[i][static_cast<std::size_t>(n)];
        T s(0);
        for (int n = D; n >= 1; --n) s += ctx.count(n) * prod[static_cast<std::size_t>(n - 1)];
        block[mask] = s;
    }
    // Moebius coefficient of a block of size k in the partition lattice.
    std::vector<double> coef(r + 1, 1.0);
    for (std::size_t k = 2; k <= r; ++k) coef[k] = -coef[k - 1] * static_cast<double>(k - 1);
    std::vector<T> dp(full + 1, T(0));
    dp[0] = T(1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1U);
        const std::uint32_t rest = mask ^ low;
        T acc(0);
        // blocks B = low | sub for every subset sub of rest
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t b = low | sub;
            acc += coef[static_cast<std::size_t>(std::popcount(b))] * block[b] * dp[mask ^ b];
            if (sub == 0) break;
        }
        dp[mask] = acc;
    }
    return dp[full];
}

struct MomentReport {
    int s = 0;
    int D = 0;
    double value = 0.0;
    double tail_bound = 0.0;
    double asymptotic_main = 0.0;
    std::optional<double> oracle_value;
};

/// [s even] s! / (2^{s/2} (s/2)!) q^{-s/2}.
inline double H_asymptotic(int s, double q) {
    if (s < 1) throw std::invalid_argument("H_asymptotic: s must be >= 1");
    if (s % 2) return 0.0;
    double c = 1.0;
    for (int k = s / 2 + 1; k <= s; ++k) c *= k;
    return c / std::pow(2.0, s / 2) * std::pow(q, -s / 2.0);
}

namespace detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/// All compositions of s into exactly r positive parts.
inline void compositions(int s, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (r == 0) {
        if (s == 0) out.push_back(cur);
        return;
    }
    for (int first = 1; first <= s - (r - 1); ++first) {
        cur.push_back(first);
        compositions(s - first, r - 1, cur, out);
        cur.pop_back();
    }
}

/// E[(sum_P X_P)^s] for independent X_P taking u_P, -v_P each with probability
/// 1/(2(1 + |P|^-1)), else 0; accumulated through cumulants per degree.
inline double independent_model_moment(int s, const TruncationCtx& ctx) {
    std::vector<double> kappa(static_cast<std::size_t>(s) + 1, 0.0);
    std::vector<std::vector<double>> binom(static_cast<std::size_t>(s) + 1, std::vector<double>(static_cast<std::size_t>(s) + 1, 0.0));
    for (int n = 0; n <= s; ++n) {
        binom[static_cast<std::size_t>(n)][0] = 1.0;
        for (int k = 1; k <= n; ++k)
            binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                (k <= n - 1 ? binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] : 0.0);
    }
    for (int n = 1; n <= ctx.max_degree(); ++n) {
        if (ctx.count(n) == 0.0) continue;
        const double x = ctx.norm_inverse(n);
        const double a = 1.0 / (2.0 * (1.0 + x));
        std::vector<double> mu(static_cast<std::size_t>(s) + 1), k(static_cast<std::size_t>(s) + 1);
        for (int j = 1; j <= s; ++j) mu[static_cast<std::size_t>(j)] = a * signed_power_sum(n, ctx.q(), j);
        for (int m = 1; m <= s; ++m) {
            double v = mu[static_cast<std::size_t>(m)];
            for (int j = 1; j < m; ++j)
                v -= binom[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)] * k[static_cast<std::size_t>(j)] *
                     mu[static_cast<std::size_t>(m - j)];
            k[static_cast<std::size_t>(m)] = v;
            kappa[static_cast<std::size_t>(m)] += ctx.count(n) * v;
        }
    }
    std::vector<double> m(static_cast<std::size_t>(s) + 1, 0.0);
    m[0] = 1.0;
    for (int n = 1; n <= s; ++n) {
        double v = 0.0;
        for (int j = 1; j <= n; ++j)
            v += binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j - 1)] * kappa[static_cast<std::size_t>(j)] *
                 m[static_cast<std::size_t>(n - j)];
        m[static_cast<std::size_t>(n)] = v;
    }
    return m[static_cast<std::size_t>(s)];
}

}  // namespace detail

inline constexpr int kMaxMomentOrder = 10;

/// H(s) = sum_r s!/(2^r r!) sum over compositions (lambda_1..lambda_r) of s of the
/// distinct-tuple sum of prod w_{lambda_i}(P_i), with
/// w_lambda(P) = (u_P^lambda + (-1)^lambda v_P^lambda) / (lambda! (1 + |P|^-1)).
inline MomentReport H_moment(int s, const TruncationCtx& ctx, bool with_oracle = true) {
    if (s < 1 || s > kMaxMomentOrder) throw std::out_of_range("H_moment: s must lie in [1, 10]");
    const int D = ctx.max_degree();
    // weights[lambda][n-1] and their truncation tails
    std::vector<std::vector<double>> w(static_cast<std::size_t>(s) + 1, std::vector<double>(static_cast<std::size_t>(D)));
    std::vector<double> wsum(static_cast<std::size_t>(s) + 1, 0.0), wtail(static_cast<std::size_t>(s) + 1, 0.0);
    for (int l = 1; l <= s; ++l) {
        const double lf = detail::factorial(l);
        for (int n = 1; n <= D; ++n) {
            const double val = signed_power_sum(n, ctx.q(), l) / (lf * (1.0 + ctx.norm_inverse(n)));
            w[static_cast<std::size_t>(l)][static_cast<std::size_t>(n - 1)] = val;
            wsum[static_cast<std::size_t>(l)] += ctx.count(n) * val;
        }
        wtail[static_cast<std::size_t>(l)] = ctx.tail_power_sum(l) / lf;
    }
    MomentReport rep;
    rep.s = s;
    rep.D = D;
    const double sf = detail::factorial(s);
    for (int r = 1; r <= s; ++r) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        detail::compositions(s, r, cur, comps);
        const double pref = sf / (std::pow(2.0, r) * detail::factorial(r));
        double total = 0.0, tail = 0.0;
        for (const auto& lam : comps) {
            std::vector<std::vector<double>> f;
            for (int l : lam) f.push_back(w[static_cast<std::size_t>(l)]);
            total += distinct_tuple_sum(f, ctx);
            // tuples with some prime beyond D: sum_i T_i prod_{j != i} (S_j + T_j)
            for (std::size_t i = 0; i < lam.size(); ++i) {
                double term = wtail[static_cast<std::size_t>(lam[i])];
                for (std::size_t j = 0; j < lam.size(); ++j)
                    if (j != i) term *= wsum[static_cast<std::size_t>(lam[j])] + wtail[static_cast<std::size_t>(lam[j])];
                tail += term;
            }
        }
        rep.value += pref * total;
        rep.tail_bound += pref * tail;
    }
    rep.asymptotic_main = H_asymptotic(s, ctx.q());
    if (with_oracle) rep.oracle_value = detail::independent_model_moment(s, ctx);
    return rep;
}

struct CharfunReport {
    double t = 0.0;
    std::complex<double> value;
    double last_term = 0.0;   // |r_cap-th term|, convergence indicator
    double tail_bound = 0.0;  // r-cap remainder plus prime-truncation error
};

/// phi(t) = 1 + sum_{r <= r_cap} (1/r!) sum over distinct (P_1..P_r) of prod g_{P_i}(t),
/// g_P(t) = ((1 - |P|^-1)^{-it} + (1 + |P|^-1)^{-it} - 2) / (2 (1 + |P|^-1)).
inline CharfunReport charfun_truncated(double t, const TruncationCtx& ctx, int r_cap = 8) {
    if (r_cap < 1 || r_cap > 16) throw std::out_of_range("charfun_truncated: r_cap must lie in [1, 16]");
    using C = std::complex<double>;
    const int D = ctx.max_degree();
    std::vector<C> g(static_cast<std::size_t>(D));
    double abs_sum = 0.0;
    for (int n = 1; n <= D; ++n) {
        const UV uv = u_v(n, ctx.q());
        const double x = ctx.norm_inverse(n);
        // e^{ia} - 1 = -2 sin^2(a/2) + i sin a keeps precision for tiny a
        const C a(-2.0 * std::pow(std::sin(t * uv.u / 2), 2), std::sin(t * uv.u));
        const C b(-2.0 * std::pow(std::sin(t * uv.v / 2), 2), -std::sin(t * uv.v));
        g[static_cast<std::size_t>(n - 1)] = (a + b) / (2.0 * (1.0 + x));
        abs_sum += ctx.count(n) * std::abs(g[static_cast<std::size_t>(n - 1)]);
    }
    CharfunReport rep;
    rep.t = t;
    rep.value = C(1.0);
    double rf = 1.0;
    for (int r = 1; r <= r_cap; ++r) {
        rf *= r;
        const std::vector<std::vector<C>> f(static_cast<std::size_t>(r), g);
        const C term = distinct_tuple_sum(f, ctx) / rf;
        rep.value += term;
        rep.last_term = std::abs(term);
    }
    // |e_r| <= S^r / r!; prime truncation error <= exp(S) (exp(T) - 1)
    double rem = 0.0, p = 1.0;
    for (int r = 1; r <= r_cap + 60; ++r) {
        p *= abs_sum / r;
        if (r > r_cap) rem += p;
    }
    rep.tail_bound = rem + std::exp(abs_sum) * std::expm1(ctx.tail_charfun(t));
    return rep;
}

/// Certified interval for h(lambda): relative slack covers floating rounding.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

inline constexpr double kCertifiedSlack = 1e-13;

inline Interval h_interval(int lambda, const TruncationCtx& ctx) {
    const Bounded b = h_lambda(lambda, ctx);
    return {b.value * (1.0 - kCertifiedSlack), (b.value + b.tail_bound) * (1.0 + kCertifiedSlack)};
}

struct InequalityResult {
    std::string name;
    double lhs_upper = 0.0;
    double rhs_lower = 0.0;
    double margin = 0.0;  // rhs_lower - lhs_upper, > 0 when certified
    bool certified() const noexcept { return margin > 0.0; }
};

/// h(2+l) < h(2) h(l) for l = 2..lambda_max, h(3) < h(2)^{3/2}, h(1) < h(2)^{1/2},
/// h(1) h(3) < h(2)^2, each certified as upper(lhs) < lower(rhs).
inline std::vector<InequalityResult> lemma_inequalities(const TruncationCtx& ctx, int lambda_max = 8) {
    std::vector<Interval> h(static_cast<std::size_t>(lambda_max) + 3);
    for (int l = 1; l <= lambda_max + 2; ++l) h[static_cast<std::size_t>(l)] = h_interval(l, ctx);
    auto mk = [](std::string name, double up, double lo) { return InequalityResult{std::move(name), up, lo, lo - up}; };
    std::vector<InequalityResult> out;
    for (int l = 2; l <= lambda_max; ++l)
        out.push_back(mk("h(" + std::to_string(2 + l) + ") < h(2) h(" + std::to_string(l) + ")", h[static_cast<std::size_t>(2 + l)].hi,
                         h[2].lo * h[static_cast<std::size_t>(l)].lo));
    out.push_back(mk("h(3) < h(2)^(3/2)", h[3].hi, std::pow(h[2].lo, 1.5)));
    out.push_back(mk("h(1) < h(2)^(1/2)", h[1].hi, std::sqrt(h[2].lo)));
    out.push_back(mk("h(1) h(3) < h(2)^2", h[1].hi * h[3].hi, h[2].lo * h[2].lo));
    return out;
}

struct MomentGrowthReport {
    int s = 0;
    std::uint32_t q = 0;
    double h_value = 0.0;
    double bracket = 0.0;
    double ratio = 0.0;
};

/// H(s) against (4 s log log s / (sqrt q log s))^s; the ratio is reported.
inline MomentGrowthReport moment_growth_report(int s, const TruncationCtx& ctx) {
    if (s < 4) throw std::invalid_argument("moment_growth_report: s must be >= 4");
    MomentGrowthReport r;
    r.s = s;
    r.q = ctx.q();
    r.h_value = H_moment(s, ctx, false).value;
    const double ls = std::log(static_cast<double>(s));
    r.bracket = std::pow(4.0 * s * std::log(ls) / (std::sqrt(static_cast<double>(ctx.q())) * ls), s);
    r.ratio = r.h_value / r.bracket;
    return r;
}

}  // namespace hyperjac

#endif  // HYPERJAC_MOMENTS_HPP
