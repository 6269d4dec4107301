// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [--threads N] [--only K]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hyperjac/bounds.hpp"
#include "hyperjac/family.hpp"
#include "hyperjac/lfunc.hpp"
#include "hyperjac/moments.hpp"

using namespace hyperjac;

namespace {

unsigned g_threads = 8;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

std::string fmt(double v) { return format_double(v); }

// Curves of the small exhaustive families, computed once and shared by criteria 1-4.
struct SmallFamilyCurve {
    FqPoly f;
    LPolynomial newton, charsum, pointcount;
};

struct SmallFamily {
    std::uint32_t q;
    int d;
    std::vector<SmallFamilyCurve> curves;
    std::string error;  // an invariant failure raised while computing
};

std::vector<SmallFamily> g_small;

void build_small_families() {
    for (std::uint32_t q : {3u, 5u}) {
        const FieldCtx field(q);
        LFunctionEngine::Options opt;
        opt.charsum = opt.pointcount = true;
        const LFunctionEngine e(field, 7, opt);
        for (int d = 3; d <= 7; ++d) {
            SmallFamily fam{q, d, {}, {}};
            for_each_monic(field, d, MonicFilter::squarefree, [&](const FqPoly& f, std::uint64_t) {
                try {
                    fam.curves.push_back({f, e.compute(f, LMethod::newton), e.compute(f, LMethod::charsum), e.compute(f, LMethod::pointcount)});
                } catch (const std::exception& ex) {
                    if (fam.error.empty()) fam.error = format_poly(f) + ": " + ex.what();
                }
            });
            g_small.push_back(std::move(fam));
        }
    }
}

// Sweeps at q = 3 shared by criteria 4, 7 and 12.
std::map<int, SweepSummary> g_fixed_q;
std::map<int, std::string> g_fixed_q_csv;

SweepConfig fixed_q_config(int d, unsigned threads) {
    SweepConfig c;
    c.q = 3;
    c.d = d;
    c.threads = threads;
    return c;
}

const SweepSummary& fixed_q_sweep(int d) {
    auto it = g_fixed_q.find(d);
    if (it == g_fixed_q.end()) {
        const SweepConfig c = fixed_q_config(d, g_threads);
        it = g_fixed_q.emplace(d, sweep(c)).first;
        g_fixed_q_csv[d] = summary_csv(it->second, c);
    }
    return it->second;
}

SweepConfig gaussian_config() {
    SweepConfig c;
    c.q = 61;
    c.d = 7;
    c.mode = SweepMode::sample;
    c.samples = 2000;
    c.seed = 20240601;
    c.method = LMethod::pointcount;
    c.threads = g_threads;
    return c;
}

Outcome criterion1() {
    Outcome o;
    std::uint64_t n = 0;
    for (const auto& fam : g_small) {
        o.require(fam.error.empty(), "q=" + std::to_string(fam.q) + " d=" + std::to_string(fam.d) + " " + fam.error);
        const std::uint64_t expect = monic_count(fam.q, fam.d) - monic_count(fam.q, fam.d - 1);
        o.require(fam.curves.size() == expect, "family size at q=" + std::to_string(fam.q) + " d=" + std::to_string(fam.d));
        for (const auto& c : fam.curves) {
            ++n;
            o.require(c.newton.coeffs == c.pointcount.coeffs, "newton != pointcount at " + format_poly(c.f));
            o.require(c.newton.coeffs == c.charsum.coeffs, "newton != charsum at " + format_poly(c.f));
        }
    }
    o.detail << n << " curves, q in {3,5}, d in 3..7, three methods identical";
    return o;
}

Outcome criterion2() {
    Outcome o;
    std::uint64_t checks = 0;
    for (const auto& fam : g_small)
        for (const auto& c : fam.curves)
            for (int n = 1; n <= c.pointcount.g; ++n) {
                ++checks;
                o.require(explicit_formula_check(c.f, c.pointcount, n), format_poly(c.f) + " n=" + std::to_string(n));
            }
    o.detail << checks << " identities -s_n = Lambda-sum_n + [d even] against point-count power sums";
    return o;
}

Outcome criterion3() {
    Outcome o;
    double worst = 0.0;
    std::uint64_t n = 0;
    for (const auto& fam : g_small)
        for (const auto& c : fam.curves) {
            ++n;
            try {
                for (const LPolynomial* l : {&c.newton, &c.charsum, &c.pointcount}) check_structure(*l);
            } catch (const std::exception& e) {
                o.require(false, format_poly(c.f) + ": " + e.what());
            }
            o.require(c.newton.coeffs.front() == 1, "a_0 != 1 at " + format_poly(c.f));
            const double dev = max_root_modulus_deviation(c.newton);
            worst = std::max(worst, dev);
            o.require(dev <= 1e-6, "root modulus at " + format_poly(c.f));
        }
    o.detail << n << " curves; exact divisions raised nothing; max |(|alpha| / sqrt q) - 1| = " << fmt(worst);
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::uint64_t n = 0, bad = 0;
    for (const auto& fam : g_small)
        for (const auto& c : fam.curves) {
            ++n;
            const Verdict v = verify_curve(make_curve_record(c.f, c.newton));
            if (!v.ok()) ++bad;
            o.require(v.ok(), format_poly(c.f) + ": " + v.message);
        }
    for (int d : {9, 11, 13}) {
        const SweepSummary& s = fixed_q_sweep(d);
        n += s.count;
        bad += s.violations;
        o.require(s.violations == 0, "q=3 d=" + std::to_string(d) + ": " + s.first_violation);
    }
    o.detail << n << " curves checked against the Weil interval and the genus bound, " << bad << " violations";
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (std::uint32_t q : {3u, 5u})
        for (int d = 2; d <= 7; ++d) {
            std::uint64_t n = 0;
            for_each_monic(FieldCtx(q), d, MonicFilter::all, [&](const FqPoly& f, std::uint64_t) { n += is_squarefree(f); });
            o.require(n == monic_count(q, d) - monic_count(q, d - 1), "squarefree count q=" + std::to_string(q) + " d=" + std::to_string(d));
        }
    for (std::uint32_t q : {3u, 5u})
        for (int n = 1; n <= (q == 3 ? 6 : 4); ++n) {
            std::uint64_t irr = 0;
            for_each_monic(FieldCtx(q), n, MonicFilter::all, [&](const FqPoly& f, std::uint64_t) { irr += is_irreducible(f); });
            o.require(prime_count_exact(q, n) == BigInt(irr), "prime count q=" + std::to_string(q) + " n=" + std::to_string(n));
        }
    o.detail << "#H = q^d - q^(d-1) for q in {3,5}, d in 2..7; prime counts match enumeration";
    return o;
}

Outcome criterion6() {
    Outcome o;
    double worst_h1 = 0.0;
    for (std::uint32_t q : {3u, 5u, 7u}) {
        const double err = std::fabs(h_lambda(1, TruncationCtx(q, 30)).value + std::log1p(-1.0 / q));
        worst_h1 = std::max(worst_h1, err);
        o.require(err <= 1e-12, "h(1) identity at q=" + std::to_string(q));
    }
    for (std::uint32_t q : {3u, 5u, 7u, 101u}) {
        const Bounded h2 = h_lambda(2, TruncationCtx(q, 12));
        o.require(h2.value + h2.tail_bound <= 10.0 / q, "h(2) bound at q=" + std::to_string(q));
    }
    double min_margin = INFINITY;
    for (const auto& r : lemma_inequalities(TruncationCtx(3, 12), 8)) {
        min_margin = std::min(min_margin, r.margin);
        o.require(r.certified(), r.name);
    }
    double worst_eta = 0.0;
    for (std::uint32_t q : {3u, 7u})
        for (int deg = 1; deg <= 4; ++deg) {
            const UV uv = u_v(deg, q);
            for (int l = 0; l <= 12; ++l) {
                const EtaTau et = eta_tau(l, deg, q);
                worst_eta = std::max({worst_eta, std::fabs(et.eta - 0.5 * (std::pow(uv.u, l) + std::pow(-uv.v, l))),
                                      std::fabs(et.eta + et.tau - std::pow(uv.u, l))});
            }
        }
    o.require(worst_eta <= 1e-12, "eta/tau recursion");
    o.detail << "h(1) err " << fmt(worst_h1) << "; min certified margin " << fmt(min_margin) << "; eta/tau err " << fmt(worst_eta);
    return o;
}

Outcome criterion7() {
    Outcome o;
    const TruncationCtx ctx(3, 12);
    const double h1 = H_moment(1, ctx).value, h2 = H_moment(2, ctx).value;
    double prev1 = INFINITY, prev2 = INFINITY, e1 = 0, e2 = 0;
    for (int d : {9, 11, 13}) {
        const SweepSummary& s = fixed_q_sweep(d);
        e1 = std::fabs(empirical_moment(s, 1) - h1);
        e2 = std::fabs(empirical_moment(s, 2) - h2);
        o.detail << "d=" << d << ": |<N>-H(1)|=" << fmt(e1) << " |<N^2>-H(2)|=" << fmt(e2) << "; ";
        o.require(e1 < prev1 && e2 < prev2, "moment errors not strictly decreasing at d=" + std::to_string(d));
        prev1 = e1;
        prev2 = e2;
    }
    o.require(e1 <= 0.02, "first moment at d=13");
    o.require(e2 <= 0.02, "second moment at d=13");
    const SweepSummary& s13 = fixed_q_sweep(13);
    for (double t : {0.5, 1.0, 2.0}) {
        const double diff = std::abs(empirical_charfun(s13, t) - charfun_truncated(t, ctx, 8).value);
        o.detail << "|phi_emp - phi|(" << fmt(t) << ")=" << fmt(diff) << " ";
        o.require(diff <= 0.05, "charfun at t=" + fmt(t));
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    const SweepConfig c = gaussian_config();
    const SweepSummary s = sweep(c);
    const double m1 = empirical_moment(s, 1), m2 = empirical_moment(s, 2);
    const double mean = std::sqrt(61.0) * m1, var = 61.0 * (m2 - m1 * m1), ks = ks_statistic(s);
    o.detail << "count " << s.count << ", mean " << fmt(mean) << ", variance " << fmt(var) << ", KS " << fmt(ks)
             << " (histogram resolution 1/" << c.cdf_bins << ")";
    o.require(s.count == 2000, "sample count");
    o.require(s.violations == 0, "bound violation: " + s.first_violation);
    o.require(mean >= -0.15 && mean <= 0.15, "scaled mean");
    o.require(var >= 0.70 && var <= 1.30, "scaled variance");
    o.require(ks <= 0.10, "KS");
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (std::uint32_t q : {101u, 401u, 1009u}) {
        const TruncationCtx ctx(q, 6);
        const double lim = 1.0 / std::sqrt(static_cast<double>(q)), qd = q;
        const double e2 = std::fabs(qd * H_moment(2, ctx).value - 1.0);
        const double e4 = std::fabs(qd * qd * H_moment(4, ctx).value - 3.0);
        const double o1 = qd * H_moment(1, ctx).value, o3 = qd * qd * H_moment(3, ctx).value;
        o.detail << "q=" << q << ": |qH(2)-1|=" << fmt(e2) << " |q^2H(4)-3|=" << fmt(e4) << " qH(1)=" << fmt(o1)
                 << " q^2H(3)=" << fmt(o3) << "; ";
        o.require(e2 <= 10 * lim, "H(2) at q=" + std::to_string(q));
        o.require(e4 <= 30 * lim, "H(4) at q=" + std::to_string(q));
        o.require(o1 <= 10 && o3 <= 10, "odd moments at q=" + std::to_string(q));
    }
    return o;
}

// Ordered tuples of distinct primes from an explicit degree list, by nested loops.
double nested_loop_H(int s, const std::vector<int>& degrees, std::uint32_t q) {
    auto weight = [&](int lambda, int degree) {
        const double x = std::pow(static_cast<double>(q), -degree);
        const double u = -std::log1p(-x), v = std::log1p(x);
        return (std::pow(u, lambda) + std::pow(-v, lambda)) / (std::tgamma(lambda + 1.0) * (1.0 + x));
    };
    double total = 0.0;
    std::vector<int> lam;
    std::function<void(int)> comps = [&](int left) {
        if (left == 0) {
            const std::size_t r = lam.size();
            std::vector<std::size_t> idx;
            double acc = 0.0;
            std::function<void()> loop = [&] {
                if (idx.size() == r) {
                    double p = 1.0;
                    for (std::size_t i = 0; i < r; ++i) p *= weight(lam[i], degrees[idx[i]]);
                    acc += p;
                    return;
                }
                for (std::size_t j = 0; j < degrees.size(); ++j) {
                    if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
                    idx.push_back(j);
                    loop();
                    idx.pop_back();
                }
            };
            loop();
            total += std::tgamma(s + 1.0) / (std::pow(2.0, static_cast<double>(r)) * std::tgamma(static_cast<double>(r) + 1.0)) * acc;
            return;
        }
        for (int first = 1; first <= left; ++first) {
            lam.push_back(first);
            comps(left - first);
            lam.pop_back();
        }
    };
    comps(s);
    return total;
}

Outcome criterion10() {
    Outcome o;
    std::vector<int> degrees;
    for (int n = 1; n <= 2; ++n)
        for (std::size_t i = 0; i < enumerate_monic(FieldCtx(3), n, MonicFilter::irreducible).size(); ++i) degrees.push_back(n);
    o.require(degrees.size() == 6, "six primes of degree <= 2 over F_3");
    double worst = 0.0;
    for (int s = 1; s <= 4; ++s) {
        const double diff = std::fabs(H_moment(s, TruncationCtx(3, 2)).value - nested_loop_H(s, degrees, 3));
        worst = std::max(worst, diff);
        o.require(diff <= 1e-12, "s=" + std::to_string(s));
    }
    o.detail << "max |set-partition - nested loops| over s <= 4: " << fmt(worst);
    return o;
}

Outcome criterion11() {
    Outcome o;
    const FieldCtx f(3);
    double worst_ratio = 0.0, worst_dev = 0.0;
    for (int d = 3; d <= 5; ++d)
        for (int k = 1; k <= 2; ++k)
            for (const auto& p : enumerate_monic(f, k, MonicFilter::irreducible)) {
                const CharacterAverageReport a = character_average_check(p, d);
                worst_ratio = std::max(worst_ratio, a.average / a.bound);
                o.require(a.holds(), "character average f=" + format_poly(p) + " d=" + std::to_string(d));
                const CoprimeDensityReport c = coprime_density_check(p, d);
                worst_dev = std::max(worst_dev, c.normalized_deviation);
                o.require(c.normalized_deviation <= 10.0, "coprime density f=" + format_poly(p) + " d=" + std::to_string(d));
            }
    o.detail << "max average/bound " << fmt(worst_ratio) << "; max normalized coprime deviation " << fmt(worst_dev);
    return o;
}

Outcome criterion12() {
    Outcome o;
    fixed_q_sweep(9);
    for (unsigned t : {1u, 4u, 8u}) {
        const SweepConfig c = fixed_q_config(9, t);
        o.require(summary_csv(sweep(c), c) == g_fixed_q_csv[9], "summary differs with " + std::to_string(t) + " workers");
    }
    o.detail << "q=3 d=9 summary CSV byte-identical for 1, 4, 8 workers";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
            g_threads = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
        } else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--threads N] [--only K]\n");
            return 2;
        }
    }
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"three-path L-polynomial exactness", criterion1},
        {"explicit formula", criterion2},
        {"structural invariants", criterion3},
        {"Weil and genus bounds", criterion4},
        {"counting identities", criterion5},
        {"analytic identities and inequalities", criterion6},
        {"fixed-q convergence", criterion7},
        {"Gaussian regime", criterion8},
        {"large-q moments", criterion9},
        {"distinct-tuple oracle", criterion10},
        {"character average and coprime density", criterion11},
        {"reproducibility", criterion12},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        if (only && only != k) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            if (k <= 4 && g_small.empty()) build_small_families();
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d: %s [%s] (%.1f s)\n", o.pass ? "PASS" : "FAIL", k, criteria[i].first, o.detail.str().c_str(), secs);
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
