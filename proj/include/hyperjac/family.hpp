#ifndef HYPERJAC_FAMILY_HPP
#define HYPERJAC_FAMILY_HPP

// Exhaustive and sampled sweeps over monic squarefree F of degree d, with
// streaming statistics of N_F.  Work is cut into fixed-size chunks of the
// enumeration (or sample) index; chunk partials are merged in chunk order, so
// results do not depend on the worker count or on scheduling.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hyperjac/bounds.hpp"
#include "hyperjac/io.hpp"
#include "hyperjac/lfunc.hpp"
#include "hyperjac/quadchar.hpp"

namespace hyperjac {

/// Neumaier compensated summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    void merge(const CompensatedSum& o) noexcept {
        add(o.sum_);
        add(o.comp_);
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

enum class SweepMode { exhaustive, sample };

struct SweepConfig {
    std::uint32_t q = 3;
    int d = 3;
    SweepMode mode = SweepMode::exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    int r_max = 4;
    std::vector<double> psi_grid{1, 2, 3, 4};
    std::vector<double> t_grid{0.5, 1, 2};
    int cdf_bins = 512;
    LMethod method = LMethod::newton;
    bool check_explicit_formula = false;  // per-curve explicit-formula identity (newton/charsum symbols)
    bool check_rh = false;                // per-curve root-modulus check, tolerance 1e-6
    std::uint64_t exhaustive_budget = std::uint64_t{1} << 32;
    std::uint64_t table_budget = ResidueRing::kDefaultTableBudget;

    void validate() const {
        FieldCtx check(q);
        (void)check;
        if (d < 3) throw std::invalid_argument("sweep: d must be >= 3");
        if (mode == SweepMode::sample && samples < 1) throw std::invalid_argument("sweep: sample mode needs samples >= 1");
        if (mode == SweepMode::exhaustive && monic_count(q, d) > exhaustive_budget)
            throw std::length_error("sweep: q^d exceeds the exhaustive budget");
        if (r_max < 0 || r_max > 16) throw std::invalid_argument("sweep: r_max must lie in [0, 16]");
        if (cdf_bins < 1) throw std::invalid_argument("sweep: cdf_bins must be >= 1");
        if (threads < 1) throw std::invalid_argument("sweep: threads must be >= 1");
    }
};

inline std::string_view to_string(SweepMode m) { return m == SweepMode::exhaustive ? "exhaustive" : "sample"; }

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

struct SweepSummary {
    std::uint32_t q = 0;
    int d = 0;
    std::uint64_t count = 0;
    std::vector<CompensatedSum> power_sums;  // index r-1: sum of N_F^r
    std::vector<double> psi_grid;
    std::vector<std::uint64_t> tail_counts;  // #{|N_F| >= psi}
    std::vector<double> t_grid;
    std::vector<CompensatedSum> cos_sums, sin_sums;
    std::vector<std::uint64_t> histogram;  // bin k holds Phi(sqrt(q) N_F) in [k/bins, (k+1)/bins)
    double nf_min = std::numeric_limits<double>::infinity();
    double nf_max = -std::numeric_limits<double>::infinity();
    std::uint64_t violations = 0;
    std::string first_violation;

    static SweepSummary empty(const SweepConfig& cfg) {
        SweepSummary s;
        s.q = cfg.q;
        s.d = cfg.d;
        s.power_sums.resize(static_cast<std::size_t>(cfg.r_max));
        s.psi_grid = cfg.psi_grid;
        s.tail_counts.assign(cfg.psi_grid.size(), 0);
        s.t_grid = cfg.t_grid;
        s.cos_sums.resize(cfg.t_grid.size());
        s.sin_sums.resize(cfg.t_grid.size());
        s.histogram.assign(static_cast<std::size_t>(cfg.cdf_bins), 0);
        return s;
    }

    void add(double nf) {
        ++count;
        double p = 1.0;
        for (auto& ps : power_sums) {
            p *= nf;
            ps.add(p);
        }
        for (std::size_t i = 0; i < psi_grid.size(); ++i)
            if (std::fabs(nf) >= psi_grid[i]) ++tail_counts[i];
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            cos_sums[i].add(std::cos(t_grid[i] * nf));
            sin_sums[i].add(std::sin(t_grid[i] * nf));
        }
        const double u = normal_cdf(std::sqrt(static_cast<double>(q)) * nf);
        const auto bins = histogram.size();
        histogram[std::min(bins - 1, static_cast<std::size_t>(u * static_cast<double>(bins)))]++;
        nf_min = std::min(nf_min, nf);
        nf_max = std::max(nf_max, nf);
    }

    void add_violation(const std::string& what) {
        if (violations++ == 0) first_violation = what;
    }

    void merge(const SweepSummary& o) {
        count += o.count;
        for (std::size_t i = 0; i < power_sums.size(); ++i) power_sums[i].merge(o.power_sums[i]);
        for (std::size_t i = 0; i < tail_counts.size(); ++i) tail_counts[i] += o.tail_counts[i];
        for (std::size_t i = 0; i < cos_sums.size(); ++i) {
            cos_sums[i].merge(o.cos_sums[i]);
            sin_sums[i].merge(o.sin_sums[i]);
        }
        for (std::size_t i = 0; i < histogram.size(); ++i) histogram[i] += o.histogram[i];
        nf_min = std::min(nf_min, o.nf_min);
        nf_max = std::max(nf_max, o.nf_max);
        if (o.violations && !violations) first_violation = o.first_violation;
        violations += o.violations;
    }
};

/// <N_F^r>.
inline double empirical_moment(const SweepSummary& s, int r) {
    if (r < 0 || r > static_cast<int>(s.power_sums.size())) throw std::out_of_range("empirical_moment: r exceeds r_max");
    if (s.count == 0) throw std::domain_error("empirical_moment: empty summary");
    if (r == 0) return 1.0;
    return s.power_sums[static_cast<std::size_t>(r - 1)].value() / static_cast<double>(s.count);
}

/// #{F : |N_F| >= psi}; psi must be on the configured grid.
inline std::uint64_t tail_count(const SweepSummary& s, double psi) {
    for (std::size_t i = 0; i < s.psi_grid.size(); ++i)
        if (s.psi_grid[i] == psi) return s.tail_counts[i];
    throw std::out_of_range("tail_count: psi not on the grid");
}

/// exp(-(psi/2) log(q log psi)), the comparison curve printed next to M_psi / count.
inline double tail_reference(double psi, std::uint32_t q) {
    const double inner = static_cast<double>(q) * std::log(psi);
    if (!(inner > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return std::exp(-psi / 2.0 * std::log(inner));
}

/// sum_F e^{i t N_F} / count; t must be on the grid (t = 0 always gives 1).
inline std::complex<double> empirical_charfun(const SweepSummary& s, double t) {
    if (s.count == 0) throw std::domain_error("empirical_charfun: empty summary");
    if (t == 0.0) return {1.0, 0.0};
    const double n = static_cast<double>(s.count);
    for (std::size_t i = 0; i < s.t_grid.size(); ++i) {
        if (s.t_grid[i] == t) return {s.cos_sums[i].value() / n, s.sin_sums[i].value() / n};
        if (s.t_grid[i] == -t) return {s.cos_sums[i].value() / n, -s.sin_sums[i].value() / n};
    }
    throw std::out_of_range("empirical_charfun: t not on the grid");
}

/// max_k |C_k / n - k / bins| over histogram edges, C_k the mass below edge k.
/// The exact sup distance lies in [result, result + 1/bins].
inline double ks_statistic(const SweepSummary& s) {
    if (s.count == 0) throw std::domain_error("ks_statistic: empty summary");
    const double n = static_cast<double>(s.count);
    const double bins = static_cast<double>(s.histogram.size());
    double worst = 0.0;
    std::uint64_t below = 0;
    for (std::size_t k = 0; k <= s.histogram.size(); ++k) {
        worst = std::max(worst, std::fabs(static_cast<double>(below) / n - static_cast<double>(k) / bins));
        if (k < s.histogram.size()) below += s.histogram[k];
    }
    return worst;
}

/// Writes one key,value row per statistic.
inline std::string summary_csv(const SweepSummary& s, const SweepConfig& cfg) {
    std::ostringstream o;
    auto row = [&](const std::string& k, const std::string& v) { o << k << ',' << v << '\n'; };
    auto num = [](double v) { return format_double(v); };
    o << "key,value\n";
    row("q", std::to_string(cfg.q));
    row("d", std::to_string(cfg.d));
    row("g", std::to_string(genus_of_degree(cfg.d)));
    row("mode", std::string(to_string(cfg.mode)));
    row("method", std::string(to_string(cfg.method)));
    if (cfg.mode == SweepMode::sample) {
        row("samples", std::to_string(cfg.samples));
        row("seed", std::to_string(cfg.seed));
    }
    row("count", std::to_string(s.count));
    row("violations", std::to_string(s.violations));
    if (s.count == 0) return o.str();
    for (int r = 1; r <= static_cast<int>(s.power_sums.size()); ++r) row("moment_" + std::to_string(r), num(empirical_moment(s, r)));
    row("nf_min", num(s.nf_min));
    row("nf_max", num(s.nf_max));
    if (s.power_sums.size() >= 2) {
        const double m1 = empirical_moment(s, 1), m2 = empirical_moment(s, 2);
        row("scaled_mean", num(std::sqrt(static_cast<double>(s.q)) * m1));
        row("scaled_variance", num(static_cast<double>(s.q) * (m2 - m1 * m1)));
    }
    for (std::size_t i = 0; i < s.psi_grid.size(); ++i) {
        const std::string p = format_double(s.psi_grid[i]);
        row("tail_count_psi_" + p, std::to_string(s.tail_counts[i]));
        row("tail_ratio_psi_" + p, num(static_cast<double>(s.tail_counts[i]) / static_cast<double>(s.count)));
        row("tail_reference_psi_" + p, num(tail_reference(s.psi_grid[i], s.q)));
    }
    for (double t : s.t_grid) {
        const auto c = empirical_charfun(s, t);
        row("charfun_re_t_" + format_double(t), num(c.real()));
        row("charfun_im_t_" + format_double(t), num(c.imag()));
    }
    row("ks", num(ks_statistic(s)));
    row("ks_resolution", num(1.0 / static_cast<double>(s.histogram.size())));
    for (std::size_t k = 0; k < s.histogram.size(); ++k) row("hist_" + std::to_string(k), std::to_string(s.histogram[k]));
    return o.str();
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform in [0, bound) by rejection; identical on every standard library.
inline std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = gen();
        if (x < limit) return x % bound;
    }
}

}  // namespace detail

/// Sample i: a fresh mt19937_64 seeded from (seed, i); coefficients c_0..c_{d-1}
/// drawn uniformly, redrawn until F is squarefree.
inline FqPoly sample_curve(FieldCtx field, int d, std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 gen(detail::splitmix64(seed ^ detail::splitmix64(index)));
    std::vector<Coeff> c(static_cast<std::size_t>(d) + 1);
    for (;;) {
        for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = static_cast<Coeff>(detail::bounded_draw(gen, field.q()));
        c.back() = 1;
        FqPoly f(field, c);
        if (is_squarefree(f)) return f;
    }
}

using RecordSink = std::function<void(const CurveRecord&)>;

class Sweeper {
public:
    static constexpr std::uint64_t kExhaustiveChunk = 2048;
    static constexpr std::uint64_t kSampleChunk = 64;

    explicit Sweeper(SweepConfig cfg) : cfg_(std::move(cfg)), field_(cfg_.q), engine_(make_engine(cfg_, field_)) {}

    const SweepConfig& config() const noexcept { return cfg_; }
    const LFunctionEngine& engine() const noexcept { return engine_; }

    SweepSummary run(const RecordSink& sink = nullptr) const {
        const std::uint64_t total = cfg_.mode == SweepMode::exhaustive ? monic_count(cfg_.q, cfg_.d) : cfg_.samples;
        const std::uint64_t chunk = cfg_.mode == SweepMode::exhaustive ? kExhaustiveChunk : kSampleChunk;
        const std::uint64_t chunks = (total + chunk - 1) / chunk;
        std::vector<SweepSummary> partial(chunks, SweepSummary::empty(cfg_));
        std::vector<std::vector<CurveRecord>> records(sink ? chunks : 0);
        std::atomic<std::uint64_t> next{0};
        std::mutex err_mu;
        std::exception_ptr err;
        auto worker = [&] {
            try {
                for (;;) {
                    const std::uint64_t c = next.fetch_add(1);
                    if (c >= chunks) return;
                    const std::uint64_t lo = c * chunk, hi = std::min(total, lo + chunk);
                    std::vector<CurveRecord>* out = sink ? &records[c] : nullptr;
                    if (cfg_.mode == SweepMode::exhaustive)
                        run_exhaustive(lo, hi, partial[c], out);
                    else
                        run_samples(lo, hi, partial[c], out);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                next.store(chunks);
            }
        };
        const unsigned n = std::max(1U, std::min<unsigned>(cfg_.threads, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1))));
        if (n == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (err) std::rethrow_exception(err);
        SweepSummary s = SweepSummary::empty(cfg_);
        for (std::uint64_t c = 0; c < chunks; ++c) {
            s.merge(partial[c]);
            if (sink)
                for (const auto& r : records[c]) sink(r);
        }
        return s;
    }

private:
    static LFunctionEngine make_engine(const SweepConfig& cfg, FieldCtx field) {
        cfg.validate();
        LFunctionEngine::Options opt;
        opt.newton = cfg.method == LMethod::newton || cfg.check_explicit_formula;
        opt.charsum = cfg.method == LMethod::charsum;
        opt.pointcount = cfg.method == LMethod::pointcount;
        opt.table_budget = cfg.table_budget;
        return LFunctionEngine(field, cfg.d, opt);
    }

    void record_curve(const FqPoly& f, const LPolynomial& l, std::span<const std::int8_t> syms, SweepSummary& s,
                      std::vector<CurveRecord>* out) const {
        const CurveRecord rec = make_curve_record(f, l);
        const Verdict v = verify_curve(rec);
        if (!v.ok()) s.add_violation(format_poly(f) + ": " + v.message);
        if (cfg_.check_explicit_formula) {
            for (int n = 1; n <= l.g; ++n) {
                const bool ok = syms.empty() ? explicit_formula_check(f, l, n)
                                             : explicit_formula_check(engine_.symbols(), syms, cfg_.d, l, n);
                if (!ok) s.add_violation(format_poly(f) + ": explicit formula fails at n = " + std::to_string(n));
            }
        }
        if (cfg_.check_rh && max_root_modulus_deviation(l) > 1e-6) s.add_violation(format_poly(f) + ": root off the critical circle");
        s.add(rec.n_f);
        if (out) out->push_back(rec);
    }

    void run_exhaustive(std::uint64_t lo, std::uint64_t hi, SweepSummary& s, std::vector<CurveRecord>* out) const {
        if (cfg_.method == LMethod::pointcount) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const FqPoly f = monic_from_index(field_, cfg_.d, i);
                if (!is_squarefree(f)) continue;
                const LPolynomial l = engine_.pointcount(f);
                std::vector<std::int8_t> syms;
                if (cfg_.check_explicit_formula) {
                    syms.resize(engine_.primes_needed(cfg_.d, LMethod::newton));
                    engine_.symbols().symbols(f, syms);
                }
                record_curve(f, l, syms, s, out);
            }
            return;
        }
        const std::size_t np = std::max(engine_.primes_needed(cfg_.d, cfg_.method),
                                        cfg_.check_explicit_formula ? engine_.primes_needed(cfg_.d, LMethod::newton) : 0);
        SymbolWalker walker(engine_.symbols(), cfg_.d, np);
        std::vector<std::int8_t> syms(np);
        walker.seek(lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i > lo) walker.next();
            const FqPoly f = walker.poly();
            if (!is_squarefree(f)) continue;
            walker.symbols(syms);
            const LPolynomial l = cfg_.method == LMethod::newton ? engine_.newton(cfg_.d, syms) : engine_.charsum(cfg_.d, syms);
            record_curve(f, l, syms, s, out);
        }
    }

    void run_samples(std::uint64_t lo, std::uint64_t hi, SweepSummary& s, std::vector<CurveRecord>* out) const {
        std::vector<std::int8_t> syms;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const FqPoly f = sample_curve(field_, cfg_.d, cfg_.seed, i);
            LPolynomial l;
            syms.clear();
            if (cfg_.method == LMethod::pointcount) {
                l = engine_.pointcount(f);
                if (cfg_.check_explicit_formula) {
                    syms.resize(engine_.primes_needed(cfg_.d, LMethod::newton));
                    engine_.symbols().symbols(f, syms);
                }
            } else {
                syms.resize(std::max(engine_.primes_needed(cfg_.d, cfg_.method),
                                     cfg_.check_explicit_formula ? engine_.primes_needed(cfg_.d, LMethod::newton) : 0));
                engine_.symbols().symbols(f, syms);
                l = cfg_.method == LMethod::newton ? engine_.newton(cfg_.d, syms) : engine_.charsum(cfg_.d, syms);
            }
            record_curve(f, l, syms, s, out);
        }
    }

    SweepConfig cfg_;
    FieldCtx field_;
    LFunctionEngine engine_;
};

inline SweepSummary sweep(const SweepConfig& cfg, const RecordSink& sink = nullptr) { return Sweeper(cfg).run(sink); }

struct CharacterAverageReport {
    FqPoly f;
    std::uint64_t family_size = 0;
    std::int64_t symbol_sum = 0;
    double average = 0.0;  // |sum| / family size
    double bound = 0.0;    // 2^{deg f - 1} / ((1 - 1/q) q^{d/2})
    bool holds() const noexcept { return average <= bound; }
};

/// Average of (F/f) over monic squarefree F of degree d (or every monic F when
/// all_monic is set), against 2^{deg f - 1} / ((1 - q^-1) q^{d/2}).
inline CharacterAverageReport character_average_check(const FqPoly& f, int d, bool all_monic = false) {
    if (!f.is_monic() || !is_irreducible(f)) throw std::invalid_argument("character_average_check: f must be monic irreducible");
    const auto q = f.q();
    CharacterAverageReport r{f};
    for_each_monic(f.field(), d, all_monic ? MonicFilter::all : MonicFilter::squarefree, [&](const FqPoly& F, std::uint64_t) {
        ++r.family_size;
        r.symbol_sum += legendre_symbol(F, f);
    });
    r.average = std::fabs(static_cast<double>(r.symbol_sum)) / static_cast<double>(r.family_size);
    r.bound = std::pow(2.0, f.degree() - 1) / ((1.0 - 1.0 / q) * std::pow(static_cast<double>(q), d / 2.0));
    return r;
}

struct CoprimeDensityReport {
    FqPoly h;
    std::vector<FqPoly> prime_factors;
    std::uint64_t family_size = 0;
    std::uint64_t coprime = 0;
    double density = 0.0;
    double main_term = 0.0;              // prod_{P | h} (1 + |P|^-1)^-1
    double normalized_deviation = 0.0;   // |density - main| q^{d/2} / sigma(h)
};

/// Monic prime factors of a squarefree h by trial division.
inline std::vector<FqPoly> squarefree_factors(const FqPoly& h) {
    if (!h.is_monic()) throw std::invalid_argument("squarefree_factors: h must be monic");
    if (h.degree() > 0 && !is_squarefree(h)) throw std::invalid_argument("squarefree_factors: h must be squarefree");
    std::vector<FqPoly> out;
    FqPoly rest = h;
    // once deg rest < 2k, what remains is 1 or a single prime
    for (int k = 1; 2 * k <= rest.degree(); ++k) {
        for (const FqPoly& p : enumerate_monic(h.field(), k, MonicFilter::irreducible)) {
            auto [quot, rem] = divmod(rest, p);
            if (rem.is_zero()) {
                out.push_back(p);
                rest = quot;
            }
        }
    }
    if (rest.degree() >= 1) out.push_back(rest);
    return out;
}

inline CoprimeDensityReport coprime_density_check(const FqPoly& h, int d) {
    CoprimeDensityReport r{h, {}};
    r.prime_factors = squarefree_factors(h);
    const auto q = h.q();
    for_each_monic(h.field(), d, MonicFilter::squarefree, [&](const FqPoly& F, std::uint64_t) {
        ++r.family_size;
        if (h.degree() == 0 || gcd(F, h).degree() == 0) ++r.coprime;
    });
    r.density = static_cast<double>(r.coprime) / static_cast<double>(r.family_size);
    r.main_term = 1.0;
    for (const auto& p : r.prime_factors) r.main_term /= 1.0 + std::pow(static_cast<double>(q), -p.degree());
    const double sigma = std::ldexp(1.0, static_cast<int>(r.prime_factors.size()));
    r.normalized_deviation = std::fabs(r.density - r.main_term) * std::pow(static_cast<double>(q), d / 2.0) / sigma;
    return r;
}

}  // namespace hyperjac

#endif  // HYPERJAC_FAMILY_HPP
