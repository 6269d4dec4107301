#ifndef HYPERJAC_CLI_HPP
#define HYPERJAC_CLI_HPP

// Command-line front end.  Exit codes: 0 success, 1 an asserted invariant
// failed, 2 bad flags or inputs.

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperjac/bounds.hpp"
#include "hyperjac/family.hpp"
#include "hyperjac/io.hpp"
#include "hyperjac/lfunc.hpp"
#include "hyperjac/moments.hpp"

namespace hyperjac {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Raised for flag combinations CLI11 cannot express; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace cli_detail {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        std::string out;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_quote(cells[i]);
            out += '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
        return out;
    }
};

/// Integers that fit int64 and decimal floats become JSON numbers; everything else stays text.
inline nlohmann::ordered_json cell_json(const std::string& s) {
    if (s.empty()) return s;
    char* end = nullptr;
    errno = 0;
    const long long i = std::strtoll(s.c_str(), &end, 10);
    if (end == s.c_str() + s.size()) {
        if (errno == 0) return i;
        return s;
    }
    const double d = std::strtod(s.c_str(), &end);
    if (end == s.c_str() + s.size() && std::isfinite(d)) return d;
    return s;
}

inline std::string table_json(const Table& t) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json o;
        for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = cell_json(r[i]);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

/// key,value CSV to a JSON object.
inline std::string keyvalue_json(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    while (std::getline(in, line)) {
        const auto c = line.find(',');
        o[line.substr(0, c)] = cell_json(line.substr(c + 1));
    }
    return o.dump(2) + "\n";
}

/// Splits one CSV line; fields may be double-quoted with "" escapes.
inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
    out.push_back(std::move(cur));
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << data;
}

struct Common {
    std::string out;
    std::string format = "csv";
};

struct RunState {
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
    int code = kExitOk;
    std::string payload;        // primary output
    std::uint64_t seed = 0;
};

inline Table lpoly_table_header(int g) {
    Table t;
    t.header = {"method", "q", "d", "g", "F", "coeffs", "class_number", "n_f"};
    for (int n = 1; n <= g; ++n) t.header.push_back("s_" + std::to_string(n));
    return t;
}

}  // namespace cli_detail

/// Runs one CLI invocation; output goes to `out` (or --out), diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    using namespace cli_detail;
    CLI::App app{"Hyperelliptic L-polynomials, class numbers and N_F statistics over odd prime fields", "hyperjac"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", common.out, "Write output here (plus <out>.manifest.json) instead of stdout");
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    // lpoly
    std::uint32_t q = 3;
    int d = 0;
    std::string poly, method = "newton";
    auto* lpoly = app.add_subcommand("lpoly", "L-polynomial, class number and N_F of y^2 = F(x)");
    lpoly->add_option("--q", q, "Odd prime field size")->required();
    lpoly->add_option("--poly", poly, "Monic squarefree F as ascending coefficients \"c0,c1,...\"")->required();
    lpoly->add_option("--d", d, "Expected degree of F (optional check)");
    lpoly->add_option("--method", method, "newton | charsum | pointcount | all")
        ->check(CLI::IsMember({"newton", "charsum", "pointcount", "all"}));
    add_common(lpoly);

    // sweep / sample / verify share the family flags
    SweepConfig cfg;
    std::string mode = "exhaustive", records_out, records_in, sweep_method = "newton";
    bool check_rh = false;
    unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    cfg.threads = hw;
    auto add_family = [&](CLI::App* sub, bool with_mode) {
        sub->add_option("--q", cfg.q, "Odd prime field size")->required();
        sub->add_option("--d", cfg.d, "Degree of F (>= 3)")->required();
        if (with_mode) sub->add_option("--mode", mode, "exhaustive | sample")->check(CLI::IsMember({"exhaustive", "sample"}));
        sub->add_option("--samples", cfg.samples, "Sample count M (sample mode)");
        sub->add_option("--seed", cfg.seed, "64-bit RNG seed (sample mode)");
        sub->add_option("--threads", cfg.threads, "Worker threads (results do not depend on it)");
        sub->add_option("--method", sweep_method, "newton | charsum | pointcount")
            ->check(CLI::IsMember({"newton", "charsum", "pointcount"}));
        sub->add_option("--r-max", cfg.r_max, "Highest moment of N_F tracked");
        sub->add_option("--psi", cfg.psi_grid, "Tail thresholds psi")->delimiter(',');
        sub->add_option("--t-grid", cfg.t_grid, "Characteristic function points t")->delimiter(',');
        sub->add_option("--bins", cfg.cdf_bins, "Histogram bins for the CDF of sqrt(q) N_F");
        sub->add_option("--records-out", records_out, "Per-curve CSV: q,d,g,F,class_number,n_f,s_1..s_g");
        add_common(sub);
    };
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the family of monic squarefree F (exhaustive by default)");
    add_family(sweep_cmd, true);
    auto* sample_cmd = app.add_subcommand("sample", "Seeded Monte-Carlo sample of the family");
    add_family(sample_cmd, false);
    auto* verify_cmd = app.add_subcommand("verify", "Check Weil, genus bound and explicit formula per curve; exit 1 on any failure");
    verify_cmd->add_option("--records-in", records_in, "Re-verify a per-curve CSV instead of sweeping");
    verify_cmd->add_option("--q", cfg.q, "Odd prime field size");
    verify_cmd->add_option("--d", cfg.d, "Degree of F");
    verify_cmd->add_option("--mode", mode, "exhaustive | sample")->check(CLI::IsMember({"exhaustive", "sample"}));
    verify_cmd->add_option("--samples", cfg.samples, "Sample count M (sample mode)");
    verify_cmd->add_option("--seed", cfg.seed, "RNG seed (sample mode)");
    verify_cmd->add_option("--threads", cfg.threads, "Worker threads");
    verify_cmd->add_option("--method", sweep_method, "newton | charsum | pointcount")
        ->check(CLI::IsMember({"newton", "charsum", "pointcount"}));
    verify_cmd->add_flag("--check-rh", check_rh, "Also check every root modulus against q^(-1/2)");
    add_common(verify_cmd);

    // analytic side
    std::vector<int> s_list{1, 2, 3, 4};
    int trunc = 12, r_cap = 8;
    std::string compare_sweep;
    std::vector<double> t_grid{0.5, 1, 2};
    auto* moments_cmd = app.add_subcommand("moments", "H(s) with truncation tail and large-q main term");
    moments_cmd->add_option("--q", q, "Odd prime field size")->required();
    moments_cmd->add_option("--s", s_list, "Moment orders (1..10)")->delimiter(',');
    moments_cmd->add_option("--trunc-degree", trunc, "Largest prime degree D included");
    add_common(moments_cmd);

    auto* charfun_cmd = app.add_subcommand("charfun", "Truncated characteristic function phi(t)");
    charfun_cmd->add_option("--q", q, "Odd prime field size")->required();
    charfun_cmd->add_option("--t-grid", t_grid, "Points t")->delimiter(',');
    charfun_cmd->add_option("--trunc-degree", trunc, "Largest prime degree D included");
    charfun_cmd->add_option("--r-cap", r_cap, "Number of distinct-prime terms kept");
    charfun_cmd->add_option("--compare-sweep", compare_sweep, "Sweep summary CSV to join empirical values from");
    add_common(charfun_cmd);

    int g = 1, n_galois = 2;
    auto* bounds_cmd = app.add_subcommand("bounds", "Genus bound on |log #J - g log q| and the Weil interval");
    bounds_cmd->add_option("--g", g, "Genus (>= 1)")->required();
    bounds_cmd->add_option("--q", q, "Field size")->required();
    bounds_cmd->add_option("--N", n_galois, "Galois group order (>= 2)");
    add_common(bounds_cmd);

    auto* hcheck_cmd = app.add_subcommand("hcheck", "h(lambda) identities and inequalities, plus the large-q grid for H(2), H(4)");
    hcheck_cmd->add_option("--q", q, "Odd prime field size")->required();
    hcheck_cmd->add_option("--trunc-degree", trunc, "Largest prime degree D for the inequalities");
    add_common(hcheck_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    RunState st;
    st.out = &out;
    st.err = &err;
    const auto t0 = std::chrono::steady_clock::now();
    auto emit_table = [&](const Table& t) { st.payload = common.format == "json" ? table_json(t) : t.csv(); };

    try {
        const std::string name = sub->get_name();
        if (name == "lpoly") {
            const FieldCtx field(q);
            const FqPoly f = parse_poly(poly, field);
            if (d && f.degree() != d) throw UsageError("--d does not match the degree of --poly");
            std::vector<LMethod> methods;
            if (method == "all")
                methods = {LMethod::newton, LMethod::charsum, LMethod::pointcount};
            else
                methods = {parse_method(method)};
            Table t = lpoly_table_header(genus_of_degree(f.degree()));
            std::optional<LPolynomial> first;
            for (LMethod m : methods) {
                const auto m0 = std::chrono::steady_clock::now();
                const LPolynomial l = l_polynomial(f, m);
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - m0).count();
                err << "timing " << to_string(m) << " " << format_double(secs) << " s\n";
                std::string coeffs;
                for (std::size_t i = 0; i < l.coeffs.size(); ++i) coeffs += (i ? "," : "") + l.coeffs[i].str();
                const CurveRecord rec = make_curve_record(f, l);
                std::vector<std::string> row = {std::string(to_string(m)), std::to_string(q), std::to_string(f.degree()),
                                                std::to_string(l.g), format_poly(f), coeffs, rec.class_number.str(),
                                                format_double(rec.n_f)};
                for (const auto& s : l.power_sums) row.push_back(s.str());
                t.rows.push_back(std::move(row));
                const Verdict v = verify_curve(rec);
                if (!v.ok()) {
                    err << "violation: " << v.message << "\n";
                    st.code = kExitViolation;
                }
                if (first && !(*first == l)) {
                    err << "violation: " << to_string(m) << " disagrees with " << to_string(methods.front()) << "\n";
                    st.code = kExitViolation;
                }
                if (!first) first = l;
            }
            emit_table(t);
        } else if (name == "sweep" || name == "sample" || name == "verify") {
            if (name == "sample") mode = "sample";
            cfg.mode = mode == "sample" ? SweepMode::sample : SweepMode::exhaustive;
            cfg.method = parse_method(sweep_method);
            if (cfg.mode == SweepMode::sample && cfg.samples == 0) throw UsageError("sample mode needs --samples >= 1");
            if (cfg.mode == SweepMode::exhaustive && cfg.samples != 0) throw UsageError("--samples requires sample mode");
            st.seed = cfg.seed;
            if (name == "verify" && !records_in.empty()) {
                std::istringstream in(read_file(records_in));
                std::string line;
                std::uint64_t checked = 0, bad = 0;
                auto fail = [&](std::uint64_t lineno, const std::string& why) {
                    ++bad;
                    err << "line " << lineno << ": " << why << "\n";
                };
                std::getline(in, line);
                if (line.rfind("q,d,g,F,class_number,n_f", 0) != 0) throw UsageError("records file lacks the curve CSV header");
                std::uint64_t lineno = 1;
                while (std::getline(in, line)) {
                    ++lineno;
                    if (line.empty()) continue;
                    ++checked;
                    try {
                        const auto c = split_csv_line(line);
                        if (c.size() < 6) throw std::invalid_argument("too few columns");
                        const FieldCtx field(static_cast<std::uint32_t>(std::stoul(c[0])));
                        const FqPoly f = parse_poly(c[3], field);
                        const int dd = std::stoi(c[1]), gg = std::stoi(c[2]);
                        if (f.degree() != dd || gg != genus_of_degree(dd) || c.size() != 6 + static_cast<std::size_t>(gg))
                            throw std::invalid_argument("degree, genus or column count inconsistent");
                        const BigInt h(c[4]);
                        const Verdict v = verify_curve(h, gg, field.q());
                        if (!v.ok()) throw std::invalid_argument(v.message);
                        const LPolynomial l = l_polynomial(f, LMethod::newton);
                        if (class_number(l) != h) throw std::invalid_argument("class number does not match recomputation");
                        for (int n = 1; n <= gg; ++n)
                            if (BigInt(c[5 + static_cast<std::size_t>(n)]) != l.power_sums[static_cast<std::size_t>(n - 1)])
                                throw std::invalid_argument("s_" + std::to_string(n) + " does not match recomputation");
                        const double nf = std::stod(c[5]);
                        if (std::fabs(nf - nf_statistic(l)) > 1e-12 * std::max(1.0, std::fabs(nf)))
                            throw std::invalid_argument("n_f does not match recomputation");
                    } catch (const std::exception& e) {
                        fail(lineno, e.what());
                    }
                }
                Table t;
                t.header = {"key", "value"};
                t.rows = {{"records", std::to_string(checked)}, {"violations", std::to_string(bad)}};
                emit_table(t);
                if (bad) st.code = kExitViolation;
            } else {
                if (sub->count("--q") == 0 || sub->count("--d") == 0) throw UsageError("--q and --d are required");
                if (name == "verify") {
                    cfg.check_explicit_formula = true;
                    cfg.check_rh = check_rh;
                }
                std::ofstream rec_file;
                RecordSink sink;
                if (!records_out.empty()) {
                    rec_file.open(records_out, std::ios::binary);
                    if (!rec_file) throw UsageError("cannot write " + records_out);
                    rec_file << curve_csv_header(genus_of_degree(cfg.d)) << '\n';
                    sink = [&](const CurveRecord& r) { rec_file << to_csv_row(r) << '\n'; };
                }
                const SweepSummary s = sweep(cfg, sink);
                const std::string csv = summary_csv(s, cfg);
                st.payload = common.format == "json" ? keyvalue_json(csv) : csv;
                if (s.violations) {
                    err << "violations: " << s.violations << " (first: " << s.first_violation << ")\n";
                    st.code = kExitViolation;
                }
            }
        } else if (name == "moments") {
            const TruncationCtx ctx(q, trunc);
            Table t;
            t.header = {"s", "D", "value", "tail_bound", "asymptotic_main", "ratio", "oracle_value"};
            for (int s : s_list) {
                const MomentReport r = H_moment(s, ctx);
                const double ratio = r.asymptotic_main != 0.0 ? r.value / r.asymptotic_main : std::nan("");
                t.rows.push_back({std::to_string(s), std::to_string(r.D), format_double(r.value), format_double(r.tail_bound),
                                  format_double(r.asymptotic_main), format_double(ratio), format_double(*r.oracle_value)});
            }
            emit_table(t);
        } else if (name == "charfun") {
            const TruncationCtx ctx(q, trunc);
            std::map<std::string, std::string> emp;
            if (!compare_sweep.empty()) {
                std::istringstream in(read_file(compare_sweep));
                std::string line;
                while (std::getline(in, line)) {
                    const auto c = line.find(',');
                    if (c != std::string::npos) emp[line.substr(0, c)] = line.substr(c + 1);
                }
            }
            Table t;
            t.header = {"t", "re", "im", "last_term", "tail_bound"};
            if (!compare_sweep.empty()) t.header.insert(t.header.end(), {"empirical_re", "empirical_im", "abs_diff"});
            for (double tv : t_grid) {
                const CharfunReport r = charfun_truncated(tv, ctx, r_cap);
                std::vector<std::string> row = {format_double(tv), format_double(r.value.real()), format_double(r.value.imag()),
                                                format_double(r.last_term), format_double(r.tail_bound)};
                if (!compare_sweep.empty()) {
                    const auto re = emp.find("charfun_re_t_" + format_double(tv));
                    const auto im = emp.find("charfun_im_t_" + format_double(tv));
                    if (re == emp.end() || im == emp.end())
                        throw UsageError("sweep summary has no charfun value at t = " + format_double(tv));
                    const std::complex<double> e(std::stod(re->second), std::stod(im->second));
                    row.insert(row.end(), {re->second, im->second, format_double(std::abs(e - r.value))});
                }
                t.rows.push_back(std::move(row));
            }
            emit_table(t);
        } else if (name == "bounds") {
            const WeilInterval w = weil_interval(g, q);
            const WeilExact e = weil_exact(g, q);
            Table t;
            t.header = {"key", "value"};
            t.rows = {{"g", std::to_string(g)},
                      {"q", std::to_string(q)},
                      {"N", std::to_string(n_galois)},
                      {"genus_bound", format_double(genus_bound(g, q, n_galois))},
                      {"weil_lo", format_double(w.lo)},
                      {"weil_hi", format_double(w.hi)},
                      {"weil_exact_a", e.a.str()},
                      {"weil_exact_b", e.b.str()}};
            emit_table(t);
        } else if (name == "hcheck") {
            Table t;
            t.header = {"check", "q", "D", "lhs", "rhs", "margin", "pass"};
            auto add = [&](const std::string& check, std::uint32_t qq, int dd, double lhs, double rhs, bool pass) {
                t.rows.push_back({check, std::to_string(qq), std::to_string(dd), format_double(lhs), format_double(rhs),
                                  format_double(rhs - lhs), pass ? "1" : "0"});
                if (!pass) st.code = kExitViolation;
            };
            {
                const TruncationCtx c30(q, 30);
                const double h1 = h_lambda(1, c30).value, exact = -std::log1p(-1.0 / q);
                add("|h(1) + log(1 - 1/q)|", q, 30, std::fabs(h1 - exact), 1e-12, std::fabs(h1 - exact) <= 1e-12);
            }
            const TruncationCtx ctx(q, trunc);
            const Bounded h2 = h_lambda(2, ctx);
            add("h(2) + tail <= 10/q", q, trunc, h2.value + h2.tail_bound, 10.0 / q, h2.value + h2.tail_bound <= 10.0 / q);
            for (const auto& r : lemma_inequalities(ctx)) add(r.name, q, trunc, r.lhs_upper, r.rhs_lower, r.certified());
            for (std::uint32_t qq : {101U, 401U, 1009U}) {
                const TruncationCtx c6(qq, 6);
                const double lim = 1.0 / std::sqrt(static_cast<double>(qq));
                const double q2 = static_cast<double>(qq) * qq;
                const double e2 = std::fabs(qq * H_moment(2, c6, false).value - 1.0);
                const double e4 = std::fabs(q2 * H_moment(4, c6, false).value - 3.0);
                add("|q H(2) - 1|", qq, 6, e2, 10 * lim, e2 <= 10 * lim);
                add("|q^2 H(4) - 3|", qq, 6, e4, 30 * lim, e4 <= 30 * lim);
                const double o1 = qq * H_moment(1, c6, false).value, o3 = q2 * H_moment(3, c6, false).value;
                add("q H(1)", qq, 6, o1, 10, o1 <= 10);
                add("q^2 H(3)", qq, 6, o3, 10, o3 <= 10);
            }
            emit_table(t);
        }
    } catch (const InternalInvariantError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (common.out.empty()) {
        out << st.payload;
    } else {
        try {
            write_file(common.out, st.payload);
            nlohmann::ordered_json m;
            m["subcommand"] = sub->get_name();
            nlohmann::ordered_json flags = nlohmann::ordered_json::object();
            for (const CLI::Option* opt : sub->get_options()) {
                if (opt->count() == 0 || opt->get_name() == "--help") continue;
                const auto& res = opt->results();
                flags[opt->get_name()] = res.size() == 1 ? nlohmann::ordered_json(res.front()) : nlohmann::ordered_json(res);
            }
            m["flags"] = flags;
            m["seed"] = st.seed;
            m["version"] = kVersion;
            m["wall_time_s"] = wall;
            m["output_checksum_fnv1a64"] = fnv1a_hex(st.payload);
            write_file(common.out + ".manifest.json", m.dump(2) + "\n");
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    return st.code;
}

}  // namespace hyperjac

#endif  // HYPERJAC_CLI_HPP
