#ifndef HYPERJAC_FFIELD_HPP
#define HYPERJAC_FFIELD_HPP

// Arithmetic in F_q (q an odd prime) and F_q[X], residue rings F_q[X]/(P),
// and enumeration/counting of monic polynomials.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperjac/bigint.hpp"

namespace hyperjac {

using Coeff = std::uint32_t;

class FieldCtx {
public:
    explicit FieldCtx(std::uint32_t q) : q_(q) {
        if (q < 3 || q % 2 == 0 || q > (1U << 30)) throw std::invalid_argument("FieldCtx: q must be an odd prime below 2^30");
        for (std::uint64_t p = 3; p * p <= q; p += 2) {
            if (q % p == 0) throw std::invalid_argument("FieldCtx: q = " + std::to_string(q) + " is not prime");
        }
    }

    std::uint32_t q() const noexcept { return q_; }

    Coeff add(Coeff a, Coeff b) const noexcept {
        const Coeff s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : q_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % q_);
    }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept {
        Coeff r = 1 % q_;
        while (e) {
            if (e & 1U) r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }
    Coeff inv(Coeff a) const {
        if (a % q_ == 0) throw std::domain_error("FieldCtx::inv: zero has no inverse");
        return pow(a, q_ - 2);
    }
    /// Legendre symbol (a/q) in {-1, 0, 1}.
    int legendre(Coeff a) const noexcept {
        a %= q_;
        if (a == 0) return 0;
        return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
    }
    Coeff reduce(std::int64_t v) const noexcept {
        const std::int64_t r = v % static_cast<std::int64_t>(q_);
        return static_cast<Coeff>(r < 0 ? r + q_ : r);
    }

    friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

private:
    std::uint32_t q_;
};

/// Dense polynomial over F_q, ascending coefficients, no trailing zeros.
class FqPoly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    explicit FqPoly(FieldCtx field) : field_(field) {}
    FqPoly(FieldCtx field, std::vector<Coeff> coeffs) : field_(field), c_(std::move(coeffs)) {
        for (auto& v : c_) v %= field_.q();
        trim();
    }
    FqPoly(FieldCtx field, std::initializer_list<Coeff> coeffs) : FqPoly(field, std::vector<Coeff>(coeffs)) {}

    static FqPoly constant(FieldCtx f, Coeff c) { return FqPoly(f, std::vector<Coeff>{c}); }
    static FqPoly monomial(FieldCtx f, int deg, Coeff c = 1) {
        std::vector<Coeff> v(static_cast<std::size_t>(deg) + 1, 0);
        v.back() = c;
        return FqPoly(f, std::move(v));
    }
    static FqPoly x(FieldCtx f) { return monomial(f, 1); }

    const FieldCtx& field() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return field_.q(); }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    Coeff leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Coeff operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    std::span<const Coeff> coeffs() const noexcept { return c_; }

    Coeff eval(Coeff x) const noexcept {
        Coeff r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
        return r;
    }

    FqPoly monic() const {
        if (is_zero()) return *this;
        const Coeff li = field_.inv(leading());
        std::vector<Coeff> v(c_);
        for (auto& x : v) x = field_.mul(x, li);
        return FqPoly(field_, std::move(v));
    }

    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldCtx field_;
    std::vector<Coeff> c_;
};

namespace detail {
inline void require_same_field(const FqPoly& a, const FqPoly& b) {
    if (a.field() != b.field()) throw std::invalid_argument("polynomials over different fields");
}
}  // namespace detail

inline FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    detail::require_same_field(a, b);
    const auto& f = a.field();
    std::vector<Coeff> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a[i], b[i]);
    return FqPoly(f, std::move(v));
}

inline FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    detail::require_same_field(a, b);
    const auto& f = a.field();
    std::vector<Coeff> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a[i], b[i]);
    return FqPoly(f, std::move(v));
}

inline FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    detail::require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return FqPoly(a.field());
    const auto& f = a.field();
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<std::uint64_t> acc(ac.size() + bc.size() - 1, 0);
    const std::uint64_t q = f.q();
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(ac[i]) * bc[j]) % q;
    }
    std::vector<Coeff> v(acc.begin(), acc.end());
    return FqPoly(f, std::move(v));
}

/// Quotient and remainder; throws std::domain_error on division by zero.
inline std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
    detail::require_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    const auto& f = a.field();
    if (a.degree() < b.degree()) return {FqPoly(f), a};
    std::vector<Coeff> r(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const int db = b.degree();
    const Coeff lead_inv = f.inv(b.leading());
    std::vector<Coeff> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        const Coeff c = f.mul(r[static_cast<std::size_t>(i)], lead_inv);
        quot[static_cast<std::size_t>(i - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(i - db + j)];
            slot = f.sub(slot, f.mul(c, bc[static_cast<std::size_t>(j)]));
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {FqPoly(f, std::move(quot)), FqPoly(f, std::move(r))};
}

inline FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }
inline FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }

/// Monic gcd; gcd(0, 0) = 0.
inline FqPoly gcd(FqPoly a, FqPoly b) {
    detail::require_same_field(a, b);
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline FqPoly derivative(const FqPoly& a) {
    const auto& f = a.field();
    const auto c = a.coeffs();
    if (c.size() <= 1) return FqPoly(f);
    std::vector<Coeff> v(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = f.mul(c[i], static_cast<Coeff>(i % f.q()));
    return FqPoly(f, std::move(v));
}

inline FqPoly powmod(FqPoly base, const BigInt& e, const FqPoly& modulus) {
    FqPoly r = FqPoly::constant(base.field(), 1) % modulus;
    base = base % modulus;
    if (e < 0) throw std::domain_error("powmod: negative exponent");
    const auto bits = e == 0 ? 0U : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1U;
    for (unsigned i = bits; i-- > 0;) {
        r = (r * r) % modulus;
        if (boost::multiprecision::bit_test(e, i)) r = (r * base) % modulus;
    }
    return r;
}

/// "c0,c1,...,cd" ascending; "0" for the zero polynomial.
inline std::string format_poly(const FqPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.coeffs()[i]);
    }
    return s;
}

/// Parses the comma-separated ascending format. Rejects residues >= q and a
/// zero leading coefficient (other than the single "0").
inline FqPoly parse_poly(std::string_view text, FieldCtx field) {
    std::vector<Coeff> v;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::uint64_t val = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("parse_poly: bad coefficient '" + std::string(tok) + "'");
        if (val >= field.q())
            throw std::invalid_argument("parse_poly: residue " + std::to_string(val) + " >= q");
        v.push_back(static_cast<Coeff>(val));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (v.back() == 0 && v.size() > 1) throw std::invalid_argument("parse_poly: trailing zero leading coefficient");
    return FqPoly(field, std::move(v));
}

inline bool is_squarefree(const FqPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_squarefree: degree must be >= 1");
    const FqPoly df = derivative(f);
    // F' = 0 means F is a q-th power in characteristic q.
    if (df.is_zero()) return false;
    return gcd(f, df).degree() == 0;
}

/// Distinct-degree test: P is irreducible iff gcd(X^{q^i} - X, P) = 1 for i <= deg/2.
inline bool is_irreducible(const FqPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    if (p.degree() == 1) return true;
    const auto& f = p.field();
    const FqPoly x = FqPoly::x(f);
    FqPoly h = x % p;
    for (int i = 1; i <= p.degree() / 2; ++i) {
        h = powmod(h, BigInt(f.q()), p);
        if (gcd(h - x, p).degree() != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration of monic polynomials of degree n.  Index i in [0, q^n) maps to
// X^n + sum c_k X^k with (c_0, ..., c_{n-1}) the base-q digits of i, c_0 least
// significant.  This order is part of the public contract.

enum class MonicFilter { all, squarefree, irreducible };

inline std::uint64_t monic_count(std::uint32_t q, int n) {
    if (n < 0) throw std::invalid_argument("monic_count: negative degree");
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) throw std::overflow_error("monic_count: q^n exceeds 64 bits");
        r *= q;
    }
    return r;
}

inline FqPoly monic_from_index(FieldCtx f, int n, std::uint64_t index) {
    std::vector<Coeff> v(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<Coeff>(index % f.q());
        index /= f.q();
    }
    if (index != 0) throw std::out_of_range("monic_from_index: index >= q^n");
    v.back() = 1;
    return FqPoly(f, std::move(v));
}

inline std::uint64_t monic_index(const FqPoly& p) {
    if (!p.is_monic()) throw std::invalid_argument("monic_index: polynomial is not monic");
    std::uint64_t idx = 0;
    const auto c = p.coeffs();
    for (std::size_t i = c.size() - 1; i-- > 0;) idx = idx * p.q() + c[i];
    return idx;
}

inline bool passes(const FqPoly& p, MonicFilter filter) {
    switch (filter) {
        case MonicFilter::all: return true;
        case MonicFilter::squarefree: return is_squarefree(p);
        case MonicFilter::irreducible: return is_irreducible(p);
    }
    return false;
}

/// Calls fn(poly, index) for each filtered monic polynomial with index in [begin, end).
template <class Fn>
void for_each_monic(FieldCtx f, int n, MonicFilter filter, Fn&& fn, std::uint64_t begin = 0,
                    std::uint64_t end = std::numeric_limits<std::uint64_t>::max()) {
    if (n < 1) throw std::invalid_argument("for_each_monic: degree must be >= 1");
    end = std::min(end, monic_count(f.q(), n));
    for (std::uint64_t i = begin; i < end; ++i) {
        FqPoly p = monic_from_index(f, n, i);
        if (passes(p, filter)) fn(p, i);
    }
}

inline std::vector<FqPoly> enumerate_monic(FieldCtx f, int n, MonicFilter filter) {
    std::vector<FqPoly> out;
    for_each_monic(f, n, filter, [&](const FqPoly& p, std::uint64_t) { out.push_back(p); });
    return out;
}

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

/// Number of monic irreducible polynomials of degree n: (1/n) sum_{m|n} mu(m) q^{n/m}.
inline BigInt prime_count_exact(std::uint32_t q, int n) {
    if (n < 1) throw std::invalid_argument("prime_count_exact: degree must be >= 1");
    BigInt total = 0;
    for (int m = 1; m <= n; ++m) {
        if (n % m) continue;
        const int mu = mobius(m);
        if (mu) total += mu * big_pow(q, static_cast<unsigned>(n / m));
    }
    return total / n;
}

/// All monic irreducibles of degree 1..max_degree, by degree then enumeration index.
inline std::vector<FqPoly> monic_irreducibles(FieldCtx f, int max_degree) {
    std::vector<FqPoly> out;
    for (int n = 1; n <= max_degree; ++n) {
        for_each_monic(f, n, MonicFilter::irreducible, [&](const FqPoly& p, std::uint64_t) { out.push_back(p); });
    }
    return out;
}

/// Lexicographically least (smallest enumeration index) monic irreducible of degree n.
inline FqPoly least_irreducible(FieldCtx f, int n) {
    const std::uint64_t count = monic_count(f.q(), n);
    for (std::uint64_t i = 0; i < count; ++i) {
        FqPoly p = monic_from_index(f, n, i);
        if (is_irreducible(p)) return p;
    }
    throw std::logic_error("least_irreducible: none found");
}

// ---------------------------------------------------------------------------

/// F_q[X]/(P) for monic P of degree n >= 1.  Residues are polynomials of
/// degree < n, encoded as the integer sum r_i q^i.  An optional table stores,
/// per residue, 0 for zero, +1 for a nonzero square and -1 otherwise; for
/// irreducible P this is the quadratic character of F_{q^n}.
class ResidueRing {
public:
    static constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 24;

    ResidueRing(FqPoly modulus, bool build_table, std::uint64_t table_budget = kDefaultTableBudget)
        : field_(modulus.field()), modulus_(std::move(modulus)) {
        if (!modulus_.is_monic() || modulus_.degree() < 1)
            throw std::invalid_argument("ResidueRing: modulus must be monic of degree >= 1");
        n_ = modulus_.degree();
        neg_low_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) neg_low_[static_cast<std::size_t>(i)] = field_.neg(modulus_[static_cast<std::size_t>(i)]);
        irreducible_ = is_irreducible(modulus_);
        size_ = 1;
        bool fits = true;
        for (int i = 0; i < n_; ++i) {
            if (size_ > std::numeric_limits<std::uint64_t>::max() / field_.q()) {
                fits = false;
                break;
            }
            size_ *= field_.q();
        }
        if (build_table) {
            if (!fits || size_ > table_budget)
                throw std::length_error("ResidueRing: q^n exceeds the squares-table budget");
            build_squares_table();
        }
        if (!fits) size_ = 0;
    }

    const FieldCtx& field() const noexcept { return field_; }
    const FqPoly& modulus() const noexcept { return modulus_; }
    int degree() const noexcept { return n_; }
    bool is_field() const noexcept { return irreducible_; }
    /// q^n, or 0 when that overflows 64 bits.
    std::uint64_t size() const noexcept { return size_; }
    bool has_table() const noexcept { return !table_.empty(); }
    std::span<const std::int8_t> table() const noexcept { return table_; }

    FqPoly reduce(const FqPoly& a) const { return a % modulus_; }
    FqPoly mul(const FqPoly& a, const FqPoly& b) const { return (a * b) % modulus_; }
    FqPoly pow(const FqPoly& a, const BigInt& e) const { return powmod(a, e, modulus_); }

    std::uint64_t encode(const FqPoly& residue) const {
        if (residue.degree() >= n_) throw std::invalid_argument("ResidueRing::encode: not reduced");
        return encode_digits(residue.coeffs());
    }
    std::uint64_t encode_digits(std::span<const Coeff> d) const noexcept {
        std::uint64_t idx = 0;
        for (std::size_t i = d.size(); i-- > 0;) idx = idx * field_.q() + d[i];
        return idx;
    }
    FqPoly decode(std::uint64_t idx) const {
        std::vector<Coeff> v(static_cast<std::size_t>(n_));
        for (auto& x : v) {
            x = static_cast<Coeff>(idx % field_.q());
            idx /= field_.q();
        }
        return FqPoly(field_, std::move(v));
    }

    /// out = a * X mod P on digit vectors of length n.
    void mul_by_x(std::span<Coeff> r) const noexcept {
        const Coeff top = r[static_cast<std::size_t>(n_ - 1)];
        for (int i = n_ - 1; i > 0; --i)
            r[static_cast<std::size_t>(i)] = field_.add(r[static_cast<std::size_t>(i - 1)], field_.mul(top, neg_low_[static_cast<std::size_t>(i)]));
        r[0] = field_.mul(top, neg_low_[0]);
    }

    /// out = a * b mod P on digit vectors; scratch must hold 2n entries.
    void mul_digits(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out, std::span<std::uint64_t> scratch) const noexcept {
        const std::size_t n = static_cast<std::size_t>(n_);
        const std::uint64_t q = field_.q();
        std::fill(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(2 * n - 1), 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) scratch[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
            if ((i & 7U) == 7U)
                for (std::size_t k = 0; k < 2 * n - 1; ++k) scratch[k] %= q;
        }
        for (std::size_t k = 0; k < 2 * n - 1; ++k) scratch[k] %= q;
        for (std::size_t k = 2 * n - 1; k-- > n;) {
            const std::uint64_t top = scratch[k];
            if (top == 0) continue;
            for (std::size_t i = 0; i < n; ++i) scratch[k - n + i] = (scratch[k - n + i] + top * neg_low_[i]) % q;
        }
        for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Coeff>(scratch[i]);
    }

    /// Quadratic character of a residue (table when present, else Euler's criterion).
    /// Requires an irreducible modulus.
    int quadratic_character(const FqPoly& a) const {
        const FqPoly r = reduce(a);
        if (r.is_zero()) return 0;
        if (has_table()) return table_[encode(r)];
        if (!irreducible_) throw std::domain_error("ResidueRing: quadratic character needs an irreducible modulus");
        return euler_criterion(r);
    }

    bool is_nonzero_square(std::uint64_t idx) const {
        if (!has_table()) throw std::logic_error("ResidueRing: no squares table");
        return table_.at(idx) == 1;
    }

    std::uint64_t nonzero_square_count() const noexcept {
        return static_cast<std::uint64_t>(std::count(table_.begin(), table_.end(), std::int8_t{1}));
    }

    /// a^{(q^n-1)/2} for a nonzero residue of an irreducible modulus; must be +-1.
    int euler_criterion(const FqPoly& residue) const {
        const BigInt e = (big_pow(field_.q(), static_cast<unsigned>(n_)) - 1) / 2;
        const FqPoly v = pow(residue, e);
        if (v.is_one()) return 1;
        if (v.degree() == 0 && v.leading() == field_.q() - 1) return -1;
        throw std::domain_error("ResidueRing: Euler criterion gave a non-constant value (modulus not irreducible?)");
    }

private:
    void build_squares_table() {
        table_.assign(static_cast<std::size_t>(size_), std::int8_t{-1});
        table_[0] = 0;
        if (irreducible_ && n_ >= 2) {
            build_by_cosets();
            return;
        }
        // Square every residue; r and -r give the same square.
        std::vector<Coeff> r(static_cast<std::size_t>(n_)), sq(static_cast<std::size_t>(n_));
        std::vector<std::uint64_t> scratch(2 * static_cast<std::size_t>(n_));
        for (std::uint64_t idx = 1; idx < size_; ++idx) {
            std::uint64_t t = idx;
            for (auto& x : r) {
                x = static_cast<Coeff>(t % field_.q());
                t /= field_.q();
            }
            mul_digits(r, r, sq, scratch);
            const std::uint64_t s = encode_digits(sq);
            if (s != 0) table_[static_cast<std::size_t>(s)] = 1;
        }
    }

    // Walk cosets of <X> in F_{q^n}^*: chi(c X^j) = chi(c) chi(X)^j, so only one
    // Euler-criterion evaluation per coset is needed.
    void build_by_cosets() {
        std::vector<bool> seen(static_cast<std::size_t>(size_), false);
        const int chi_x = euler_criterion(FqPoly::x(field_) % modulus_);
        std::vector<Coeff> r(static_cast<std::size_t>(n_));
        for (std::uint64_t start = 1; start < size_; ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            int chi = euler_criterion(decode(start));
            std::uint64_t t = start;
            for (auto& x : r) {
                x = static_cast<Coeff>(t % field_.q());
                t /= field_.q();
            }
            std::uint64_t idx = start;
            do {
                seen[static_cast<std::size_t>(idx)] = true;
                table_[static_cast<std::size_t>(idx)] = static_cast<std::int8_t>(chi);
                mul_by_x(r);
                idx = encode_digits(r);
                chi *= chi_x;
            } while (idx != start);
        }
    }

    FieldCtx field_;
    FqPoly modulus_;
    int n_ = 0;
    bool irreducible_ = false;
    std::uint64_t size_ = 0;
    std::vector<Coeff> neg_low_;
    std::vector<std::int8_t> table_;
};

}  // namespace hyperjac

#endif  // HYPERJAC_FFIELD_HPP
