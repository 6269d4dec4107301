#ifndef HYPERJAC_QUADCHAR_HPP
#define HYPERJAC_QUADCHAR_HPP

// Quadratic residue symbols (F/P) in F_q[X] and von Mangoldt weighted
// character sums over monic prime powers.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperjac/ffield.hpp"

namespace hyperjac {

/// (F/P) for monic irreducible P: 0 if P | F, else +1 iff F mod P is a square
/// in F_q[X]/(P).  Throws std::domain_error when Euler's criterion does not
/// land on +-1, which exposes most reducible P.
inline int legendre_symbol(const FqPoly& f, const FqPoly& p) {
    if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("legendre_symbol: P must be monic of degree >= 1");
    const FqPoly r = f % p;
    if (r.is_zero()) return 0;
    const BigInt e = (big_pow(p.q(), static_cast<unsigned>(p.degree())) - 1) / 2;
    const FqPoly v = powmod(r, e, p);
    if (v.is_one()) return 1;
    if (v.degree() == 0 && v.leading() == p.q() - 1) return -1;
    throw std::domain_error("legendre_symbol: P is not irreducible");
}

inline int legendre_symbol(const FqPoly& f, const ResidueRing& ring) { return ring.quadratic_character(f); }

/// (F/P^k) = (F/P)^k.
inline int char_prime_power(const FqPoly& f, const FqPoly& p, int k) {
    if (k < 1) throw std::invalid_argument("char_prime_power: k must be >= 1");
    const int s = legendre_symbol(f, p);
    return (k % 2 == 0) ? s * s : s;
}

/// (F/infinity) for monic F: 1 when deg F is even (split), 0 when odd (ramified).
inline int infinite_place_value(const FqPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("infinite_place_value: F must be monic");
    return f.degree() % 2 == 0 ? 1 : 0;
}

/// sum over monic prime powers f = P^k with deg f = n of Lambda(f) (F/f).
/// Reference implementation: enumerates primes and uses Euler's criterion.
inline std::int64_t lambda_char_sum(const FqPoly& f, int n) {
    if (n < 1) throw std::invalid_argument("lambda_char_sum: n must be >= 1");
    std::int64_t total = 0;
    for (int m = 1; m <= n; ++m) {
        if (n % m) continue;
        const int k = n / m;
        for_each_monic(f.field(), m, MonicFilter::irreducible, [&](const FqPoly& p, std::uint64_t) {
            const int s = legendre_symbol(f, p);
            total += static_cast<std::int64_t>(m) * ((k % 2 == 0) ? s * s : s);
        });
    }
    return total;
}

/// Per-prime residue tables for all monic primes of degree <= max_degree.
/// Immutable after construction; safe to share across threads.
class SymbolTableCache {
public:
    SymbolTableCache(FieldCtx field, int max_degree, std::uint64_t table_budget = ResidueRing::kDefaultTableBudget)
        : field_(field), max_degree_(max_degree) {
        if (max_degree < 1) throw std::invalid_argument("SymbolTableCache: max_degree must be >= 1");
        for (auto& p : monic_irreducibles(field, max_degree)) {
            const bool table = monic_count(field.q(), p.degree()) <= table_budget;
            rings_.emplace_back(std::move(p), table, table_budget);
        }
        for (const auto& r : rings_) {
            offsets_.push_back(digit_count_);
            digit_count_ += static_cast<std::size_t>(r.degree());
        }
    }

    const FieldCtx& field() const noexcept { return field_; }
    int max_degree() const noexcept { return max_degree_; }
    std::size_t prime_count() const noexcept { return rings_.size(); }
    const FqPoly& prime(std::size_t i) const { return rings_.at(i).modulus(); }
    int prime_degree(std::size_t i) const { return rings_[i].degree(); }
    const ResidueRing& ring(std::size_t i) const { return rings_.at(i); }

    /// Number of primes with degree <= deg (primes are sorted by degree).
    std::size_t primes_up_to(int deg) const noexcept {
        std::size_t n = 0;
        while (n < rings_.size() && rings_[n].degree() <= deg) ++n;
        return n;
    }

    /// Total residue digits over all primes (walker storage size).
    std::size_t digit_count() const noexcept { return digit_count_; }
    std::size_t digit_offset(std::size_t i) const noexcept { return offsets_[i]; }

    /// Symbol of a residue given as digits for prime i.
    int symbol_from_digits(std::size_t i, std::span<const Coeff> digits) const {
        const ResidueRing& r = rings_[i];
        if (r.has_table()) return r.table()[static_cast<std::size_t>(r.encode_digits(digits))];
        bool zero = true;
        for (Coeff c : digits) zero = zero && c == 0;
        if (zero) return 0;
        return r.euler_criterion(FqPoly(field_, std::vector<Coeff>(digits.begin(), digits.end())));
    }

    /// Digits of F mod P_i (Horner over the coefficients of F).
    void reduce_digits(std::span<const Coeff> f, std::size_t i, std::span<Coeff> out) const noexcept {
        const ResidueRing& r = rings_[i];
        const std::size_t k = static_cast<std::size_t>(r.degree());
        std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), 0);
        for (std::size_t j = f.size(); j-- > 0;) {
            r.mul_by_x(out.subspan(0, k));
            out[0] = field_.add(out[0], f[j]);
        }
    }

    int symbol(const FqPoly& f, std::size_t i) const {
        std::vector<Coeff> d(static_cast<std::size_t>(rings_.at(i).degree()));
        reduce_digits(f.coeffs(), i, d);
        return symbol_from_digits(i, d);
    }

    /// Symbols of F at the first out.size() primes.
    void symbols(const FqPoly& f, std::span<std::int8_t> out) const {
        std::vector<Coeff> d(static_cast<std::size_t>(max_degree_));
        for (std::size_t i = 0; i < out.size(); ++i) {
            const std::size_t k = static_cast<std::size_t>(rings_[i].degree());
            reduce_digits(f.coeffs(), i, std::span<Coeff>(d).subspan(0, k));
            out[i] = static_cast<std::int8_t>(symbol_from_digits(i, std::span<const Coeff>(d).subspan(0, k)));
        }
    }

    /// Lambda-weighted sum from precomputed symbols; visits only pairs (P, k) with k deg P = n.
    std::int64_t lambda_char_sum(std::span<const std::int8_t> syms, int n) const {
        if (n < 1 || n > max_degree_) throw std::out_of_range("lambda_char_sum: n outside cached degree range");
        std::int64_t total = 0;
        for (std::size_t i = 0; i < syms.size() && rings_[i].degree() <= n; ++i) {
            const int m = rings_[i].degree();
            if (n % m) continue;
            const int s = syms[i];
            total += static_cast<std::int64_t>(m) * (((n / m) % 2 == 0) ? s * s : s);
        }
        return total;
    }

    std::int64_t lambda_char_sum(const FqPoly& f, int n) const {
        std::vector<std::int8_t> syms(primes_up_to(n));
        symbols(f, syms);
        return lambda_char_sum(syms, n);
    }

private:
    FieldCtx field_;
    int max_degree_;
    std::vector<ResidueRing> rings_;
    std::vector<std::size_t> offsets_;
    std::size_t digit_count_ = 0;
};

/// Walks monic degree-d polynomials in enumeration order, keeping F mod P for
/// the first prime_limit primes of a cache up to date.  Advancing the index
/// adds +1 to each changed digit c_j (a wrap q-1 -> 0 is also +1 mod q), so
/// each residue is updated by adding X^j mod P.
class SymbolWalker {
public:
    SymbolWalker(const SymbolTableCache& cache, int d, std::size_t prime_limit)
        : cache_(&cache), d_(d), primes_(prime_limit), coeffs_(static_cast<std::size_t>(d) + 1, 0) {
        if (prime_limit > cache.prime_count()) throw std::out_of_range("SymbolWalker: prime_limit exceeds cache");
        digits_ = primes_ == 0 ? 0 : cache.digit_offset(primes_ - 1) + static_cast<std::size_t>(cache.prime_degree(primes_ - 1));
        residues_.assign(digits_, 0);
        xpow_.assign(digits_ * static_cast<std::size_t>(d), 0);
        std::vector<Coeff> mono(static_cast<std::size_t>(d) + 1, 0);
        for (int j = 0; j < d; ++j) {
            std::fill(mono.begin(), mono.end(), 0);
            mono[static_cast<std::size_t>(j)] = 1;
            for (std::size_t i = 0; i < primes_; ++i) {
                const std::size_t k = static_cast<std::size_t>(cache.prime_degree(i));
                cache.reduce_digits(std::span<const Coeff>(mono).subspan(0, static_cast<std::size_t>(j) + 1), i,
                                    std::span<Coeff>(xpow_).subspan(xpow_offset(i, j), k));
            }
        }
        coeffs_.back() = 1;
        end_ = monic_count(cache.field().q(), d);
    }

    /// Jump to an enumeration index with a full reduction.
    void seek(std::uint64_t index) {
        if (index >= end_) throw std::out_of_range("SymbolWalker::seek: index >= q^d");
        index_ = index;
        const auto q = cache_->field().q();
        for (int j = 0; j < d_; ++j) {
            coeffs_[static_cast<std::size_t>(j)] = static_cast<Coeff>(index % q);
            index /= q;
        }
        for (std::size_t i = 0; i < primes_; ++i) {
            const std::size_t k = static_cast<std::size_t>(cache_->prime_degree(i));
            cache_->reduce_digits(coeffs_, i, std::span<Coeff>(residues_).subspan(cache_->digit_offset(i), k));
        }
    }

    /// Advance to index + 1; returns false when the range is exhausted.
    bool next() {
        if (index_ + 1 >= end_) return false;
        ++index_;
        const auto& f = cache_->field();
        for (int j = 0; j < d_; ++j) {
            Coeff& c = coeffs_[static_cast<std::size_t>(j)];
            c = f.add(c, 1);
            for (std::size_t i = 0; i < primes_; ++i) {
                const std::size_t k = static_cast<std::size_t>(cache_->prime_degree(i));
                Coeff* r = residues_.data() + cache_->digit_offset(i);
                const Coeff* x = xpow_.data() + xpow_offset(i, j);
                for (std::size_t t = 0; t < k; ++t) r[t] = f.add(r[t], x[t]);
            }
            if (c != 0) break;
        }
        return true;
    }

    std::uint64_t index() const noexcept { return index_; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    FqPoly poly() const { return FqPoly(cache_->field(), coeffs_); }

    void symbols(std::span<std::int8_t> out) const {
        for (std::size_t i = 0; i < out.size() && i < primes_; ++i) {
            const std::size_t k = static_cast<std::size_t>(cache_->prime_degree(i));
            out[i] = static_cast<std::int8_t>(
                cache_->symbol_from_digits(i, std::span<const Coeff>(residues_).subspan(cache_->digit_offset(i), k)));
        }
    }

private:
    std::size_t xpow_offset(std::size_t i, int j) const noexcept {
        return cache_->digit_offset(i) * static_cast<std::size_t>(d_) +
               static_cast<std::size_t>(j) * static_cast<std::size_t>(cache_->prime_degree(i));
    }

    const SymbolTableCache* cache_;
    int d_;
    std::size_t primes_;
    std::size_t digits_ = 0;
    std::vector<Coeff> coeffs_;
    std::vector<Coeff> residues_;
    std::vector<Coeff> xpow_;
    std::uint64_t index_ = 0;
    std::uint64_t end_ = 0;
};

}  // namespace hyperjac

#endif  // HYPERJAC_QUADCHAR_HPP
