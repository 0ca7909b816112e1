#pragma once

// Exact arithmetic over Q: rationals, places, bounded factorization and
// local Hilbert symbols.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace conicring {

using Integer = mpz_class;

inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;
inline constexpr std::uint64_t kDefaultSearchBound = 10'000;

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& numerator, const Integer& denominator);

    /// Accepts an optional sign, digits, and optionally "/" followed by
    /// positive digits ("-3/7", "+4", "12"). Returns nullopt on malformed text
    /// or a zero denominator.
    static std::optional<Rational> parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    const mpq_class& value() const { return value_; }

    std::string to_string() const;

    friend Rational operator+(const Rational& x, const Rational& y) { return from(x.value_ + y.value_); }
    friend Rational operator-(const Rational& x, const Rational& y) { return from(x.value_ - y.value_); }
    friend Rational operator*(const Rational& x, const Rational& y) { return from(x.value_ * y.value_); }
    friend Rational operator/(const Rational& x, const Rational& y);
    Rational operator-() const { return from(-value_); }

    friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        int c = cmp(x.value_, y.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    static Rational from(mpq_class q) {
        Rational r;
        r.value_ = std::move(q);
        r.value_.canonicalize();
        return r;
    }

    mpq_class value_;
};

/// A place of Q: a finite prime or the real place. Ordered 2 < 3 < 5 < ... < inf.
class Place {
public:
    static Place real() { return Place(0); }
    /// Throws InputError unless p is prime.
    static Place finite(std::uint64_t p);
    /// Parses "inf" or a decimal prime.
    static std::optional<Place> parse(std::string_view text);

    bool is_real() const { return prime_ == 0; }
    /// Zero for the real place.
    std::uint64_t prime() const { return prime_; }

    std::string to_string() const;

    friend bool operator==(Place, Place) = default;
    friend std::strong_ordering operator<=>(Place x, Place y) { return x.order_key() <=> y.order_key(); }

private:
    explicit Place(std::uint64_t p) : prime_(p) {}
    std::uint64_t order_key() const { return prime_ == 0 ? UINT64_MAX : prime_; }

    std::uint64_t prime_;
};

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // ascending primes
};

/// Trial division by every integer up to `bound`. A cofactor at most bound^2
/// left over is prime; anything larger raises FactorBoundExceeded.
/// `bound` must lie in [2, 2^32).
Factorization factor(const Integer& n, std::uint64_t bound = kDefaultFactorBound);

bool is_prime(std::uint64_t n);

/// Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}.
int legendre(const Integer& a, const Integer& p);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Integer& n, std::uint64_t p);

/// Squarefree integer in the same square class as n != 0.
Integer squarefree_kernel(const Integer& n, std::uint64_t bound = kDefaultFactorBound);

/// Squarefree integer in the same square class as q != 0 (q = n/d ~ n*d).
Integer square_class(const Rational& q, std::uint64_t bound = kDefaultFactorBound);

/// Hilbert symbol (a,b)_v for nonzero integers; no factoring is needed.
int hilbert_symbol(const Integer& a, const Integer& b, Place v);

/// Hilbert symbol (a,b)_v: +1 iff x^2 - a y^2 - b z^2 = 0 has a nontrivial
/// solution over the completion at v. Arguments are reduced to squarefree
/// representatives first.
int hilbert_symbol(const Rational& a, const Rational& b, Place v,
                   std::uint64_t bound = kDefaultFactorBound);

/// 2, every odd prime dividing a numerator or denominator of a or b, and inf.
/// (a,b)_v = +1 at every other place.
std::vector<Place> candidate_places(const Rational& a, const Rational& b,
                                    std::uint64_t bound = kDefaultFactorBound);

/// Same for nonzero integers.
std::vector<Place> candidate_places(const Integer& a, const Integer& b,
                                    std::uint64_t bound = kDefaultFactorBound);

}  // namespace conicring
