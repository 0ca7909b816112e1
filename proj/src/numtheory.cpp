#include "conicring/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "conicring/error.hpp"

namespace conicring {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer abs_value(const Integer& n) {
    Integer r = n;
    if (r < 0) r = -r;
    return r;
}

void add_odd_primes(const Integer& n, std::uint64_t bound, std::vector<Place>& out) {
    for (const auto& pp : factor(n, bound).factors)
        if (pp.prime != 2) out.push_back(Place::finite(pp.prime));
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw std::domain_error("division by zero");
    return Rational::from(x.value_ / y.value_);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

Place Place::finite(std::uint64_t p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
    return Place(p);
}

std::optional<Place> Place::parse(std::string_view text) {
    if (text == "inf") return real();
    if (!all_digits(text) || text.size() > 19) return std::nullopt;
    std::uint64_t p = std::stoull(std::string(text));
    if (!is_prime(p)) return std::nullopt;
    return Place(p);
}

std::string Place::to_string() const { return is_real() ? "inf" : std::to_string(prime_); }

Factorization factor(const Integer& n, std::uint64_t bound) {
    if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
    if (bound < 2 || bound >= (std::uint64_t{1} << 32))
        throw std::invalid_argument("factor: bound must lie in [2, 2^32)");

    Factorization result;
    result.sign = n < 0 ? -1 : 1;
    Integer rem = abs_value(n);

    std::uint64_t d = 2;
    // Big cofactor: divide with GMP until it fits a machine word.
    while (!rem.fits_ulong_p() && d <= bound) {
        if (mpz_divisible_ui_p(rem.get_mpz_t(), d)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rem.get_mpz_t(), d)) {
                mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), d);
                ++e;
            }
            result.factors.push_back({d, e});
        }
        d = d == 2 ? 3 : d + 2;
    }
    if (!rem.fits_ulong_p()) {
        throw FactorBoundExceeded("cofactor " + rem.get_str() + " exceeds factor bound " +
                                  std::to_string(bound) + " squared");
    }

    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    std::uint64_t r = rem.get_ui();
    for (; d <= bound && d <= r / d; d = d == 2 ? 3 : d + 2) {
        if (r % d != 0) continue;
        unsigned e = 0;
        while (r % d == 0) {
            r /= d;
            ++e;
        }
        result.factors.push_back({d, e});
    }
    if (r > 1) {
        // Every prime below d has been removed, so r is prime once r < d^2.
        if (d <= r / d && r > bound * bound) {
            throw FactorBoundExceeded("cofactor " + std::to_string(r) + " exceeds factor bound " +
                                      std::to_string(bound) + " squared");
        }
        result.factors.push_back({r, 1});
    }
    return result;
}

int legendre(const Integer& a, const Integer& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t())) throw std::invalid_argument("legendre: p must be an odd prime");
    // Binary Jacobi algorithm; equals the Legendre symbol for prime p.
    Integer x = a % p;
    if (x < 0) x += p;
    Integer n = p;
    int t = 1;
    while (x != 0) {
        while (mpz_even_p(x.get_mpz_t())) {
            x /= 2;
            unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(x, n);
        if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) t = -t;
        x %= n;
    }
    return n == 1 ? t : 0;
}

unsigned valuation(const Integer& n, std::uint64_t p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    Integer m = n;
    unsigned v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

Integer squarefree_kernel(const Integer& n, std::uint64_t bound) {
    Factorization f = factor(n, bound);
    Integer k = f.sign;
    for (const auto& pp : f.factors)
        if (pp.exponent % 2 == 1) k *= Integer(static_cast<unsigned long>(pp.prime));
    return k;
}

Integer square_class(const Rational& q, std::uint64_t bound) {
    if (q.is_zero()) throw InputError("zero has no square class");
    return squarefree_kernel(q.numerator() * q.denominator(), bound);
}

int hilbert_symbol(const Integer& a, const Integer& b, Place v) {
    if (a == 0 || b == 0) throw InputError("hilbert_symbol: arguments must be nonzero");
    if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;

    const std::uint64_t p = v.prime();
    const unsigned alpha = valuation(a, p);
    const unsigned beta = valuation(b, p);
    Integer u = a;
    Integer w = b;
    Integer pz = static_cast<unsigned long>(p);
    for (unsigned i = 0; i < alpha; ++i) u /= pz;
    for (unsigned i = 0; i < beta; ++i) w /= pz;

    if (p != 2) {
        int s = ((alpha * beta) % 2 == 1 && p % 4 == 3) ? -1 : 1;
        if (beta % 2 == 1) s *= legendre(u, pz);
        if (alpha % 2 == 1) s *= legendre(w, pz);
        return s;
    }

    // Units of Z_2: epsilon(x) = (x-1)/2, omega(x) = (x^2-1)/8, both mod 2.
    auto epsilon = [](const Integer& x) { return mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 ? 1u : 0u; };
    auto omega = [](const Integer& x) {
        unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), 8);
        return (r == 3 || r == 5) ? 1u : 0u;
    };
    unsigned e = epsilon(u) * epsilon(w) + alpha * omega(w) + beta * omega(u);
    return e % 2 == 0 ? 1 : -1;
}

int hilbert_symbol(const Rational& a, const Rational& b, Place v, std::uint64_t bound) {
    if (a.is_zero() || b.is_zero()) throw InputError("hilbert_symbol: arguments must be nonzero");
    return hilbert_symbol(square_class(a, bound), square_class(b, bound), v);
}

std::vector<Place> candidate_places(const Integer& a, const Integer& b, std::uint64_t bound) {
    if (a == 0 || b == 0) throw InputError("candidate_places: arguments must be nonzero");
    std::vector<Place> places{Place::finite(2), Place::real()};
    add_odd_primes(a, bound, places);
    add_odd_primes(b, bound, places);
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());
    return places;
}

std::vector<Place> candidate_places(const Rational& a, const Rational& b, std::uint64_t bound) {
    if (a.is_zero() || b.is_zero()) throw InputError("candidate_places: arguments must be nonzero");
    return candidate_places(Integer(a.numerator() * a.denominator()),
                            Integer(b.numerator() * b.denominator()), bound);
}

}  // namespace conicring
