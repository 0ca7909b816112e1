#include "conicring/conic.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "conicring/error.hpp"

namespace conicring {

namespace {

bool is_squarefree(const Integer& n, std::uint64_t bound) {
    for (const auto& pp : factor(n, bound).factors)
        if (pp.exponent > 1) return false;
    return true;
}

std::vector<std::uint64_t> prime_support(const Integer& n, std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (const auto& pp : factor(n, bound).factors) out.push_back(pp.prime);
    return out;
}

/// +-products of subsets of `primes`, ordered by absolute value, positive first.
std::vector<Integer> signed_subset_products(const std::vector<std::uint64_t>& primes) {
    std::vector<Integer> products{1};
    for (std::uint64_t p : primes) {
        const std::size_t n = products.size();
        for (std::size_t i = 0; i < n; ++i) products.push_back(products[i] * Integer(static_cast<unsigned long>(p)));
    }
    std::sort(products.begin(), products.end());
    std::vector<Integer> out;
    out.reserve(2 * products.size());
    for (const auto& m : products) {
        out.push_back(m);
        out.push_back(-m);
    }
    return out;
}

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    return Integer(sqrt(n));
}

}  // namespace

// ---- Conic -----------------------------------------------------------------

std::string Conic::to_string() const { return "Conic(" + a_.get_str() + "," + b_.get_str() + ")"; }

Conic new_conic(const Rational& a, const Rational& b, const Bounds& bounds) {
    if (a.is_zero() || b.is_zero()) throw InvalidConic("degenerate conic: coefficient is zero");
    return Conic(square_class(a, bounds.factor), square_class(b, bounds.factor));
}

std::vector<Place> ramified_places(const Conic& c, const Bounds& bounds) {
    std::vector<Place> out;
    for (Place v : candidate_places(c.a(), c.b(), bounds.factor))
        if (hilbert_symbol(c.a(), c.b(), v) == -1) out.push_back(v);
    return out;
}

BrauerClass brauer_class(const Conic& c, const Bounds& bounds) {
    return BrauerClass(ramified_places(c, bounds));
}

bool has_rational_point(const Conic& c, const Bounds& bounds) { return brauer_class(c, bounds).is_split(); }

bool is_isomorphic(const Conic& c1, const Conic& c2, const Bounds& bounds) {
    return brauer_class(c1, bounds) == brauer_class(c2, bounds);
}

bool admits_rational_map(const Conic& c1, const Conic& c2, const Bounds& bounds) {
    BrauerClass target = brauer_class(c2, bounds);
    return target.is_split() || brauer_class(c1, bounds) == target;
}

// ---- Splitting fields and symbol rewriting -----------------------------------

bool is_local_nonsquare(const Integer& d, Place v) {
    if (d == 0) throw InputError("zero is not a discriminant");
    if (v.is_real()) return d < 0;
    const std::uint64_t p = v.prime();
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
        // Squarefree d has valuation exactly one here.
        return true;
    }
    if (p == 2) return mpz_fdiv_ui(d.get_mpz_t(), 8) != 1;
    return legendre(d, Integer(static_cast<unsigned long>(p))) == -1;
}

bool splits(const Integer& d, const BrauerClass& cls) {
    return std::all_of(cls.ramified().begin(), cls.ramified().end(),
                       [&](Place v) { return is_local_nonsquare(d, v); });
}

Integer common_splitting_discriminant(const Conic& c1, const Conic& c2, const Bounds& bounds) {
    BrauerClass k1 = brauer_class(c1, bounds);
    BrauerClass k2 = brauer_class(c2, bounds);
    for (std::uint64_t n = 1; n <= bounds.search; ++n) {
        Integer pos = static_cast<unsigned long>(n);
        if (!is_squarefree(pos, bounds.factor)) continue;
        for (const Integer& d : {pos, Integer(-pos)}) {
            if (splits(d, k1) && splits(d, k2)) return d;
        }
    }
    throw SearchBoundExceeded("no common splitting discriminant with |d| <= " +
                              std::to_string(bounds.search));
}

Conic rewrite_with_discriminant(const Conic& c, const Integer& d, const Bounds& bounds) {
    if (d == 0 || !is_squarefree(d, bounds.factor))
        throw InputError("discriminant " + d.get_str() + " is not a squarefree nonzero integer");
    const BrauerClass target = brauer_class(c, bounds);
    if (d == 1) {
        if (!target.is_split()) throw InputError("Q itself does not split " + c.to_string());
        return new_conic(1, 1, bounds);
    }
    if (!splits(d, target))
        throw InputError("Q(sqrt " + d.get_str() + ") does not split " + c.to_string());
    if (c.a() == d) return c;
    if (c.b() == d) return new_conic(c.b(), c.a(), bounds);

    // e = (+-product of relevant primes) * (auxiliary prime q), q = 1 first.
    std::vector<std::uint64_t> base{2};
    for (const Integer* n : {&c.a(), &c.b(), &d}) {
        auto support = prime_support(*n, bounds.factor);
        base.insert(base.end(), support.begin(), support.end());
    }
    for (Place v : target.ramified())
        if (!v.is_real()) base.push_back(v.prime());
    base = sorted_unique(std::move(base));
    const std::vector<Integer> cofactors = signed_subset_products(base);

    auto try_multiplier = [&](const Integer& q) -> std::optional<Conic> {
        for (const auto& s : cofactors) {
            Conic candidate = new_conic(d, Integer(s * q), bounds);
            if (brauer_class(candidate, bounds) == target) return candidate;
        }
        return std::nullopt;
    };

    if (auto found = try_multiplier(1)) return *found;
    for (std::uint64_t q = 3; q <= bounds.search; q += 2) {
        if (!is_prime(q) || std::binary_search(base.begin(), base.end(), q)) continue;
        if (auto found = try_multiplier(Integer(static_cast<unsigned long>(q)))) return *found;
    }
    throw SearchBoundExceeded("no presentation (" + d.get_str() + ", e) of " + c.to_string() +
                              " with auxiliary prime <= " + std::to_string(bounds.search));
}

Conic brauer_product(const Conic& c1, const Conic& c2, const Bounds& bounds) {
    const BrauerClass expected = class_add(brauer_class(c1, bounds), brauer_class(c2, bounds));

    Conic result = [&] {
        // A shared coefficient is already a common discriminant form; (a,b) = (b,a).
        if (c1.a() == c2.a()) return new_conic(c1.a(), Integer(c1.b() * c2.b()), bounds);
        if (c1.a() == c2.b()) return new_conic(c1.a(), Integer(c1.b() * c2.a()), bounds);
        if (c1.b() == c2.a()) return new_conic(c1.b(), Integer(c1.a() * c2.b()), bounds);
        if (c1.b() == c2.b()) return new_conic(c1.b(), Integer(c1.a() * c2.a()), bounds);

        Integer d = common_splitting_discriminant(c1, c2, bounds);
        if (d == 1) return new_conic(1, 1, bounds);
        Conic r1 = rewrite_with_discriminant(c1, d, bounds);
        Conic r2 = rewrite_with_discriminant(c2, d, bounds);
        return new_conic(d, Integer(r1.b() * r2.b()), bounds);
    }();

    if (brauer_class(result, bounds) != expected) {
        throw std::logic_error("brauer_product: " + result.to_string() + " is not in class " +
                               expected.to_string());
    }
    return result;
}

Conic conic_from_class(const BrauerClass& cls, const Bounds& bounds) {
    if (cls.is_split()) return new_conic(1, 1, bounds);

    std::vector<std::uint64_t> base{2};
    for (Place v : cls.ramified())
        if (!v.is_real()) base.push_back(v.prime());
    const std::vector<Integer> second = signed_subset_products(sorted_unique(std::move(base)));

    for (std::uint64_t n = 1; n <= bounds.search; ++n) {
        Integer pos = static_cast<unsigned long>(n);
        if (!is_squarefree(pos, bounds.factor)) continue;
        for (const Integer& a : {pos, Integer(-pos)}) {
            for (const auto& b : second) {
                Conic candidate = new_conic(a, b, bounds);
                if (brauer_class(candidate, bounds) == cls) return candidate;
            }
        }
    }
    throw SearchBoundExceeded("no conic found for class " + cls.to_string() + " with |a| <= " +
                              std::to_string(bounds.search));
}

// ---- Quadratic extension elements ------------------------------------------

QuadExtElem::QuadExtElem(const Integer& d, const Rational& u, const Rational& v) : u_(u), v_(v) {
    if (d == 0 || (d != 1 && !is_squarefree(d, kDefaultFactorBound)))
        throw InputError("quadratic field parameter " + d.get_str() + " is not squarefree");
    if (d == 1) {
        u_ = u_ + v_;
        v_ = Rational();
    } else if (!v_.is_zero()) {
        d_ = d;
    }
}

Integer QuadExtElem::common_field(const QuadExtElem& x, const QuadExtElem& y) {
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1 || x.d_ == y.d_) return x.d_;
    throw InputError("elements of Q(sqrt " + x.d_.get_str() + ") and Q(sqrt " + y.d_.get_str() +
                     ") cannot be combined");
}

QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y) {
    Integer d = QuadExtElem::common_field(x, y);
    return QuadExtElem(d, x.u_ + y.u_, x.v_ + y.v_);
}

QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y) { return x + (-y); }

QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y) {
    Integer d = QuadExtElem::common_field(x, y);
    return QuadExtElem(d, x.u_ * y.u_ + Rational(d) * x.v_ * y.v_, x.u_ * y.v_ + x.v_ * y.u_);
}

QuadExtElem QuadExtElem::operator-() const {
    QuadExtElem r = *this;
    r.u_ = -u_;
    r.v_ = -v_;
    return r;
}

std::string QuadExtElem::to_string() const {
    if (v_.is_zero()) return u_.to_string();
    const std::string root = "sqrt(" + d_.get_str() + ")";
    std::string irrational;
    if (v_ == Rational(1)) {
        irrational = root;
    } else if (v_ == Rational(-1)) {
        irrational = "-" + root;
    } else {
        irrational = v_.to_string() + "*" + root;
    }
    if (u_.is_zero()) return irrational;
    return u_.to_string() + (irrational.front() == '-' ? "" : "+") + irrational;
}

// ---- Projective points -------------------------------------------------------

ProjPoint::ProjPoint(Triple coords) : coords_(std::move(coords)) {
    if (std::all_of(coords_.begin(), coords_.end(), [](const QuadExtElem& x) { return x.is_zero(); }))
        throw InputError("projective point with all coordinates zero");
    (void)field();
}

Integer ProjPoint::field() const {
    Integer d = 1;
    for (const auto& x : coords_) {
        if (x.d() == 1) continue;
        if (d != 1 && d != x.d()) throw InputError("projective point coordinates in different fields");
        d = x.d();
    }
    return d;
}

std::string ProjPoint::to_string() const {
    return "(" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string() + ")";
}

bool operator==(const ProjPoint& p, const ProjPoint& q) {
    const auto& x = p.coords();
    const auto& y = q.coords();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (x[i] * y[j] != x[j] * y[i]) return false;
    return true;
}

QuadExtElem evaluate(const Conic& c, const Triple& x) {
    return x[0] * x[0] - QuadExtElem(Rational(c.a())) * x[1] * x[1] -
           QuadExtElem(Rational(c.b())) * x[2] * x[2];
}

Triple phi_forward(const Rational& a, const Triple& x, const Triple& y) {
    const QuadExtElem scale(a);
    return {x[0] * y[0] + scale * x[1] * y[1], x[0] * y[1] + x[1] * y[0], x[2] * y[2]};
}

ProjPoint rational_point(const Conic& c, const Bounds& bounds) {
    if (!has_rational_point(c, bounds)) throw InputError(c.to_string() + " has no rational point");
    const Integer& a = c.a();
    const Integer& b = c.b();

    using Candidate = std::tuple<Integer, Integer, Integer>;  // (x3, x2, x1)
    for (std::uint64_t level = 1; level <= bounds.search; ++level) {
        const Integer h = static_cast<unsigned long>(level);
        std::vector<Candidate> found;
        auto keep = [&](const Integer& x1, const Integer& x2, const Integer& x3) {
            Integer g = gcd(gcd(x1, x2), x3);
            if (g == 1) found.emplace_back(x3, x2, x1);
        };
        // x1 = h: a x2^2 = h^2 - b x3^2.
        for (Integer x3 = 0; x3 <= h; ++x3) {
            Integer rem = h * h - b * x3 * x3;
            if (!mpz_divisible_p(rem.get_mpz_t(), a.get_mpz_t())) continue;
            if (auto x2 = exact_sqrt(Integer(rem / a)); x2 && *x2 <= h) keep(h, *x2, x3);
        }
        // x1 < h and max(x2, x3) = h.
        auto probe = [&](const Integer& x2, const Integer& x3) {
            if (auto x1 = exact_sqrt(Integer(a * x2 * x2 + b * x3 * x3)); x1 && *x1 < h) keep(*x1, x2, x3);
        };
        for (Integer x3 = 0; x3 <= h; ++x3) probe(h, x3);
        for (Integer x2 = 0; x2 < h; ++x2) probe(x2, h);

        if (!found.empty()) {
            const auto& [x3, x2, x1] = *std::min_element(found.begin(), found.end());
            return ProjPoint({Rational(x1), Rational(x2), Rational(x3)});
        }
    }
    throw SearchBoundExceeded("no rational point on " + c.to_string() + " with height <= " +
                              std::to_string(bounds.search));
}

ProjPoint point_over_splitting_field(const Conic& c, const Bounds& bounds) {
    if (has_rational_point(c, bounds)) return rational_point(c, bounds);
    return ProjPoint({QuadExtElem::sqrt(c.a()), Rational(1), Rational(0)});
}

}  // namespace conicring
