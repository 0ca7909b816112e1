#pragma once

// The subring of the Grothendieck ring of varieties over Q generated by smooth
// conics, in the normal form sum gamma * C(G) [P^1]^m: a free abelian group on
// pairs (finite subgroup G of Br(Q)_2, m >= 0) with
//   C(G1) C(G2) = C(<G1,G2>) [P^1]^(dim G1 + dim G2 - dim <G1,G2>).

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conicring/brauer.hpp"
#include "conicring/conic.hpp"

namespace conicring {

/// C(group) * [P^1]^lefschetz_power.
struct Term {
    Subgroup group;
    unsigned lefschetz_power = 0;

    /// "C(0)[L]^2", "C({2,inf},{3,inf})[L]^0".
    std::string to_string() const;

    friend bool operator==(const Term&, const Term&) = default;
    friend std::strong_ordering operator<=>(const Term& x, const Term& y) {
        if (auto c = x.group <=> y.group; c != 0) return c;
        return x.lefschetz_power <=> y.lefschetz_power;
    }
};

/// Term(join, m1 + m2 + dim G1 + dim G2 - dim join).
Term term_product(const Term& x, const Term& y);

class RingElement {
public:
    using Coefficients = std::map<Term, Integer>;

    /// Zero.
    RingElement() = default;
    RingElement(const Term& t, const Integer& coefficient = 1);

    /// C(0) = [Spec Q].
    static RingElement one() { return RingElement(Term{}); }
    /// [P^1] = C(0) [P^1]^1, also the class of every split conic.
    static RingElement lefschetz() { return RingElement(Term{Subgroup{}, 1}); }
    static RingElement integer(const Integer& n) { return RingElement(Term{}, n); }

    /// No stored coefficient is zero.
    const Coefficients& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Term& t) const;

    /// Canonical text: "0", or terms in Term order such as
    /// "C(0)[L]^2 - C({2,inf})[L]^1", "3*C(0)[L]^0".
    std::string to_string() const;

    RingElement& operator+=(const RingElement& y);
    RingElement& operator-=(const RingElement& y);
    friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
    friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
    friend RingElement operator*(const RingElement& x, const RingElement& y);
    RingElement operator-() const;

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    void accumulate(const Term& t, const Integer& c);

    Coefficients terms_;
};

inline RingElement add(const RingElement& x, const RingElement& y) { return x + y; }
inline RingElement negate(const RingElement& x) { return -x; }
inline RingElement mul(const RingElement& x, const RingElement& y) { return x * y; }
RingElement pow(const RingElement& x, unsigned s);

struct LeadingTerm {
    Term term;
    Integer coefficient;
};

/// Among the inclusion-minimal subgroups carrying a nonzero coefficient, the
/// smallest in the Subgroup total order; then the smallest power with that
/// subgroup. Throws ZeroElement for 0.
LeadingTerm leading_term(const RingElement& x);

/// With (G0, m, gamma) the leading term, checks that the coefficient of
/// C(G0)[P^1]^(s m + (s-1) dim G0) in x^s is gamma^s.
bool power_coefficient_check(const RingElement& x, unsigned s);

/// Factors may repeat; the empty product is Spec Q.
using ConicProduct = std::vector<Conic>;

struct CanonicalForm {
    unsigned lefschetz_power = 0;
    Subgroup group;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// G = span of the factors' classes and m = |factors| - dim G: the product is
/// [(P^1)^m x B_1 x ... x B_dim] for conics B_i with the basis classes of G.
CanonicalForm canonical_of_product(const ConicProduct& product, const Bounds& bounds = {});
RingElement from_conic_product(const ConicProduct& product, const Bounds& bounds = {});

/// The same canonical form reached by rewriting the factor list: every
/// transvection "j += i" of the generator reduction replaces C_j by C_i * C_j,
/// which leaves the class of the product unchanged.
struct ProductReduction {
    std::vector<BrauerClass> classes;   // classes of the input factors
    std::vector<TransvectionOp> ops;
    std::vector<Conic> rewritten;       // C_j after each op
    std::vector<Conic> final_factors;   // basis conics, then split conics
    Subgroup basis;
};

ProductReduction reduce_product(const ConicProduct& product, const Bounds& bounds = {});

struct Decision {
    enum class Reason { None, SizeMismatch, WitnessInFirst, WitnessInSecond };

    bool holds = false;
    Reason reason = Reason::None;
    std::size_t first_size = 0;
    std::size_t second_size = 0;
    /// A class in one span and not the other.
    std::optional<BrauerClass> witness;
};

/// Equal in the Grothendieck ring iff same number of factors and same span.
Decision decide_equal_products(const ConicProduct& first, const ConicProduct& second,
                               const Bounds& bounds = {});

/// Stably birational iff same span.
Decision decide_stably_birational(const ConicProduct& first, const ConicProduct& second,
                                  const Bounds& bounds = {});

}  // namespace conicring
