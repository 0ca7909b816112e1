#pragma once

// Smooth conics over Q in diagonal form x1^2 - a x2^2 - b x3^2 = 0,
// i.e. quaternion symbols (a,b).

#include <array>
#include <cstdint>
#include <string>

#include "conicring/brauer.hpp"
#include "conicring/numtheory.hpp"

namespace conicring {

/// Resource limits shared by every bounded search.
struct Bounds {
    std::uint64_t factor = kDefaultFactorBound;
    std::uint64_t search = kDefaultSearchBound;
};

/// x1^2 - a x2^2 - b x3^2 = 0 with a, b squarefree nonzero integers.
class Conic {
public:
    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }

    /// "Conic(-1,3)".
    std::string to_string() const;

    friend bool operator==(const Conic&, const Conic&) = default;

private:
    friend Conic new_conic(const Rational& a, const Rational& b, const Bounds& bounds);
    Conic(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

    Integer a_;
    Integer b_;
};

/// Validates and reduces both coefficients to squarefree representatives.
/// Throws InvalidConic if either is zero.
Conic new_conic(const Rational& a, const Rational& b, const Bounds& bounds = {});

/// The places where (a,b)_v = -1, unvalidated. Always even for a correct
/// symbol; brauer_class() enforces it.
std::vector<Place> ramified_places(const Conic& c, const Bounds& bounds = {});
BrauerClass brauer_class(const Conic& c, const Bounds& bounds = {});

bool has_rational_point(const Conic& c, const Bounds& bounds = {});
bool is_isomorphic(const Conic& c1, const Conic& c2, const Bounds& bounds = {});
/// A rational map c1 -> c2 exists iff c2 is split or c1 and c2 are isomorphic.
bool admits_rational_map(const Conic& c1, const Conic& c2, const Bounds& bounds = {});

/// True iff the squarefree d is not a square in the completion Q_v.
bool is_local_nonsquare(const Integer& d, Place v);

/// Q(sqrt d) splits the class iff d is a local non-square at every ramified place.
bool splits(const Integer& d, const BrauerClass& cls);

/// Smallest |d| (positive first) among squarefree d with Q(sqrt d) splitting
/// both conics; 1 when both are split.
Integer common_splitting_discriminant(const Conic& c1, const Conic& c2, const Bounds& bounds = {});

/// Returns Conic(d, e) in the class of c. Q(sqrt d) must split c.
Conic rewrite_with_discriminant(const Conic& c, const Integer& d, const Bounds& bounds = {});

/// A conic in the sum of the two classes, built as (d, e1*e2) from the common
/// discriminant forms (d, e1) and (d, e2).
Conic brauer_product(const Conic& c1, const Conic& c2, const Bounds& bounds = {});

/// A conic with the given ramification set.
Conic conic_from_class(const BrauerClass& cls, const Bounds& bounds = {});

/// u + v sqrt(d) with d squarefree. Elements with v = 0 are stored with d = 1,
/// so a rational element combines with any quadratic field.
class QuadExtElem {
public:
    QuadExtElem() = default;
    QuadExtElem(const Rational& u) : u_(u) {}
    QuadExtElem(const Integer& d, const Rational& u, const Rational& v);

    static QuadExtElem sqrt(const Integer& d) { return QuadExtElem(d, 0, 1); }

    const Integer& d() const { return d_; }
    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_rational() const { return v_.is_zero(); }

    std::string to_string() const;

    friend QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y);
    friend QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y);
    friend QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y);
    QuadExtElem operator-() const;

    friend bool operator==(const QuadExtElem&, const QuadExtElem&) = default;

private:
    static Integer common_field(const QuadExtElem& x, const QuadExtElem& y);

    Integer d_ = 1;
    Rational u_;
    Rational v_;
};

using Triple = std::array<QuadExtElem, 3>;

/// A point of P^2 over Q or Q(sqrt d).
class ProjPoint {
public:
    /// Throws InputError if all coordinates vanish or they live in different fields.
    explicit ProjPoint(Triple coords);

    const Triple& coords() const { return coords_; }
    /// The common quadratic field; 1 for a rational point.
    Integer field() const;

    /// "(1:1:0)", "(sqrt(-1):1:0)".
    std::string to_string() const;

    /// Equality up to scaling.
    friend bool operator==(const ProjPoint& p, const ProjPoint& q);

private:
    Triple coords_;
};

/// Value of x1^2 - a x2^2 - b x3^2.
QuadExtElem evaluate(const Conic& c, const Triple& x);

/// (x1 y1 + a x2 y2, x1 y2 + x2 y1, x3 y3). Satisfies
/// z1^2 - a z2^2 = (x1^2 - a x2^2)(y1^2 - a y2^2) identically.
Triple phi_forward(const Rational& a, const Triple& x, const Triple& y);

/// A rational point of a split conic, the first primitive nonnegative triple
/// by ascending max-coordinate, ties by (x3, x2, x1). Throws InputError for a
/// non-split conic and SearchBoundExceeded when the height bound runs out.
ProjPoint rational_point(const Conic& c, const Bounds& bounds = {});

/// (sqrt a : 1 : 0) for a non-split conic, a rational point for a split one.
ProjPoint point_over_splitting_field(const Conic& c, const Bounds& bounds = {});

}  // namespace conicring
