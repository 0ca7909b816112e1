#pragma once

// The 2-torsion of Br(Q) as an F2 vector space: a class is its (even) set of
// ramified places, the group law is symmetric difference.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conicring/numtheory.hpp"

namespace conicring {

class BrauerClass {
public:
    /// The split class.
    BrauerClass() = default;
    /// Sorts and deduplicates; throws InputError on odd cardinality.
    explicit BrauerClass(std::vector<Place> ramified);

    /// Parses "{}", "{2,inf}", "{3, 5}" (places in any order).
    static std::optional<BrauerClass> parse(std::string_view text);

    const std::vector<Place>& ramified() const { return ramified_; }
    bool is_split() const { return ramified_.empty(); }
    bool contains(Place v) const;

    /// "{2,3}", "{2,inf}", "{}".
    std::string to_string() const;

    friend bool operator==(const BrauerClass&, const BrauerClass&) = default;
    friend std::strong_ordering operator<=>(const BrauerClass& x, const BrauerClass& y) {
        return x.ramified_ <=> y.ramified_;
    }

private:
    std::vector<Place> ramified_;
};

/// Symmetric difference of ramification sets.
BrauerClass class_add(const BrauerClass& x, const BrauerClass& y);

/// A finite subgroup of Br(Q)_2, stored as its reduced echelon basis with
/// respect to the place order: each basis class has a pivot (its smallest
/// place) absent from every other basis class, and pivots increase. The basis
/// is unique, so structural equality is subgroup equality.
class Subgroup {
public:
    /// The trivial subgroup.
    Subgroup() = default;

    const std::vector<BrauerClass>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_trivial() const { return basis_.empty(); }

    /// "0" for the trivial group, otherwise "<{2,inf},{3,inf}>".
    std::string to_string() const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    /// Total order: dimension first, then lexicographic on the bases.
    friend std::strong_ordering operator<=>(const Subgroup& x, const Subgroup& y) {
        if (auto c = x.dim() <=> y.dim(); c != 0) return c;
        return x.basis_ <=> y.basis_;
    }

private:
    friend Subgroup span(const std::vector<BrauerClass>& classes);
    explicit Subgroup(std::vector<BrauerClass> basis) : basis_(std::move(basis)) {}

    std::vector<BrauerClass> basis_;
};

Subgroup span(const std::vector<BrauerClass>& classes);
Subgroup join(const Subgroup& g1, const Subgroup& g2);
bool contains(const Subgroup& g, const BrauerClass& x);
/// True iff g1 is a subgroup of g2.
bool subgroup_leq(const Subgroup& g1, const Subgroup& g2);

/// The elementary move e[target] <- e[source] + e[target].
struct TransvectionOp {
    std::size_t source;
    std::size_t target;

    friend bool operator==(const TransvectionOp&, const TransvectionOp&) = default;
};

struct GeneratorReduction {
    std::vector<TransvectionOp> ops;
    Subgroup basis;
};

/// A transvection script turning `e` into (canonical basis of span(e), then
/// split classes). Swaps are emulated by three transvections.
GeneratorReduction reduce_generators(const std::vector<BrauerClass>& e);

/// Applies `ops` in order. Throws IndexOutOfRange on a bad index and
/// InputError when source == target.
std::vector<BrauerClass> replay(std::vector<BrauerClass> e, const std::vector<TransvectionOp>& ops);

}  // namespace conicring
