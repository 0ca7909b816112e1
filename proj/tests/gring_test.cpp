#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conicring/error.hpp"
#include "conicring/gring.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace conicring;
using testing::cls;

namespace {

Conic conic(long a, long b) { return new_conic(Rational(a), Rational(b)); }

RingElement c_of(const Subgroup& g, unsigned m = 0, long coeff = 1) {
    return RingElement(Term{g, m}, Integer(coeff));
}

const Subgroup g_inf = span({cls({"2", "inf"})});
const Subgroup g_23 = span({cls({"2", "3"})});

}  // namespace

TEST_CASE("canonical_of_product") {
    CHECK(canonical_of_product({}) == CanonicalForm{0, Subgroup{}});
    CHECK(canonical_of_product({conic(1, 1)}) == CanonicalForm{1, Subgroup{}});
    const Conic c = conic(-1, -1);
    CHECK(canonical_of_product({c, c}) == CanonicalForm{1, g_inf});
    // C x C and C x P^1 share a class.
    CHECK(canonical_of_product({c, c}) == canonical_of_product({c, conic(1, 1)}));
}

TEST_CASE("from_conic_product") {
    CHECK(from_conic_product({}) == RingElement::one());
    CHECK(from_conic_product({conic(-1, -1)}) == c_of(g_inf));
    RingElement x = from_conic_product({conic(-1, -1), conic(-1, -1), conic(-1, 3)});
    REQUIRE(x.terms().size() == 1);
    const auto& [t, coeff] = *x.terms().begin();
    CHECK(t.lefschetz_power == 1);
    CHECK(t.group.dim() == 2);
    CHECK(coeff == 1);
}

TEST_CASE("additive structure") {
    testing::Gen gen(43);
    const auto places = testing::small_places();
    RingElement x = gen.ring_element(places, 4);
    RingElement y = gen.ring_element(places, 4);
    CHECK((x + (-x)).is_zero());
    CHECK(RingElement() + y == y);
    RingElement t2 = c_of(g_inf, 1, 2);
    CHECK(t2 + c_of(g_inf, 1, -1) == c_of(g_inf, 1));
    CHECK((x - x).terms().empty());
    const RingElement sum = x + y;
    for (const auto& [term, c] : sum.terms()) CHECK(c != 0);
}

TEST_CASE("multiplication law") {
    // C(G) C(G) = C(G) [P^1]^dim G
    const Subgroup g2 = span({cls({"2", "inf"}), cls({"3", "5"})});
    CHECK(c_of(g2) * c_of(g2) == c_of(g2, 2));
    CHECK(c_of(g_inf) * c_of(g_inf) == c_of(g_inf, 1));

    // Independent dimension-one groups: exponent 1 + 1 - 2 = 0.
    RingElement prod = c_of(g_inf) * c_of(g_23);
    CHECK(prod == c_of(join(g_inf, g_23), 0));
    CHECK(join(g_inf, g_23).dim() == 2);

    // [C] is a zero divisor.
    const RingElement c = c_of(g_inf);
    const RingElement l = RingElement::lefschetz();
    CHECK((l - c) * c == RingElement());
    CHECK_FALSE((l - c).is_zero());

    CHECK(term_product(Term{g_inf, 2}, Term{g_23, 3}).lefschetz_power == 5);
}

TEST_CASE("pow") {
    testing::Gen gen(47);
    const auto places = testing::small_places();
    RingElement x = gen.ring_element(places, 3);
    CHECK(pow(x, 0) == RingElement::one());
    CHECK(pow(x, 1) == x);
    CHECK(pow(x, 3) == x * x * x);

    // ([P^1] - [C])^2 = [P^1]^2 - 2 C(G)[P^1] + C(G)[P^1] = [P^1]^2 - C(G)[P^1].
    const RingElement l = RingElement::lefschetz();
    RingElement sq = pow(l - c_of(g_inf), 2);
    CHECK(sq == c_of(Subgroup{}, 2) - c_of(g_inf, 1));
    CHECK(sq.to_string() == "C(0)[L]^2 - C({2,inf})[L]^1");

    // (gamma t)^s = gamma^s t^s
    RingElement mono = c_of(g_inf, 2, -3);
    CHECK(pow(mono, 3) == c_of(g_inf, 3 * 2 + 2 * 1, -27));
}

TEST_CASE("leading_term") {
    CHECK_THROWS_AS(leading_term(RingElement()), ZeroElement);
    LeadingTerm single = leading_term(c_of(g_inf, 4, -2));
    CHECK(single.term == Term{g_inf, 4});
    CHECK(single.coefficient == -2);

    LeadingTerm lt = leading_term(RingElement::lefschetz() - c_of(g_inf));
    CHECK(lt.term == Term{Subgroup{}, 1});
    CHECK(lt.coefficient == 1);

    // Incomparable subgroups of equal dimension: the order-minimum wins.
    REQUIRE_FALSE(subgroup_leq(g_inf, g_23));
    REQUIRE_FALSE(subgroup_leq(g_23, g_inf));
    const Subgroup smaller = g_23 < g_inf ? g_23 : g_inf;
    LeadingTerm tie = leading_term(c_of(g_inf, 0, 5) + c_of(g_23, 0, 7));
    CHECK(tie.term.group == smaller);

    // Among terms with the minimal group, the least power.
    LeadingTerm pw = leading_term(c_of(g_inf, 3) + c_of(g_inf, 1, 4) + c_of(join(g_inf, g_23), 0));
    CHECK(pw.term == Term{g_inf, 1});
    CHECK(pw.coefficient == 4);
}

TEST_CASE("power coefficient law") {
    CHECK(power_coefficient_check(c_of(g_inf, 2, 3), 5));
    CHECK(power_coefficient_check(RingElement::lefschetz() - c_of(g_inf), 2));
    CHECK(pow(RingElement::lefschetz() - c_of(g_inf), 2).coefficient(Term{Subgroup{}, 2}) == 1);

    testing::Gen gen(53);
    const auto places = testing::small_places();
    for (int i = 0; i < 40; ++i) {
        RingElement x = gen.ring_element(places, 3);
        if (x.is_zero()) continue;
        for (unsigned s : {2u, 3u, 4u}) {
            CHECK(power_coefficient_check(x, s));
            CHECK_FALSE(pow(x, s).is_zero());
        }
    }
    CHECK_THROWS_AS(power_coefficient_check(RingElement(), 2), ZeroElement);
}

TEST_CASE("ring laws") {
    testing::Gen gen(59);
    const auto places = testing::small_places();
    for (int i = 0; i < 60; ++i) {
        RingElement x = gen.ring_element(places, 3);
        RingElement y = gen.ring_element(places, 3);
        RingElement z = gen.ring_element(places, 3);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * RingElement::one() == x);
        CHECK(x + y == y + x);
    }
}

TEST_CASE("lefschetz power monotonicity") {
    testing::Gen gen(61);
    const auto places = testing::small_places();
    for (int i = 0; i < 200; ++i) {
        Term a{gen.subgroup(places, 3), static_cast<unsigned>(gen.uniform(0, 4))};
        Term b{gen.subgroup(places, 3), static_cast<unsigned>(gen.uniform(0, 4))};
        Term p = term_product(a, b);
        CHECK(p.lefschetz_power >= a.lefschetz_power + b.lefschetz_power);
        CHECK(p.group == join(a.group, b.group));
    }
}

TEST_CASE("decide_equal_products") {
    const Conic c = conic(-1, 3);
    CHECK(decide_equal_products({c}, {c}).holds);
    CHECK(decide_equal_products({c, c}, {c, conic(1, 1)}).holds);

    Decision d = decide_equal_products({conic(-1, -1)}, {conic(-1, 3)});
    CHECK_FALSE(d.holds);
    CHECK(d.reason == Decision::Reason::WitnessInFirst);
    CHECK(d.witness == cls({"2", "inf"}));

    Decision sizes = decide_equal_products({c}, {c, c});
    CHECK_FALSE(sizes.holds);
    CHECK(sizes.reason == Decision::Reason::SizeMismatch);

    Decision second = decide_equal_products({conic(1, 1)}, {conic(-1, -1)});
    CHECK(second.reason == Decision::Reason::WitnessInSecond);
    CHECK(second.witness == cls({"2", "inf"}));
}

TEST_CASE("decide_stably_birational") {
    const Conic c = conic(-1, -1);
    CHECK(decide_stably_birational({c}, {c, c, c}).holds);
    CHECK(decide_stably_birational({}, {conic(1, 1)}).holds);
    CHECK_FALSE(decide_stably_birational({conic(-1, -1)}, {conic(-1, 3)}).holds);
    CHECK(decide_stably_birational({conic(-1, -1), conic(-1, 3)}, {conic(-1, -3), conic(-1, 3)}).holds);
}

TEST_CASE("normal form soundness") {
    testing::Gen gen(67);
    std::vector<Conic> pool{conic(1, 1), conic(-1, -1), conic(-1, 3), conic(-1, -3), conic(2, 5)};
    for (int i = 0; i < 150; ++i) {
        ConicProduct a;
        ConicProduct b;
        for (long n = gen.uniform(0, 4); n > 0; --n) a.push_back(pool[static_cast<std::size_t>(gen.uniform(0, 4))]);
        for (long n = gen.uniform(0, 4); n > 0; --n) b.push_back(pool[static_cast<std::size_t>(gen.uniform(0, 4))]);
        CHECK(decide_equal_products(a, b).holds == (from_conic_product(a) == from_conic_product(b)));
    }
}

TEST_CASE("reduce_product rewrites into basis conics and split conics") {
    ConicProduct p{conic(-1, -1), conic(-1, 3), conic(-1, -3), conic(-1, -1)};
    ProductReduction r = reduce_product(p);
    CHECK(r.rewritten.size() == r.ops.size());
    CanonicalForm form = canonical_of_product(p);
    unsigned split = 0;
    std::vector<BrauerClass> remaining;
    for (const auto& c : r.final_factors) {
        if (has_rational_point(c)) ++split;
        else remaining.push_back(brauer_class(c));
    }
    CHECK(split == form.lefschetz_power);
    CHECK(remaining == form.group.basis());
}

TEST_CASE("canonical text form") {
    CHECK(RingElement().to_string() == "0");
    CHECK(RingElement::one().to_string() == "C(0)[L]^0");
    CHECK(c_of(g_inf, 1, -1).to_string() == "-C({2,inf})[L]^1");
    CHECK((c_of(Subgroup{}, 0, 3) - c_of(g_inf, 2, 2)).to_string() == "3*C(0)[L]^0 - 2*C({2,inf})[L]^2");
    CHECK(c_of(span({cls({"2", "inf"}), cls({"3", "inf"})})).to_string() == "C({2,inf},{3,inf})[L]^0");
}
