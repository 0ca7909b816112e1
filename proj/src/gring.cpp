#include "conicring/gring.hpp"

#include <algorithm>
#include <stdexcept>

#include "conicring/error.hpp"

namespace conicring {

namespace {

std::vector<BrauerClass> classes_of(const ConicProduct& product, const Bounds& bounds) {
    std::vector<BrauerClass> out;
    out.reserve(product.size());
    for (const auto& c : product) out.push_back(brauer_class(c, bounds));
    return out;
}

std::optional<BrauerClass> first_missing(const Subgroup& from, const Subgroup& in) {
    for (const auto& b : from.basis())
        if (!contains(in, b)) return b;
    return std::nullopt;
}

/// Compares spans; fills the witness and reason when they differ.
bool compare_spans(const Subgroup& g1, const Subgroup& g2, Decision& out) {
    if (g1 == g2) return true;
    if (auto w = first_missing(g1, g2)) {
        out.reason = Decision::Reason::WitnessInFirst;
        out.witness = *w;
    } else {
        out.reason = Decision::Reason::WitnessInSecond;
        out.witness = first_missing(g2, g1);
    }
    return false;
}

}  // namespace

std::string Term::to_string() const {
    std::string s = "C(";
    if (group.is_trivial()) {
        s += "0";
    } else {
        for (std::size_t i = 0; i < group.dim(); ++i) {
            if (i) s += ',';
            s += group.basis()[i].to_string();
        }
    }
    return s + ")[L]^" + std::to_string(lefschetz_power);
}

Term term_product(const Term& x, const Term& y) {
    Subgroup joined = join(x.group, y.group);
    auto extra = static_cast<unsigned>(x.group.dim() + y.group.dim() - joined.dim());
    return Term{std::move(joined), x.lefschetz_power + y.lefschetz_power + extra};
}

RingElement::RingElement(const Term& t, const Integer& coefficient) { accumulate(t, coefficient); }

Integer RingElement::coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Integer(0) : it->second;
}

void RingElement::accumulate(const Term& t, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

RingElement& RingElement::operator+=(const RingElement& y) {
    for (const auto& [t, c] : y.terms_) accumulate(t, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& y) {
    for (const auto& [t, c] : y.terms_) accumulate(t, Integer(-c));
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
    RingElement r;
    for (const auto& [tx, cx] : x.terms_)
        for (const auto& [ty, cy] : y.terms_) r.accumulate(term_product(tx, ty), Integer(cx * cy));
    return r;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        Integer magnitude = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1) s += magnitude.get_str() + "*";
        s += t.to_string();
        first = false;
    }
    return s;
}

RingElement pow(const RingElement& x, unsigned s) {
    RingElement result = RingElement::one();
    RingElement base = x;
    while (s > 0) {
        if (s & 1u) result = result * base;
        s >>= 1;
        if (s > 0) base = base * base;
    }
    return result;
}

LeadingTerm leading_term(const RingElement& x) {
    if (x.is_zero()) throw ZeroElement("leading term of the zero element");

    std::vector<const Subgroup*> groups;
    for (const auto& [t, c] : x.terms()) {
        if (groups.empty() || *groups.back() != t.group) groups.push_back(&t.group);
    }
    const Subgroup* best = nullptr;
    for (const Subgroup* g : groups) {
        bool minimal = std::none_of(groups.begin(), groups.end(), [&](const Subgroup* h) {
            return *h != *g && subgroup_leq(*h, *g);
        });
        if (minimal && (best == nullptr || *g < *best)) best = g;
    }

    // Terms are ordered by (group, power): the first hit has the least power.
    for (const auto& [t, c] : x.terms())
        if (t.group == *best) return {t, c};
    throw std::logic_error("leading_term: minimal subgroup vanished");
}

bool power_coefficient_check(const RingElement& x, unsigned s) {
    if (s == 0) throw std::invalid_argument("power_coefficient_check: s must be positive");
    LeadingTerm lead = leading_term(x);
    const auto dim = static_cast<unsigned>(lead.term.group.dim());
    Term target{lead.term.group, s * lead.term.lefschetz_power + (s - 1) * dim};
    Integer expected;
    mpz_pow_ui(expected.get_mpz_t(), lead.coefficient.get_mpz_t(), s);
    return pow(x, s).coefficient(target) == expected;
}

CanonicalForm canonical_of_product(const ConicProduct& product, const Bounds& bounds) {
    Subgroup g = span(classes_of(product, bounds));
    auto m = static_cast<unsigned>(product.size() - g.dim());
    return {m, std::move(g)};
}

RingElement from_conic_product(const ConicProduct& product, const Bounds& bounds) {
    CanonicalForm form = canonical_of_product(product, bounds);
    return RingElement(Term{std::move(form.group), form.lefschetz_power});
}

ProductReduction reduce_product(const ConicProduct& product, const Bounds& bounds) {
    ProductReduction out;
    out.classes = classes_of(product, bounds);
    GeneratorReduction reduction = reduce_generators(out.classes);
    out.ops = std::move(reduction.ops);
    out.basis = std::move(reduction.basis);

    out.final_factors = product;
    out.rewritten.reserve(out.ops.size());
    for (const auto& op : out.ops) {
        auto& target = out.final_factors[op.target];
        target = brauer_product(out.final_factors[op.source], target, bounds);
        out.rewritten.push_back(target);
    }
    return out;
}

Decision decide_equal_products(const ConicProduct& first, const ConicProduct& second, const Bounds& bounds) {
    Decision d;
    d.first_size = first.size();
    d.second_size = second.size();
    Subgroup g1 = span(classes_of(first, bounds));
    Subgroup g2 = span(classes_of(second, bounds));
    if (first.size() != second.size()) {
        d.reason = Decision::Reason::SizeMismatch;
        return d;
    }
    d.holds = compare_spans(g1, g2, d);
    return d;
}

Decision decide_stably_birational(const ConicProduct& first, const ConicProduct& second,
                                  const Bounds& bounds) {
    Decision d;
    d.first_size = first.size();
    d.second_size = second.size();
    d.holds = compare_spans(span(classes_of(first, bounds)), span(classes_of(second, bounds)), d);
    return d;
}

}  // namespace conicring
