#pragma once

// Deterministic random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "conicring/brauer.hpp"
#include "conicring/conic.hpp"
#include "conicring/gring.hpp"

namespace conicring::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    long nonzero(long height) {
        long v = uniform(1, height);
        return coin() ? v : -v;
    }

    /// Nonzero rational with numerator and denominator of absolute value <= height.
    Rational rational(long height) { return Rational(Integer(nonzero(height)), Integer(uniform(1, height))); }

    /// Possibly zero rational.
    Rational any_rational(long height) { return Rational(Integer(uniform(-height, height)), Integer(uniform(1, height))); }

    Conic conic(long height) { return new_conic(rational(height), rational(height)); }

    Conic nonsplit_conic(long height) {
        while (true) {
            Conic c = conic(height);
            if (!has_rational_point(c)) return c;
        }
    }

    /// Random even subset of `places`.
    BrauerClass brauer_class(const std::vector<Place>& places) {
        std::vector<Place> chosen;
        for (Place v : places)
            if (coin()) chosen.push_back(v);
        if (chosen.size() % 2 == 1) chosen.pop_back();
        return BrauerClass(std::move(chosen));
    }

    Subgroup subgroup(const std::vector<Place>& places, int max_generators) {
        std::vector<BrauerClass> gens;
        int n = static_cast<int>(uniform(0, max_generators));
        for (int i = 0; i < n; ++i) gens.push_back(brauer_class(places));
        return span(gens);
    }

    /// Up to `max_terms` terms with coefficients in [-3,3] \ {0}.
    RingElement ring_element(const std::vector<Place>& places, int max_terms, unsigned max_power = 3) {
        RingElement x;
        int n = static_cast<int>(uniform(1, max_terms));
        for (int i = 0; i < n; ++i) {
            Term t{subgroup(places, 3), static_cast<unsigned>(uniform(0, max_power))};
            x += RingElement(t, Integer(nonzero(3)));
        }
        return x;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::vector<Place> small_places() {
    return {Place::finite(2), Place::finite(3), Place::finite(5), Place::finite(7), Place::finite(11), Place::real()};
}

inline BrauerClass cls(std::initializer_list<const char*> names) {
    std::vector<Place> places;
    for (const char* n : names) places.push_back(*Place::parse(n));
    return BrauerClass(std::move(places));
}

}  // namespace conicring::testing
