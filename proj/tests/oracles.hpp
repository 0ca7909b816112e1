#pragma once

// Independent brute-force oracles. Nothing here calls into the code paths it
// is used to check.

#include <cstdint>
#include <set>
#include <vector>

#include "conicring/brauer.hpp"

namespace conicring::oracle {

/// +1/-1/0 by listing the nonzero squares mod p.
inline int legendre_by_squares(long a, long p) {
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    for (long x = 1; x < p; ++x)
        if ((x * x) % p == r) return 1;
    return -1;
}

/// Whether x^2 - a y^2 - b z^2 = 0 has a nontrivial solution over the
/// completion at p (p = 0 means the real place). For a finite p this searches
/// for a primitive solution (not all coordinates divisible by p) modulo p^3,
/// or 2^6 at p = 2.
inline bool locally_solvable(long a, long b, long p) {
    if (p == 0) return !(a < 0 && b < 0);
    const long m = p == 2 ? 64 : p * p * p;
    std::vector<char> square(static_cast<std::size_t>(m), 0);
    std::vector<char> unit_square(static_cast<std::size_t>(m), 0);
    for (long x = 0; x < m; ++x) {
        long r = (x * x) % m;
        square[static_cast<std::size_t>(r)] = 1;
        if (x % p != 0) unit_square[static_cast<std::size_t>(r)] = 1;
    }
    auto mod = [m](long v) { return ((v % m) + m) % m; };
    for (long y = 0; y < m; ++y) {
        for (long z = 0; z < m; ++z) {
            long r = mod(mod(a) * ((y * y) % m) + mod(b) * ((z * z) % m));
            bool yz_primitive = y % p != 0 || z % p != 0;
            if (yz_primitive ? square[static_cast<std::size_t>(r)] : unit_square[static_cast<std::size_t>(r)])
                return true;
        }
    }
    return false;
}

inline int hilbert_by_search(long a, long b, long p) { return locally_solvable(a, b, p) ? 1 : -1; }

/// Every F2 combination of `classes`, by enumerating subsets.
inline std::set<BrauerClass> all_sums(const std::vector<BrauerClass>& classes) {
    std::set<BrauerClass> out;
    const std::size_t n = classes.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        BrauerClass acc;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) acc = class_add(acc, classes[i]);
        out.insert(acc);
    }
    return out;
}

/// F2 dimension of the span: log2 of the number of distinct sums.
inline std::size_t rank_by_enumeration(const std::vector<BrauerClass>& classes) {
    std::size_t size = all_sums(classes).size();
    std::size_t dim = 0;
    while ((std::size_t{1} << dim) < size) ++dim;
    return dim;
}

}  // namespace conicring::oracle
