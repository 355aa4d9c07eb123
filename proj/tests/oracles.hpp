#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the library: each function works from the raw definitions over plain
// integers so it can be used to check the library's own code paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Set = std::vector<u64>;

/// Copies any integer sequence into a Set for comparison.
template <class Seq>
Set widen(const Seq& s) {
    return {s.begin(), s.end()};
}

inline bool trial_division_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest k >= 1 with g^k = 1, by repeated multiplication.
inline u64 iterate_order(u64 g, u64 p) {
    u64 x = g % p, k = 1;
    while (x != 1) {
        x = x * g % p;
        ++k;
    }
    return k;
}

inline u64 extended_euclid_inverse(u64 a, u64 p) {
    long long r0 = static_cast<long long>(p), r1 = static_cast<long long>(a % p), s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1, t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    const long long m = static_cast<long long>(p);
    return static_cast<u64>(((s0 % m) + m) % m);
}

/// Unique e in [0, p-2] with base^e = x, by listing powers.
inline u64 exhaustive_log(u64 base, u64 x, u64 p) {
    u64 y = 1;
    for (u64 e = 0; e + 1 < p; ++e) {
        if (y == x % p) return e;
        y = y * base % p;
    }
    return ~u64{0};
}

inline u64 smallest_primitive_root(u64 p) {
    for (u64 g = 2; g < p; ++g)
        if (iterate_order(g, p) == p - 1) return g;
    return 0;
}

/// Powers of g.
inline Set subgroup(u64 g, u64 p) {
    Set s;
    u64 x = 1;
    do {
        s.push_back(x);
        x = x * g % p;
    } while (x != 1);
    std::sort(s.begin(), s.end());
    return s;
}

inline Set orbit(const Set& group, u64 a, u64 p) {
    std::set<u64> s;
    for (u64 e : group) s.insert(e * a % p);
    return {s.begin(), s.end()};
}

inline Set shifted(const Set& s, u64 by, u64 p) {
    Set out;
    for (u64 x : s) out.push_back((x + by) % p);
    std::sort(out.begin(), out.end());
    return out;
}

/// Every block Phi(a)+b with a != 0, all radii (not just representatives),
/// deduplicated.
inline std::vector<Set> all_blocks(const Set& group, u64 p) {
    std::set<Set> blocks;
    for (u64 a = 1; a < p; ++a)
        for (u64 b = 0; b < p; ++b) blocks.insert(shifted(orbit(group, a, p), b, p));
    return {blocks.begin(), blocks.end()};
}

/// Circularity straight from the definition: count blocks through each triple
/// and each pair.
inline bool circular_by_enumeration(const Set& group, u64 p) {
    const auto blocks = all_blocks(group, p);
    std::map<std::vector<u64>, int> triples, pairs;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                ++pairs[{b[i], b[j]}];
                for (std::size_t l = j + 1; l < b.size(); ++l)
                    if (++triples[{b[i], b[j], b[l]}] > 1) return false;
            }
    }
    for (u64 x = 0; x < p; ++x)
        for (u64 y = x + 1; y < p; ++y)
            if (pairs[{x, y}] < 2) return false;
    return true;
}

inline std::size_t intersection_size(const Set& a, const Set& b) {
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.size();
}

/// The disk from its definition: union of all circles Phi(r)+c (every r != 0,
/// every c) through b that meet Phi(a)+b in exactly one point.
inline Set disk_by_definition(const Set& group, u64 a, u64 b, u64 p) {
    const Set boundary = shifted(orbit(group, a, p), b, p);
    std::set<u64> pts;
    for (u64 r = 1; r < p; ++r) {
        const Set o = orbit(group, r, p);
        for (u64 c = 0; c < p; ++c) {
            const Set circ = shifted(o, c, p);
            if (!std::binary_search(circ.begin(), circ.end(), b % p)) continue;
            if (intersection_size(circ, boundary) == 1) pts.insert(circ.begin(), circ.end());
        }
    }
    return {pts.begin(), pts.end()};
}

/// Blocks containing both x and y, by scanning every block.
inline std::size_t pair_count_by_scan(const std::vector<Set>& blocks, u64 x, u64 y) {
    std::size_t n = 0;
    for (const auto& b : blocks)
        n += std::binary_search(b.begin(), b.end(), x) && std::binary_search(b.begin(), b.end(), y);
    return n;
}

}  // namespace oracle
