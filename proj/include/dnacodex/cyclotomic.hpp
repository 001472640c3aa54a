#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnacodex/errors.hpp"

namespace dnacodex {

inline void require_odd(unsigned n) {
    if (n == 0 || n % 2 == 0) throw DomainRefusal("length must be odd and positive, got " + std::to_string(n));
}

// multiplicative order of 2 modulo odd n (order 1 for n = 1)
inline unsigned ord2(unsigned n) {
    require_odd(n);
    if (n == 1) return 1;
    unsigned m = 1;
    uint64_t v = 2 % n;
    while (v != 1) {
        v = (v * 2) % n;
        ++m;
    }
    return m;
}

struct Coset {
    unsigned rep;                    // minimum element
    std::vector<unsigned> members;   // sorted
    bool reversible;                 // -i mod n lands in the same coset
};

// 2-cyclotomic cosets modulo n: orbits of i -> 2i mod n
struct CosetTable {
    unsigned n = 0;
    unsigned ord2 = 0;
    std::vector<Coset> cosets;  // ordered by representative

    const Coset* find(unsigned i) const {
        for (const auto& c : cosets)
            for (unsigned m : c.members)
                if (m == i % n) return &c;
        return nullptr;
    }
};

inline CosetTable build_cosets(unsigned n) {
    require_odd(n);
    CosetTable t;
    t.n = n;
    t.ord2 = ord2(n);
    std::vector<char> seen(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (seen[i]) continue;
        Coset c;
        c.rep = i;
        unsigned j = i;
        do {
            seen[j] = 1;
            c.members.push_back(j);
            j = static_cast<unsigned>((2ull * j) % n);
        } while (j != i);
        std::sort(c.members.begin(), c.members.end());
        unsigned neg = (n - i % n) % n;
        c.reversible = std::binary_search(c.members.begin(), c.members.end(), neg);
        t.cosets.push_back(std::move(c));
    }
    return t;
}

// smallest i >= 1 with 2^i = -1 (mod n), if any exists below ord_n(2)
inline std::optional<unsigned> has_power_minus_one(unsigned n) {
    require_odd(n);
    if (n < 3) return std::nullopt;
    uint64_t v = 2 % n;
    unsigned limit = ord2(n);
    for (unsigned i = 1; i <= limit; ++i) {
        if (v == n - 1) return i;
        v = (v * 2) % n;
    }
    return std::nullopt;
}

// first nonzero reversible coset in representative order, if one exists
inline std::optional<Coset> find_reversible_coset(unsigned n) {
    require_odd(n);
    for (const auto& c : build_cosets(n).cosets)
        if (c.rep != 0 && c.reversible) return c;
    return std::nullopt;
}

}  // namespace dnacodex
