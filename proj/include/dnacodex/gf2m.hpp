#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "dnacodex/binpoly.hpp"
#include "dnacodex/cyclotomic.hpp"

namespace dnacodex {

// One canonical primitive polynomial per extension degree, so factor labels
// and BCH generators come out the same on every run.
inline constexpr std::array<uint32_t, 21> kPrimitivePoly = {
    0,
    0x3,       // x+1
    0x7,       // x^2+x+1
    0xb,       // x^3+x+1
    0x13,      // x^4+x+1
    0x25,      // x^5+x^2+1
    0x43,      // x^6+x+1
    0x89,      // x^7+x^3+1
    0x11d,     // x^8+x^4+x^3+x^2+1
    0x211,     // x^9+x^4+1
    0x409,     // x^10+x^3+1
    0x805,     // x^11+x^2+1
    0x1053,    // x^12+x^6+x^4+x+1
    0x201b,    // x^13+x^4+x^3+x+1
    0x4443,    // x^14+x^10+x^6+x+1
    0x8003,    // x^15+x+1
    0x1100b,   // x^16+x^12+x^3+x+1
    0x20009,   // x^17+x^3+1
    0x40081,   // x^18+x^7+1
    0x80027,   // x^19+x^5+x^2+x+1
    0x100009,  // x^20+x^3+1
};

constexpr unsigned kMaxTableDegree = 20;

// GF(2^m) with full log/antilog tables; elements are uint32_t in polynomial
// basis of the table modulus. Practical up to m = 20 (8 MB of tables).
class FieldContext {
public:
    explicit FieldContext(unsigned m) : m_(m) {
        if (m < 1 || m > kMaxTableDegree)
            throw DomainRefusal("field degree m must be in [1, " + std::to_string(kMaxTableDegree) +
                                "], got " + std::to_string(m));
        modulus_ = BinPoly::from_words({kPrimitivePoly[m]});
        const uint32_t size = uint32_t{1} << m;
        const uint32_t mod_low = kPrimitivePoly[m] & (size - 1);
        exp_.resize(size - 1);
        log_.assign(size, 0);
        uint32_t b = 1;
        for (uint32_t i = 0; i + 1 < size; ++i) {
            exp_[i] = b;
            log_[b] = i;
            b <<= 1;
            if (b & size) b = (b & (size - 1)) ^ mod_low;
        }
        if (b != 1) throw std::logic_error("field table did not close; modulus not primitive");
    }

    using Elem = uint32_t;

    unsigned m() const { return m_; }
    const BinPoly& modulus() const { return modulus_; }
    uint64_t group_order() const { return (uint64_t{1} << m_) - 1; }

    Elem one() const { return 1; }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        uint64_t s = uint64_t{log_[a]} + log_[b];
        if (s >= group_order()) s -= group_order();
        return exp_[s];
    }

    // alpha^e for the fixed primitive root alpha (the modulus root)
    Elem alpha_pow(uint64_t e) const { return exp_[e % group_order()]; }

    Elem pow(Elem a, uint64_t e) const {
        if (a == 0) return 0;
        return exp_[static_cast<uint64_t>((__uint128_t{log_[a]} * e) % group_order())];
    }

    uint64_t order_of(Elem a) const {
        if (a == 0) throw DomainRefusal("zero has no multiplicative order");
        uint64_t g = group_order();
        uint64_t l = log_[a];
        // order = group_order / gcd(log, group_order)
        uint64_t x = l, y = g;
        while (x) {
            uint64_t t = y % x;
            y = x;
            x = t;
        }
        return g / y;
    }

    bool in_gf2(Elem a) const { return a <= 1; }

    uint32_t antilog(uint64_t i) const { return exp_[i % group_order()]; }
    uint32_t log_of(Elem a) const { return log_[a]; }

private:
    unsigned m_;
    BinPoly modulus_;
    std::vector<uint32_t> exp_, log_;
};

inline FieldContext build_field(unsigned m) { return FieldContext(m); }

// GF(2^m) in polynomial basis without tables, for the extension degrees the
// table budget cannot reach (factoring x^n-1 needs m = ord_n(2), which gets
// as large as 210 for n <= 255). The modulus is the first irreducible of
// degree m in integer order, so results are reproducible.
class PolyField {
public:
    explicit PolyField(unsigned m) : m_(m), modulus_(find_irreducible(m)) {}

    using Elem = BinPoly;

    unsigned m() const { return m_; }
    const BinPoly& modulus() const { return modulus_; }

    Elem one() const { return BinPoly::one(); }

    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % modulus_; }

    Elem pow(Elem base, uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // base^e with e given as a bit vector (little-endian), for exponents of
    // the form (2^m - 1)/n that overflow u64
    Elem pow_bits(Elem base, const std::vector<uint64_t>& ebits) const {
        Elem r = one();
        for (size_t wi = 0; wi < ebits.size(); ++wi) {
            for (unsigned b = 0; b < 64; ++b) {
                if ((ebits[wi] >> b) & 1) r = mul(r, base);
                base = mul(base, base);
            }
        }
        return r;
    }

    bool in_gf2(const Elem& a) const { return a.is_zero() || a.is_one(); }

    // (2^m - 1)/n as a little-endian bit vector; n must divide 2^m - 1
    std::vector<uint64_t> split_exponent(unsigned n) const {
        std::vector<uint64_t> q((m_ + 63) / 64, 0);
        uint64_t rem = 0;
        for (unsigned i = m_; i-- > 0;) {
            rem = rem * 2 + 1;  // next bit of the all-ones dividend
            if (rem >= n) {
                rem -= n;
                q[i / 64] |= uint64_t{1} << (i % 64);
            }
        }
        if (rem != 0) throw std::logic_error("n does not divide 2^m-1");
        return q;
    }

    // deterministic element of multiplicative order exactly n
    Elem element_of_order(unsigned n) const {
        auto e = split_exponent(n);
        auto primes = prime_factors(n);
        for (uint64_t z = 2;; ++z) {
            Elem cand = pow_bits(BinPoly::from_words({z}), e);
            if (cand.is_one() || cand.is_zero()) continue;
            bool full = true;
            for (unsigned p : primes)
                if (pow(cand, n / p).is_one()) {
                    full = false;
                    break;
                }
            if (full) return cand;
        }
    }

    static std::vector<unsigned> prime_factors(unsigned v) {
        std::vector<unsigned> out;
        for (unsigned d = 2; static_cast<uint64_t>(d) * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(d);
                while (v % d == 0) v /= d;
            }
        if (v > 1) out.push_back(v);
        return out;
    }

    static bool is_irreducible(const BinPoly& f) {
        if (f.is_zero() || f.deg() == 0) return false;
        const unsigned m = f.deg();
        // x^(2^m) == x (mod f), and x^(2^(m/p)) - x coprime to f for p | m
        BinPoly x = BinPoly::x() % f;
        BinPoly t = x;
        std::map<unsigned, BinPoly> checkpoints;  // power index -> x^(2^i) mod f
        std::vector<unsigned> primes = prime_factors(m);
        std::vector<unsigned> want;
        for (unsigned p : primes) want.push_back(m / p);
        for (unsigned i = 1; i <= m; ++i) {
            t = (t * t) % f;
            for (unsigned wdeg : want)
                if (i == wdeg && BinPoly::gcd(t + x, f).deg() != 0) return false;
        }
        return t == x;
    }

    static BinPoly find_irreducible(unsigned m) {
        if (m == 1) return BinPoly::parse("x+1");
        for (uint64_t c = 1;; c += 2) {
            BinPoly f = BinPoly::monomial(m) + BinPoly::from_words({c});
            if (is_irreducible(f)) return f;
        }
    }

private:
    unsigned m_;
    BinPoly modulus_;
};

// prod_{i in coset} (x - root^i), expanded over the field; the result must
// collapse to GF(2) coefficients when the coset is closed under doubling
template <class Field>
BinPoly expand_minimal_poly(const Field& field, const typename Field::Elem& root,
                            const std::vector<unsigned>& coset) {
    using Elem = typename Field::Elem;
    std::vector<Elem> poly{field.one()};
    for (unsigned j : coset) {
        Elem r = field.pow(root, j);
        std::vector<Elem> next(poly.size() + 1, Elem{});
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] + field.mul(poly[i], r);
        }
        poly = std::move(next);
    }
    BinPoly out;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (!field.in_gf2(poly[i]))
            throw std::logic_error("minimal polynomial coefficient escaped GF(2); coset not Frobenius-closed?");
        if (poly[i] == field.one()) out.flip(static_cast<unsigned>(i));
    }
    return out;
}

// table-field overload needs + on uint32_t to mean XOR; wrap via lambda-free
// specialization instead
inline BinPoly expand_minimal_poly(const FieldContext& field, uint32_t root,
                                   const std::vector<unsigned>& coset) {
    std::vector<uint32_t> poly{1};
    for (unsigned j : coset) {
        uint32_t r = field.pow(root, j);
        std::vector<uint32_t> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];
            next[i] ^= field.mul(poly[i], r);
        }
        poly = std::move(next);
    }
    BinPoly out;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] > 1)
            throw std::logic_error("minimal polynomial coefficient escaped GF(2); coset not Frobenius-closed?");
        if (poly[i] == 1) out.flip(static_cast<unsigned>(i));
    }
    return out;
}

namespace detail {

inline void check_coset_closed(unsigned n, const std::vector<unsigned>& coset) {
    if (coset.empty()) throw DomainRefusal("empty cyclotomic coset");
    for (unsigned j : coset) {
        unsigned dbl = static_cast<unsigned>((2ull * j) % n);
        bool found = false;
        for (unsigned k : coset) found = found || k == dbl;
        if (!found) throw DomainRefusal("set is not closed under doubling mod n");
    }
}

}  // namespace detail

// Minimal polynomial of alpha^i over GF(2), for i in the given coset, with
// alpha = beta^((2^m-1)/n) and beta the table-modulus root. Degree equals
// the coset size and the result divides x^n - 1.
inline BinPoly minimal_polynomial(unsigned n, const std::vector<unsigned>& coset, const FieldContext& ctx) {
    require_odd(n);
    if (ctx.group_order() % n != 0)
        throw DomainRefusal("field order 2^" + std::to_string(ctx.m()) + "-1 is not a multiple of n=" +
                            std::to_string(n));
    detail::check_coset_closed(n, coset);
    uint32_t alpha = ctx.alpha_pow(ctx.group_order() / n);
    return expand_minimal_poly(ctx, alpha, coset);
}

// Factorization of x^n - 1 over GF(2) (equivalently over R, which shares the
// factorization for odd n), keyed by coset representative.
inline std::map<unsigned, BinPoly> factor_xn1(unsigned n) {
    require_odd(n);
    CosetTable t = build_cosets(n);
    std::map<unsigned, BinPoly> out;
    if (t.ord2 <= kMaxTableDegree) {
        FieldContext ctx(t.ord2);
        for (const auto& c : t.cosets) out[c.rep] = minimal_polynomial(n, c.members, ctx);
    } else {
        PolyField field(t.ord2);
        BinPoly zeta = field.element_of_order(n);
        for (const auto& c : t.cosets) out[c.rep] = expand_minimal_poly(field, zeta, c.members);
    }
    return out;
}

}  // namespace dnacodex
