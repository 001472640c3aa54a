#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnacodex/bch.hpp"
#include "dnacodex/cyclic_code.hpp"
#include "dnacodex/gf2m.hpp"

namespace dnacodex {

enum class FamilyTag { simplex, zetterberg, reed_muller };

inline const char* family_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::simplex: return "simplex";
        case FamilyTag::zetterberg: return "zetterberg";
        default: return "reed_muller";
    }
}

struct FamilyCode {
    FamilyTag family;
    unsigned m = 0;
    CyclicCodeR code;

    // predictions carried by the construction, for reports and tests
    unsigned predicted_log2_size = 0;
    std::optional<unsigned> predicted_gc_weight;  // shared GC weight of nonzero-residue codewords
    bool rc_by_predicate = false;                 // generic reversible-complement test outcome

    // Reed-Muller extra: the full RM*(2,m) generator whose self-reciprocal
    // part generates the code
    std::optional<BinPoly> rm_generator;
    std::optional<unsigned> rm_dimension;
};

// Free cyclic code over R generated by h*(x), h = (x^n-1)/M_1, n = 2^m-1:
// the torsion code is a one-weight [2^m-1, m, 2^(m-1)] simplex code, so all
// codewords outside the residue-zero subcode share GC weight 2^(m-1).
inline FamilyCode simplex_dna(unsigned m, unsigned /*budget*/ = kDefaultBudget) {
    if (m < 2 || m > 12) throw DomainRefusal("simplex family supports 2 <= m <= 12, got " + std::to_string(m));
    const unsigned n = (1u << m) - 1;
    auto factors = factor_xn1(n);
    const BinPoly& m1 = factors.at(1);
    BinPoly h = BinPoly::xn_minus_one(n) / m1;
    BinPoly hstar = h.reciprocal();
    CyclicCodeR code(n, hstar, hstar);
    FamilyCode fc{FamilyTag::simplex, m, code, 2 * m, (1u << (m - 1)), code.is_reverse_complement(),
                  std::nullopt, std::nullopt};
    return fc;
}

struct ZetterbergC0Report {
    unsigned m = 0, n = 0;
    unsigned c0_dimension = 0;           // expected 2m+1
    WeightEnumerator c0_enumerator;      // of C_0 = <(x^n-1)/((x-1)M_1)>
    WeightEnumerator cz_dual_enumerator; // of C_z-dual = <(x^n-1)/M_1>
    unsigned dz_dual = 0;                // min distance of the dual Zetterberg code
    bool weights_symmetric = false;      // C_0: count(w) == count(n-w)
    bool dual_weights_even = false;
    bool dual_counts_divisible = false;  // nonzero counts of C_z-dual divisible by n
    bool distance_bound_holds = false;   // dz_dual > (2^m+1)/2 - sqrt(2^m)
};

namespace detail {

inline BinPoly zetterberg_f1(unsigned m) {
    const unsigned n = (1u << m) + 1;
    auto factors = factor_xn1(n);
    const BinPoly& m1 = factors.at(1);
    if (m1.deg() != 2 * m) throw std::logic_error("Cl(1) mod 2^m+1 should have size 2m");
    return BinPoly::xn_minus_one(n) / (BinPoly::parse("x+1") * m1);
}

}  // namespace detail

// Free cyclic code over R generated by f1 = (x^n-1)/((x-1)M_1), n = 2^m+1.
// Cl(1) is reversible (2^m = -1 mod n), so f1 is self-reciprocal and the
// code is reversible-complement; cardinality 2^(2(2m+1)).
inline FamilyCode zetterberg_dna(unsigned m, unsigned /*budget*/ = kDefaultBudget) {
    if (m < 3 || m > 10)
        throw DomainRefusal("zetterberg family supports 3 <= m <= 10 (m = 2 degenerates to f1 = 1), got " +
                            std::to_string(m));
    const unsigned n = (1u << m) + 1;
    BinPoly f1 = detail::zetterberg_f1(m);
    CyclicCodeR code(n, f1, f1);
    FamilyCode fc{FamilyTag::zetterberg, m, code, 2 * (2 * m + 1), std::nullopt,
                  code.is_reverse_complement(), std::nullopt, std::nullopt};
    return fc;
}

inline ZetterbergC0Report zetterberg_c0_params(unsigned m, unsigned budget = kDefaultBudget,
                                               unsigned threads = 0) {
    if (m < 3 || m > 10) throw DomainRefusal("zetterberg family supports 3 <= m <= 10");
    const unsigned n = (1u << m) + 1;
    auto factors = factor_xn1(n);
    const BinPoly& m1 = factors.at(1);
    BinPoly czd_gen = BinPoly::xn_minus_one(n) / m1;  // h* = h since M_1 self-reciprocal
    BinPoly c0_gen = detail::zetterberg_f1(m);

    ZetterbergC0Report rep;
    rep.m = m;
    rep.n = n;
    BinaryCyclicCode c0{n, c0_gen}, czd{n, czd_gen};
    rep.c0_dimension = c0.dim();
    rep.c0_enumerator = c0.weight_enumerator(budget, threads);
    rep.cz_dual_enumerator = czd.weight_enumerator(budget, threads);

    rep.weights_symmetric = true;
    for (auto& [w, cnt] : rep.c0_enumerator.counts) {
        auto it = rep.c0_enumerator.counts.find(n - w);
        if (it == rep.c0_enumerator.counts.end() || it->second != cnt) rep.weights_symmetric = false;
    }
    rep.dual_weights_even = true;
    rep.dual_counts_divisible = true;
    rep.dz_dual = 0;
    for (auto& [w, cnt] : rep.cz_dual_enumerator.counts) {
        if (w == 0) continue;
        if (rep.dz_dual == 0) rep.dz_dual = w;
        if (w % 2) rep.dual_weights_even = false;
        if (cnt % n) rep.dual_counts_divisible = false;
    }
    rep.distance_bound_holds =
        static_cast<double>(rep.dz_dual) > n / 2.0 - std::sqrt(static_cast<double>(n - 1));
    return rep;
}

// binary weight of an integer (the 2-adic digit sum)
inline unsigned base2_digit_sum(unsigned s) { return static_cast<unsigned>(std::popcount(s)); }

// Generator of the punctured second-order Reed-Muller code RM*(2,m):
// product of the minimal polynomials M_s over cosets with 1 <= w2(s) <= m-3.
// The resulting cyclic code has dimension 1 + m + m(m-1)/2.
inline BinPoly rm_star_generator(unsigned m) {
    if (m < 4) throw DomainRefusal("RM*(2,m) generator needs m >= 4, got " + std::to_string(m));
    if (m > 16) throw DomainRefusal("RM* family capped at m <= 16");
    const unsigned n = (1u << m) - 1;
    auto factors = factor_xn1(n);
    CosetTable t = build_cosets(n);
    BinPoly g = BinPoly::one();
    for (const auto& c : t.cosets) {
        unsigned w = base2_digit_sum(c.rep);
        if (w >= 1 && w <= m - 3) g = g * factors.at(c.rep);
    }
    return g;
}

struct RmDecomposition {
    BinPoly g;   // RM*(2,m) generator
    BinPoly g1;  // product of non-self-reciprocal minimal factors of g
    BinPoly g2;  // product of self-reciprocal minimal factors of g
    std::vector<unsigned> g2_cosets;
};

inline RmDecomposition rm_decompose(unsigned m) {
    const unsigned n = (1u << m) - 1;
    auto factors = factor_xn1(n);
    CosetTable t = build_cosets(n);
    RmDecomposition d{BinPoly::one(), BinPoly::one(), BinPoly::one(), {}};
    for (const auto& c : t.cosets) {
        unsigned w = base2_digit_sum(c.rep);
        if (w < 1 || w > m - 3) continue;
        const BinPoly& f = factors.at(c.rep);
        d.g = d.g * f;
        if (f.is_self_reciprocal()) {
            d.g2 = d.g2 * f;
            d.g2_cosets.push_back(c.rep);
        } else {
            d.g1 = d.g1 * f;
        }
    }
    return d;
}

// Free cyclic code over R generated by g2, the self-reciprocal part of the
// RM*(2,m) generator. Needs m even (so reversible cosets exist) and a
// nontrivial g2; m = 4 has none, matching the family's stated limits.
inline FamilyCode rm_dna(unsigned m, unsigned /*budget*/ = kDefaultBudget) {
    if (m % 2 != 0)
        throw DomainRefusal("rm family needs even m: for odd m the order of 2 mod 2^m-1 is odd and no "
                            "reversible coset is guaranteed");
    if (m < 6)
        throw DomainRefusal("rm family needs m >= 6: at m = 4 no self-reciprocal minimal polynomial divides "
                            "the RM*(2,4) generator, so the construction does not apply");
    if (m > 16) throw DomainRefusal("RM* family capped at m <= 16");
    const unsigned n = (1u << m) - 1;
    RmDecomposition d = rm_decompose(m);
    if (d.g2.is_one()) throw DomainRefusal("no self-reciprocal factor divides the RM*(2,m) generator");
    CyclicCodeR code(n, d.g2, d.g2);
    FamilyCode fc{FamilyTag::reed_muller, m, code, 2 * (n - d.g2.deg()), std::nullopt,
                  code.is_reverse_complement(), d.g, n - d.g.deg()};
    return fc;
}

}  // namespace dnacodex
