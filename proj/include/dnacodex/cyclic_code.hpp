#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dnacodex/binpoly.hpp"
#include "dnacodex/cyclotomic.hpp"
#include "dnacodex/ring_word.hpp"
#include "dnacodex/span_enum.hpp"

namespace dnacodex {

constexpr unsigned kDefaultBudget = 24;  // log2 of the largest code enumerated by default

enum class Metric { hamming, lee, euclidean };

enum class WeightMetric { hamming, lee, euclidean, gc };

struct WeightEnumerator {
    WeightMetric metric = WeightMetric::hamming;
    bool complete = true;  // false would mark an enumerated subset; unused so far
    std::map<unsigned, uint64_t> counts;

    uint64_t total() const {
        uint64_t t = 0;
        for (auto& [w, c] : counts) t += c;
        return t;
    }
};

// all-ones polynomial 1 + x + ... + x^(n-1) = (x^n - 1)/(x - 1)
inline BinPoly all_ones_poly(unsigned n) {
    std::vector<uint64_t> w((n + 63) / 64, ~uint64_t{0});
    if (n % 64) w.back() = (uint64_t{1} << (n % 64)) - 1;
    return BinPoly::from_words(std::move(w));
}

// Binary cyclic code of length n with generator g | x^n - 1. The degenerate
// zero code is represented by g = x^n - 1.
struct BinaryCyclicCode {
    unsigned n = 0;
    BinPoly gen;

    unsigned dim() const { return n - gen.deg(); }
    bool is_zero_code() const { return dim() == 0; }

    detail::SpanRows rows() const {
        detail::SpanRows r;
        r.words = (n + 63) / 64;
        for (unsigned i = 0; i < dim(); ++i) r.push_row(gen.shifted(i), BinPoly{}, false);
        return r;
    }

    void require_budget(unsigned budget) const {
        if (dim() > budget)
            throw BudgetExceeded("binary code dimension " + std::to_string(dim()) +
                                 " exceeds enumeration budget 2^" + std::to_string(budget));
    }

    WeightEnumerator weight_enumerator(unsigned budget = kDefaultBudget, unsigned threads = 0) const {
        require_budget(budget);
        WeightEnumerator we;
        we.counts = detail::span_weight_histogram(rows(), threads);
        return we;
    }

    // nullopt for the zero code
    std::optional<unsigned> min_distance(unsigned budget = kDefaultBudget, unsigned threads = 0) const {
        if (is_zero_code()) return std::nullopt;
        require_budget(budget);
        return detail::span_min_weight(rows(), threads);
    }
};

struct DistanceResult {
    std::optional<unsigned> value;            // set when computed exactly
    unsigned lower = 1, upper = 0;            // certified interval when value is absent
    std::string method;                       // "torsion-enumeration" | "full-enumeration" | "interval-bounds"
    bool degenerate = false;                  // zero code: no nonzero codeword exists

    unsigned lower_bound() const { return value ? *value : lower; }
    unsigned upper_bound() const { return value ? *value : upper; }
};

// Cyclic code <f0 | u f1> over R = F2 + uF2 of odd length n, with
// f1 | f0 | x^n - 1 over GF(2). As a set it is the plane product
// { a + u b : a in <f0>, b in <f1> }, which is what the enumeration and
// membership routines work with.
class CyclicCodeR {
public:
    CyclicCodeR(unsigned n, BinPoly f0, BinPoly f1) : n_(n), f0_(std::move(f0)), f1_(std::move(f1)) {
        require_odd(n);
        if (f0_.is_zero() || f1_.is_zero()) throw DomainRefusal("generators must be nonzero");
        BinPoly xn1 = BinPoly::xn_minus_one(n);
        if (!f1_.divides(f0_) || !f0_.divides(xn1))
            throw DomainRefusal("divisor chain violated: need f1 | f0 | x^n-1");
    }

    unsigned n() const { return n_; }
    const BinPoly& f0() const { return f0_; }
    const BinPoly& f1() const { return f1_; }
    unsigned deg_f0() const { return f0_.deg(); }
    unsigned deg_f1() const { return f1_.deg(); }

    unsigned log2_size() const { return 2 * n_ - deg_f0() - deg_f1(); }
    unsigned rank() const { return n_ - deg_f1(); }
    bool is_free() const { return f0_ == f1_; }
    bool is_zero_code() const { return log2_size() == 0; }
    bool is_full_space() const { return f0_.is_one() && f1_.is_one(); }

    BinaryCyclicCode residue_code() const { return {n_, f0_}; }
    BinaryCyclicCode torsion_code() const { return {n_, f1_}; }

    bool contains(const RingWord& w) const {
        if (w.size() != n_)
            throw DomainRefusal("word length " + std::to_string(w.size()) + " does not match code length " +
                                std::to_string(n_));
        return f0_.divides(w.a_poly()) && f1_.divides(w.b_poly());
    }

    // reversible <=> f0 and f1 self-reciprocal
    bool is_reversible() const { return f0_.is_self_reciprocal() && f1_.is_self_reciprocal(); }

    // reversible-complement <=> reversible and u*I(x) in C, where membership
    // of u*I reduces to f1 | (x^n-1)/(x-1)
    bool contains_u_all_ones() const { return f1_.divides(all_ones_poly(n_)); }
    bool is_reverse_complement() const { return is_reversible() && contains_u_all_ones(); }

    // Enumeration basis: codewords are p*f0 + u*(q*f0 + r*f1) with p, q of
    // degree < n-deg f0 and r of degree < deg f0 - deg f1; the map from
    // (p, q, r) to codewords is a bijection.
    detail::SpanRows rows() const {
        detail::SpanRows rows;
        rows.words = (n_ + 63) / 64;
        const unsigned k0 = n_ - deg_f0();
        const unsigned k2 = deg_f0() - deg_f1();
        for (unsigned i = 0; i < k0; ++i) rows.push_row(f0_.shifted(i), BinPoly{}, true);
        for (unsigned i = 0; i < k0; ++i) rows.push_row(BinPoly{}, f0_.shifted(i), true);
        for (unsigned i = 0; i < k2; ++i) rows.push_row(BinPoly{}, f1_.shifted(i), true);
        return rows;
    }

    void require_budget(unsigned budget) const {
        if (log2_size() > budget)
            throw BudgetExceeded("code size 2^" + std::to_string(log2_size()) +
                                 " exceeds enumeration budget 2^" + std::to_string(budget));
    }

    // single-threaded streaming enumeration in a fixed order
    class Stream {
    public:
        explicit Stream(const CyclicCodeR& c, unsigned budget = kDefaultBudget)
            : rows_(c.rows()), n_(c.n()), total_(uint64_t{1} << c.log2_size()) {
            c.require_budget(budget);
            a_.assign(rows_.words, 0);
            b_.assign(rows_.words, 0);
        }

        bool next(RingWord& out) {
            if (i_ == total_) return false;
            if (i_ > 0) {
                unsigned r = static_cast<unsigned>(std::countr_zero(i_));
                for (unsigned w = 0; w < rows_.words; ++w) {
                    a_[w] ^= rows_.ra[r * rows_.words + w];
                    b_[w] ^= rows_.rb[r * rows_.words + w];
                }
            }
            out = RingWord(n_, BinPoly::from_words(a_), BinPoly::from_words(b_));
            ++i_;
            return true;
        }

        uint64_t total() const { return total_; }

    private:
        detail::SpanRows rows_;
        unsigned n_;
        uint64_t total_, i_ = 0;
        std::vector<uint64_t> a_, b_;
    };

    Stream enumerate(unsigned budget = kDefaultBudget) const { return Stream(*this, budget); }

    std::vector<RingWord> enumerate_all(unsigned budget = kDefaultBudget) const {
        Stream s(*this, budget);
        std::vector<RingWord> out;
        out.reserve(s.total());
        RingWord w;
        while (s.next(w)) out.push_back(w);
        return out;
    }

    DistanceResult min_distance(Metric metric, unsigned budget = kDefaultBudget, unsigned threads = 0) const;

    // GC-content profile: the Hamming weight enumerator of the binary torsion
    // code <f1>, which lists the GC weights realized across residue cosets
    // (exactly the code's GC-weight set when the code is free)
    WeightEnumerator gc_weight_enumerator(unsigned budget = kDefaultBudget, unsigned threads = 0) const {
        BinaryCyclicCode tor = torsion_code();
        tor.require_budget(budget);
        WeightEnumerator we = tor.weight_enumerator(budget, threads);
        we.metric = WeightMetric::gc;
        return we;
    }

private:
    unsigned n_;
    BinPoly f0_, f1_;
};

inline CyclicCodeR make_code(unsigned n, const BinPoly& f0, const BinPoly& f1) {
    return CyclicCodeR(n, f0, f1);
}

inline DistanceResult CyclicCodeR::min_distance(Metric metric, unsigned budget, unsigned threads) const {
    DistanceResult res;
    if (is_zero_code()) {
        res.degenerate = true;
        res.method = "degenerate";
        return res;
    }
    BinaryCyclicCode tor = torsion_code();
    if (metric == Metric::hamming) {
        // d_H(C) = d_H(<f1>): search the torsion code, whose dimension is
        // much smaller than log2|C|
        if (tor.dim() <= budget) {
            res.value = *tor.min_distance(budget, threads);
            res.method = "torsion-enumeration";
            return res;
        }
        res.lower = 1;
        res.upper = deg_f1() + 1;  // Singleton bound on the torsion code
        res.method = "interval-bounds";
        return res;
    }
    if (log2_size() <= budget) {
        detail::MinWeights mw = detail::span_min_weights_r(rows(), threads);
        res.value = metric == Metric::lee ? mw.lee : mw.euclidean;
        res.method = "full-enumeration";
        return res;
    }
    // certified interval from d_H and the weight inequalities
    unsigned dh_lo = 1, dh_ub = deg_f1() + 1;
    if (tor.dim() <= budget) dh_lo = dh_ub = *tor.min_distance(budget, threads);
    res.lower = dh_lo;  // every metric dominates Hamming weight
    if (metric == Metric::lee) {
        unsigned res_ub = deg_f0() + 1;  // Singleton bound on the residue code
        BinaryCyclicCode rescode = residue_code();
        if (!rescode.is_zero_code() && rescode.dim() <= budget)
            res_ub = *rescode.min_distance(budget, threads);
        res.upper = std::min({res_ub, 2 * dh_ub});
    } else {
        res.upper = 4 * dh_ub;
    }
    res.method = "interval-bounds";
    if (res.lower == res.upper) {
        res.value = res.lower;
        res.method = "interval-bounds-tight";
    }
    return res;
}

// ---------------------------------------------------------------------------
// brute-force verification (the definitional oracle)

struct ClosureReport {
    bool rc_closed = false;        // forall x in C: x^rc in C
    bool rev_closed = false;       // forall x in C: x^r in C
    std::string method;            // "word-enumeration" | "plane-factored"
};

namespace detail {

inline BinPoly reverse_plane(const BinPoly& p, unsigned n) {
    BinPoly r;
    for (unsigned i = 0; i < n; ++i)
        if (p.coeff(i)) r.flip(n - 1 - i);
    return r;
}

// single-word helpers for the hot closure loops (n <= 64)
inline uint64_t reverse_bits_u64(uint64_t v, unsigned n) {
    uint64_t r = 0;
    while (v) {
        unsigned i = static_cast<unsigned>(std::countr_zero(v));
        v &= v - 1;
        r |= uint64_t{1} << (n - 1 - i);
    }
    return r;
}

inline uint64_t mod_u64(uint64_t a, uint64_t divisor, unsigned ddeg) {
    if (ddeg == 0) return 0;
    while (a >> ddeg) {
        unsigned adeg = 63 - static_cast<unsigned>(std::countl_zero(a));
        a ^= divisor << (adeg - ddeg);
    }
    return a;
}

inline uint64_t low_word(const BinPoly& p) { return p.words().empty() ? 0 : p.words()[0]; }

}  // namespace detail

// Exhaustive closure check factored through the plane decomposition:
// x = (a, b) runs over <f0> x <f1>, and x^rc = (rev a, rev b + I), so
// closure holds iff every rev a is a multiple of f0 and every rev b + I is a
// multiple of f1. Reverse closure is the same without the complement mask.
// Cost is |<f0>| + |<f1>| membership tests instead of |C|.
inline ClosureReport closure_bruteforce_planes(const CyclicCodeR& c, unsigned plane_budget = 26) {
    const unsigned n = c.n();
    BinaryCyclicCode rescode = c.residue_code(), tor = c.torsion_code();
    rescode.require_budget(plane_budget);
    tor.require_budget(plane_budget);
    const BinPoly ones = all_ones_poly(n);

    bool a_rev = true, b_rev = true, b_rc = true;
    if (n <= 63) {
        const uint64_t f0w = detail::low_word(c.f0()), f1w = detail::low_word(c.f1());
        const unsigned d0 = c.deg_f0(), d1 = c.deg_f1();
        const uint64_t ones_w = detail::low_word(ones);
        auto arows = rescode.rows();
        detail::enumerate_chunk<1>(arows, 0, uint64_t{1} << arows.k,
                                   [&](const uint64_t* a, const uint64_t*, uint64_t) {
                                       uint64_t rev = detail::reverse_bits_u64(a[0], n);
                                       a_rev = a_rev && detail::mod_u64(rev, f0w, d0) == 0;
                                   });
        auto brows = tor.rows();
        detail::enumerate_chunk<1>(brows, 0, uint64_t{1} << brows.k,
                                   [&](const uint64_t* b, const uint64_t*, uint64_t) {
                                       uint64_t rev = detail::reverse_bits_u64(b[0], n);
                                       b_rev = b_rev && detail::mod_u64(rev, f1w, d1) == 0;
                                       b_rc = b_rc && detail::mod_u64(rev ^ ones_w, f1w, d1) == 0;
                                   });
    } else {
        auto arows = rescode.rows();
        detail::enumerate_chunk_any(arows, 0, uint64_t{1} << arows.k,
                                    [&](const uint64_t* a, const uint64_t*, uint64_t) {
                                        std::vector<uint64_t> aw(a, a + arows.words);
                                        BinPoly rev = detail::reverse_plane(BinPoly::from_words(aw), n);
                                        a_rev = a_rev && c.f0().divides(rev);
                                    });
        auto brows = tor.rows();
        detail::enumerate_chunk_any(brows, 0, uint64_t{1} << brows.k,
                                    [&](const uint64_t* b, const uint64_t*, uint64_t) {
                                        std::vector<uint64_t> bw(b, b + brows.words);
                                        BinPoly rev = detail::reverse_plane(BinPoly::from_words(bw), n);
                                        b_rev = b_rev && c.f1().divides(rev);
                                        b_rc = b_rc && c.f1().divides(rev + ones);
                                    });
    }
    ClosureReport rep;
    rep.rev_closed = a_rev && b_rev;
    rep.rc_closed = a_rev && b_rc;
    rep.method = "plane-factored";
    return rep;
}

// Word-by-word closure check: enumerate every codeword, apply the map, test
// membership. Slower but takes the definition at face value.
inline ClosureReport closure_bruteforce_words(const CyclicCodeR& c, unsigned budget = kDefaultBudget) {
    c.require_budget(budget);
    ClosureReport rep;
    rep.rc_closed = rep.rev_closed = true;
    rep.method = "word-enumeration";
    const unsigned n = c.n();
    if (n <= 63) {
        const uint64_t f0w = detail::low_word(c.f0()), f1w = detail::low_word(c.f1());
        const unsigned d0 = c.deg_f0(), d1 = c.deg_f1();
        const uint64_t ones_w = detail::low_word(all_ones_poly(n));
        auto rows = c.rows();
        detail::enumerate_chunk<1>(rows, 0, uint64_t{1} << rows.k,
                                   [&](const uint64_t* a, const uint64_t* b, uint64_t) {
                                       uint64_t ra = detail::reverse_bits_u64(a[0], n);
                                       uint64_t rb = detail::reverse_bits_u64(b[0], n);
                                       bool a_in = detail::mod_u64(ra, f0w, d0) == 0;
                                       rep.rev_closed =
                                           rep.rev_closed && a_in && detail::mod_u64(rb, f1w, d1) == 0;
                                       rep.rc_closed = rep.rc_closed && a_in &&
                                                       detail::mod_u64(rb ^ ones_w, f1w, d1) == 0;
                                   });
        return rep;
    }
    CyclicCodeR::Stream s = c.enumerate(budget);
    RingWord w;
    while (s.next(w)) {
        RingWord rev = reverse_word(w);
        if (rep.rev_closed && !c.contains(rev)) rep.rev_closed = false;
        if (rep.rc_closed && !c.contains(complement_word(rev))) rep.rc_closed = false;
        if (!rep.rev_closed && !rep.rc_closed) break;
    }
    return rep;
}

struct PairwiseMins {
    unsigned hamming_distinct = ~0u;  // min H(x,y) over x != y
    unsigned reverse = ~0u;           // min H(x^r, y) over all pairs, x = y included
    unsigned reverse_complement = ~0u;
};

struct BruteForceReport {
    uint64_t enumerated_count = 0;
    bool count_matches_formula = false;
    std::string count_method;  // "word-set" | "plane-product"

    detail::MinWeights min_weights;  // over nonzero codewords

    std::map<unsigned, uint64_t> gc_histogram;  // gc weight -> codeword count
    bool gc_fixed_strict = false;               // every codeword shares one GC weight
    bool gc_fixed_nonzero_residue = false;      // every codeword with nonzero residue does
    std::optional<unsigned> gc_value;           // the shared value when fixed

    ClosureReport closure;
    std::optional<PairwiseMins> pairwise;  // present when |C|^2 fits the quadratic budget

    // constraint verdicts at distance d (absent when d was not supplied)
    std::optional<unsigned> d;
    bool hamming_constraint = false;
    bool reverse_constraint = false;
    bool rc_constraint = false;
    bool degenerate = false;  // zero code; pair set of distinct words is empty
};

namespace detail {

// exact distinct count of a span, for spans that fit in two words per element
inline uint64_t span_distinct_count(const SpanRows& rows) {
    if (rows.words > 2) {
        std::set<std::vector<uint64_t>> seen;
        enumerate_chunk_any(rows, 0, uint64_t{1} << rows.k, [&](const uint64_t* a, const uint64_t*, uint64_t) {
            seen.insert(std::vector<uint64_t>(a, a + rows.words));
        });
        return seen.size();
    }
    std::vector<__uint128_t> keys;
    keys.reserve(uint64_t{1} << rows.k);
    if (rows.words == 1) {
        enumerate_chunk<1>(rows, 0, uint64_t{1} << rows.k,
                           [&](const uint64_t* a, const uint64_t*, uint64_t) { keys.push_back(a[0]); });
    } else {
        enumerate_chunk<2>(rows, 0, uint64_t{1} << rows.k, [&](const uint64_t* a, const uint64_t*, uint64_t) {
            keys.push_back(static_cast<__uint128_t>(a[0]) | (static_cast<__uint128_t>(a[1]) << 64));
        });
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

}  // namespace detail

// Enumerates the whole code and checks the DNA-code constraints directly
// from their definitions. Pairwise scans are quadratic in |C| and run only
// when 2*log2|C| <= pairwise_budget.
inline BruteForceReport verify_constraints_bruteforce(const CyclicCodeR& c,
                                                      std::optional<unsigned> d = std::nullopt,
                                                      unsigned budget = kDefaultBudget, unsigned threads = 0,
                                                      unsigned pairwise_budget = 30) {
    c.require_budget(budget);
    BruteForceReport rep;
    rep.d = d;
    rep.degenerate = c.is_zero_code();
    const unsigned n = c.n();
    const unsigned words = (n + 63) / 64;

    // distinct-count check of the cardinality formula: full word set when it
    // fits, otherwise the product of the two plane sets (a codeword is
    // exactly an (a, b) pair, so distinct pairs = distinct a * distinct b)
    if (c.log2_size() <= 20 && words <= 1) {
        std::vector<__uint128_t> keys;
        keys.reserve(uint64_t{1} << c.log2_size());
        auto rows = c.rows();
        detail::enumerate_chunk_any(rows, 0, uint64_t{1} << rows.k,
                                    [&](const uint64_t* a, const uint64_t* b, uint64_t) {
                                        keys.push_back(static_cast<__uint128_t>(a[0]) |
                                                       (static_cast<__uint128_t>(b[0]) << 64));
                                    });
        std::sort(keys.begin(), keys.end());
        rep.enumerated_count = static_cast<uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
        rep.count_method = "word-set";
    } else {
        uint64_t na = detail::span_distinct_count(c.residue_code().rows());
        uint64_t nb = detail::span_distinct_count(c.torsion_code().rows());
        rep.enumerated_count = na * nb;
        rep.count_method = "plane-product";
    }
    rep.count_matches_formula = rep.enumerated_count == (uint64_t{1} << c.log2_size());

    // weights and GC histogram in one pass
    {
        auto rows = c.rows();
        struct Acc {
            detail::MinWeights mins;
            std::vector<uint64_t> gc;
        };
        Acc acc = detail::reduce_span<Acc>(
            rows, threads,
            [&](Acc& a) {
                a.gc.assign(n + 1, 0);
                return [&a, words](const uint64_t* pa, const uint64_t* pb, uint64_t) {
                    unsigned nz = 0, nu = 0, gcw = 0;
                    for (unsigned w = 0; w < words; ++w) {
                        nz += static_cast<unsigned>(std::popcount(pa[w] | pb[w]));
                        nu += static_cast<unsigned>(std::popcount(~pa[w] & pb[w]));
                        gcw += static_cast<unsigned>(std::popcount(pa[w]));
                    }
                    ++a.gc[gcw];
                    if (!nz) return;
                    a.mins.hamming = std::min(a.mins.hamming, nz);
                    a.mins.lee = std::min(a.mins.lee, nz + nu);
                    a.mins.euclidean = std::min(a.mins.euclidean, nz + 3 * nu);
                };
            },
            [](Acc& into, Acc&& from) {
                into.mins.hamming = std::min(into.mins.hamming, from.mins.hamming);
                into.mins.lee = std::min(into.mins.lee, from.mins.lee);
                into.mins.euclidean = std::min(into.mins.euclidean, from.mins.euclidean);
                for (size_t i = 0; i < from.gc.size(); ++i) into.gc[i] += from.gc[i];
            });
        rep.min_weights = acc.mins;
        for (unsigned i = 0; i <= n; ++i)
            if (acc.gc[i]) rep.gc_histogram[i] = acc.gc[i];
    }
    rep.gc_fixed_strict = rep.gc_histogram.size() == 1;
    {
        // residue-zero codewords (the u-multiples) all have GC weight 0;
        // the fixed-GC families promise one shared value outside that coset
        uint64_t residue_zero_words = uint64_t{1} << (n - c.deg_f1());
        std::map<unsigned, uint64_t> hist = rep.gc_histogram;
        auto it = hist.find(0);
        if (it != hist.end()) {
            if (it->second < residue_zero_words) throw std::logic_error("GC histogram inconsistent");
            it->second -= residue_zero_words;
            if (it->second == 0) hist.erase(it);
        }
        rep.gc_fixed_nonzero_residue = hist.size() <= 1;
        if (hist.size() == 1) rep.gc_value = hist.begin()->first;
    }

    rep.closure = closure_bruteforce_words(c, budget);

    if (2 * c.log2_size() <= pairwise_budget && words == 1) {
        // materialize and scan all ordered pairs
        std::vector<std::pair<uint64_t, uint64_t>> cw;
        cw.reserve(uint64_t{1} << c.log2_size());
        auto rows = c.rows();
        detail::enumerate_chunk_any(rows, 0, uint64_t{1} << rows.k,
                                    [&](const uint64_t* a, const uint64_t* b, uint64_t) {
                                        cw.emplace_back(a[0], b[0]);
                                    });
        const uint64_t mask = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
        auto revbits = [&](uint64_t v) {
            uint64_t r = 0;
            for (unsigned i = 0; i < n; ++i)
                if ((v >> i) & 1) r |= uint64_t{1} << (n - 1 - i);
            return r;
        };
        PairwiseMins pm;
        const size_t cnt = cw.size();
        unsigned t = detail::effective_threads(threads, 2 * c.log2_size());
        std::vector<PairwiseMins> parts(t);
        std::vector<std::thread> pool;
        for (unsigned ti = 0; ti < t; ++ti) {
            size_t lo = cnt / t * ti, hi = (ti + 1 == t) ? cnt : cnt / t * (ti + 1);
            pool.emplace_back([&, ti, lo, hi] {
                PairwiseMins local;
                for (size_t i = lo; i < hi; ++i) {
                    uint64_t xa = cw[i].first, xb = cw[i].second;
                    uint64_t ra = revbits(xa), rb = revbits(xb);
                    uint64_t rcb = rb ^ mask;
                    for (size_t j = 0; j < cnt; ++j) {
                        uint64_t ya = cw[j].first, yb = cw[j].second;
                        unsigned dr = static_cast<unsigned>(std::popcount((ra ^ ya) | (rb ^ yb)));
                        unsigned drc = static_cast<unsigned>(std::popcount((ra ^ ya) | (rcb ^ yb)));
                        local.reverse = std::min(local.reverse, dr);
                        local.reverse_complement = std::min(local.reverse_complement, drc);
                        if (i != j) {
                            unsigned dh = static_cast<unsigned>(std::popcount((xa ^ ya) | (xb ^ yb)));
                            local.hamming_distinct = std::min(local.hamming_distinct, dh);
                        }
                    }
                }
                parts[ti] = local;
            });
        }
        for (auto& th : pool) th.join();
        for (auto& p : parts) {
            pm.hamming_distinct = std::min(pm.hamming_distinct, p.hamming_distinct);
            pm.reverse = std::min(pm.reverse, p.reverse);
            pm.reverse_complement = std::min(pm.reverse_complement, p.reverse_complement);
        }
        rep.pairwise = pm;
    }

    if (d) {
        if (rep.degenerate) {
            // zero code: the distinct-pair set is empty (min distance "infinity")
            rep.hamming_constraint = rep.reverse_constraint = rep.rc_constraint = true;
        } else if (rep.pairwise) {
            rep.hamming_constraint = rep.pairwise->hamming_distinct >= *d;
            rep.reverse_constraint = rep.pairwise->reverse >= *d;
            rep.rc_constraint = rep.pairwise->reverse_complement >= *d;
        } else {
            // linear code: min pairwise distance over distinct words equals
            // the min nonzero weight
            rep.hamming_constraint = rep.min_weights.hamming >= *d;
        }
    }
    return rep;
}

}  // namespace dnacodex
