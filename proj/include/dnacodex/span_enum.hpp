#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "dnacodex/binpoly.hpp"

namespace dnacodex::detail {

// Basis of a GF(2)-linear span of bit-plane pairs, flattened for the hot
// loops: row r occupies ra[r*words .. r*words+words). Single-plane spans
// leave rb empty.
struct SpanRows {
    unsigned k = 0;      // number of rows; span size 2^k
    unsigned words = 1;  // 64-bit words per plane
    std::vector<uint64_t> ra, rb;

    void push_row(const BinPoly& a, const BinPoly& b, bool with_b) {
        for (unsigned w = 0; w < words; ++w) {
            ra.push_back(w < a.words().size() ? a.words()[w] : 0);
            if (with_b) rb.push_back(w < b.words().size() ? b.words()[w] : 0);
        }
        ++k;
    }
};

inline unsigned effective_threads(unsigned requested, unsigned log2_work) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned t = requested ? requested : (hw ? hw : 1);
    if (log2_work < 18) t = 1;  // not worth spawning
    return t;
}

// Gray-code walk over span elements gray(begin..end); visit(a, b) sees the
// current plane words. Deterministic for any chunking: each index i
// contributes element gray(i) exactly once.
template <unsigned W, class V>
void enumerate_chunk(const SpanRows& rows, uint64_t begin, uint64_t end, V&& visit) {
    uint64_t a[W] = {}, b[W] = {};
    const bool dual = !rows.rb.empty();
    uint64_t g = begin ^ (begin >> 1);
    while (g) {
        unsigned r = static_cast<unsigned>(std::countr_zero(g));
        g &= g - 1;
        for (unsigned w = 0; w < W; ++w) {
            a[w] ^= rows.ra[r * W + w];
            if (dual) b[w] ^= rows.rb[r * W + w];
        }
    }
    visit(a, b, begin);
    for (uint64_t i = begin + 1; i < end; ++i) {
        unsigned r = static_cast<unsigned>(std::countr_zero(i));
        for (unsigned w = 0; w < W; ++w) {
            a[w] ^= rows.ra[r * W + w];
            if (dual) b[w] ^= rows.rb[r * W + w];
        }
        visit(a, b, i);
    }
}

// runtime-width fallback for long codes
template <class V>
void enumerate_chunk_dyn(const SpanRows& rows, uint64_t begin, uint64_t end, V&& visit) {
    const unsigned W = rows.words;
    std::vector<uint64_t> a(W, 0), b(W, 0);
    const bool dual = !rows.rb.empty();
    auto apply = [&](unsigned r) {
        for (unsigned w = 0; w < W; ++w) {
            a[w] ^= rows.ra[r * W + w];
            if (dual) b[w] ^= rows.rb[r * W + w];
        }
    };
    uint64_t g = begin ^ (begin >> 1);
    while (g) {
        apply(static_cast<unsigned>(std::countr_zero(g)));
        g &= g - 1;
    }
    visit(a.data(), b.data(), begin);
    for (uint64_t i = begin + 1; i < end; ++i) {
        apply(static_cast<unsigned>(std::countr_zero(i)));
        visit(a.data(), b.data(), i);
    }
}

template <class V>
void enumerate_chunk_any(const SpanRows& rows, uint64_t begin, uint64_t end, V&& visit) {
    switch (rows.words) {
        case 1: enumerate_chunk<1>(rows, begin, end, visit); break;
        case 2: enumerate_chunk<2>(rows, begin, end, visit); break;
        case 3: enumerate_chunk<3>(rows, begin, end, visit); break;
        case 4: enumerate_chunk<4>(rows, begin, end, visit); break;
        default: enumerate_chunk_dyn(rows, begin, end, visit); break;
    }
}

// Runs one accumulator per thread over a partition of the span and folds the
// results with merge(into, from). Histogram addition and min are commutative,
// so the outcome does not depend on the thread count.
template <class Acc, class MakeVisitor, class Merge>
Acc reduce_span(const SpanRows& rows, unsigned threads, MakeVisitor&& make_visitor, Merge&& merge) {
    const uint64_t total = uint64_t{1} << rows.k;
    unsigned t = effective_threads(threads, rows.k);
    if (t <= 1) {
        Acc acc{};
        auto v = make_visitor(acc);
        enumerate_chunk_any(rows, 0, total, v);
        return acc;
    }
    std::vector<Acc> accs(t);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned ti = 0; ti < t; ++ti) {
        uint64_t begin = total / t * ti;
        uint64_t end = (ti + 1 == t) ? total : total / t * (ti + 1);
        pool.emplace_back([&, ti, begin, end] {
            auto v = make_visitor(accs[ti]);
            enumerate_chunk_any(rows, begin, end, v);
        });
    }
    for (auto& th : pool) th.join();
    Acc out = std::move(accs[0]);
    for (unsigned ti = 1; ti < t; ++ti) merge(out, std::move(accs[ti]));
    return out;
}

inline unsigned popcount_planes(const uint64_t* p, unsigned words) {
    unsigned c = 0;
    for (unsigned w = 0; w < words; ++w) c += static_cast<unsigned>(std::popcount(p[w]));
    return c;
}

// Hamming weight histogram of a single-plane span (a binary linear code)
inline std::map<unsigned, uint64_t> span_weight_histogram(const SpanRows& rows, unsigned threads) {
    using Hist = std::vector<uint64_t>;
    const unsigned maxw = rows.words * 64 + 1;
    Hist hist = reduce_span<Hist>(
        rows, threads,
        [&](Hist& h) {
            h.assign(maxw, 0);
            return [&h, w = rows.words](const uint64_t* a, const uint64_t*, uint64_t) {
                ++h[popcount_planes(a, w)];
            };
        },
        [](Hist& into, Hist&& from) {
            for (size_t i = 0; i < from.size(); ++i) into[i] += from[i];
        });
    std::map<unsigned, uint64_t> out;
    for (unsigned i = 0; i < hist.size(); ++i)
        if (hist[i]) out[i] = hist[i];
    return out;
}

// minimum nonzero Hamming weight of a single-plane span; UINT_MAX if the
// span is {0}. Counting stops early once a word's partial popcount reaches
// the current minimum.
inline unsigned span_min_weight(const SpanRows& rows, unsigned threads) {
    struct Min {
        unsigned v = ~0u;
    };
    Min m = reduce_span<Min>(
        rows, threads,
        [&](Min& acc) {
            return [&acc, w = rows.words](const uint64_t* a, const uint64_t*, uint64_t) {
                unsigned c = 0;
                for (unsigned i = 0; i < w; ++i) {
                    c += static_cast<unsigned>(std::popcount(a[i]));
                    if (c >= acc.v) return;
                }
                if (c) acc.v = c;
            };
        },
        [](Min& into, Min&& from) {
            if (from.v < into.v) into.v = from.v;
        });
    return m.v;
}

struct MinWeights {
    unsigned hamming = ~0u, lee = ~0u, euclidean = ~0u;  // over nonzero elements
};

// minimum nonzero Hamming/Lee/Euclidean weights of a plane-pair span
inline MinWeights span_min_weights_r(const SpanRows& rows, unsigned threads) {
    return reduce_span<MinWeights>(
        rows, threads,
        [&](MinWeights& acc) {
            return [&acc, w = rows.words](const uint64_t* a, const uint64_t* b, uint64_t) {
                unsigned nz = 0, nu = 0;
                for (unsigned i = 0; i < w; ++i) {
                    nz += static_cast<unsigned>(std::popcount(a[i] | b[i]));
                    nu += static_cast<unsigned>(std::popcount(~a[i] & b[i]));
                }
                if (nz == 0) return;
                if (nz < acc.hamming) acc.hamming = nz;
                if (nz + nu < acc.lee) acc.lee = nz + nu;
                if (nz + 3 * nu < acc.euclidean) acc.euclidean = nz + 3 * nu;
            };
        },
        [](MinWeights& into, MinWeights&& from) {
            into.hamming = std::min(into.hamming, from.hamming);
            into.lee = std::min(into.lee, from.lee);
            into.euclidean = std::min(into.euclidean, from.euclidean);
        });
}

}  // namespace dnacodex::detail
