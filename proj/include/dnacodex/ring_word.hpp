#pragma once

#include <bit>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dnacodex/binpoly.hpp"

namespace dnacodex {

// Element of R = F2 + uF2 (u^2 = 0): value a + u*b packed as two bits.
// 0 <-> A, u <-> T, 1+u <-> C, 1 <-> G.
struct RingElem {
    uint8_t a : 1;
    uint8_t b : 1;

    friend constexpr bool operator==(RingElem, RingElem) = default;
};

inline constexpr RingElem kZero{0, 0};
inline constexpr RingElem kOne{1, 0};
inline constexpr RingElem kU{0, 1};
inline constexpr RingElem kOnePlusU{1, 1};

constexpr RingElem ring_add(RingElem x, RingElem y) {
    return {static_cast<uint8_t>(x.a ^ y.a), static_cast<uint8_t>(x.b ^ y.b)};
}

// (a+ub)(c+ud) = ac + u(ad+bc) since u^2 = 0
constexpr RingElem ring_mul(RingElem x, RingElem y) {
    return {static_cast<uint8_t>(x.a & y.a),
            static_cast<uint8_t>((x.a & y.b) ^ (x.b & y.a))};
}

constexpr RingElem ring_complement(RingElem x) { return ring_add(x, kU); }  // x + x^ = u

struct WeightTriple {
    unsigned hamming = 0;
    unsigned lee = 0;
    unsigned euclidean = 0;

    friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
};

// Length-n vector over R stored as two bit-planes: plane a holds the F2 part,
// plane b the u part. Complement is one XOR of the b plane; the three weights
// are popcounts.
class RingWord {
public:
    RingWord() = default;
    explicit RingWord(unsigned n) : n_(n), a_((n + 63) / 64, 0), b_((n + 63) / 64, 0) {}

    RingWord(unsigned n, const BinPoly& a_plane, const BinPoly& b_plane) : RingWord(n) {
        for (size_t i = 0; i < a_plane.words().size(); ++i) a_[i] = a_plane.words()[i];
        for (size_t i = 0; i < b_plane.words().size(); ++i) b_[i] = b_plane.words()[i];
    }

    unsigned size() const { return n_; }

    RingElem get(unsigned i) const {
        return {static_cast<uint8_t>((a_[i / 64] >> (i % 64)) & 1),
                static_cast<uint8_t>((b_[i / 64] >> (i % 64)) & 1)};
    }

    void set(unsigned i, RingElem e) {
        uint64_t mask = uint64_t{1} << (i % 64);
        a_[i / 64] = (a_[i / 64] & ~mask) | (uint64_t{e.a} << (i % 64));
        b_[i / 64] = (b_[i / 64] & ~mask) | (uint64_t{e.b} << (i % 64));
    }

    const std::vector<uint64_t>& a_plane() const { return a_; }
    const std::vector<uint64_t>& b_plane() const { return b_; }

    BinPoly a_poly() const { return BinPoly::from_words(a_); }
    BinPoly b_poly() const { return BinPoly::from_words(b_); }

    friend RingWord operator+(const RingWord& x, const RingWord& y) {
        RingWord r(x.n_);
        for (size_t i = 0; i < r.a_.size(); ++i) {
            r.a_[i] = x.a_[i] ^ y.a_[i];
            r.b_[i] = x.b_[i] ^ y.b_[i];
        }
        return r;
    }

    friend bool operator==(const RingWord&, const RingWord&) = default;

private:
    unsigned n_ = 0;
    std::vector<uint64_t> a_, b_;
};

inline RingWord complement_word(RingWord w) {
    RingWord r(w.size());
    for (unsigned i = 0; i < w.size(); ++i) r.set(i, ring_complement(w.get(i)));
    return r;
}

inline RingWord reverse_word(const RingWord& w) {
    RingWord r(w.size());
    for (unsigned i = 0; i < w.size(); ++i) r.set(w.size() - 1 - i, w.get(i));
    return r;
}

inline RingWord reverse_complement(const RingWord& w) { return reverse_word(complement_word(w)); }

// n_1 + n_u + n_{1+u} / n_1 + 2 n_u + n_{1+u} / n_1 + 4 n_u + n_{1+u}
inline WeightTriple weights(const RingWord& w) {
    unsigned nonzero = 0, n_u = 0;
    const auto& a = w.a_plane();
    const auto& b = w.b_plane();
    for (size_t i = 0; i < a.size(); ++i) {
        nonzero += static_cast<unsigned>(std::popcount(a[i] | b[i]));
        n_u += static_cast<unsigned>(std::popcount(~a[i] & b[i]));
    }
    return {nonzero, nonzero + n_u, nonzero + 3 * n_u};
}

// coordinates equal to 1 or 1+u, i.e. the G/C positions: one popcount of the
// a plane
inline unsigned gc_weight(const RingWord& w) {
    unsigned c = 0;
    for (uint64_t v : w.a_plane()) c += static_cast<unsigned>(std::popcount(v));
    return c;
}

inline WeightTriple distance(const RingWord& x, const RingWord& y) { return weights(x + y); }

// DNA strand, 5'->3'
using DnaStrand = std::string;

inline char to_base(RingElem e) {
    static constexpr char tbl[2][2] = {{'A', 'T'}, {'G', 'C'}};
    return tbl[e.a][e.b];
}

inline RingElem from_base(char c) {
    switch (c) {
        case 'A': return kZero;
        case 'T': return kU;
        case 'C': return kOnePlusU;
        case 'G': return kOne;
        default: throw ParseError(std::string("invalid DNA base '") + c + "' (expected A, C, G or T)");
    }
}

inline DnaStrand to_dna(const RingWord& w) {
    DnaStrand s(w.size(), 'A');
    for (unsigned i = 0; i < w.size(); ++i) s[i] = to_base(w.get(i));
    return s;
}

inline RingWord from_dna(const DnaStrand& s) {
    RingWord w(static_cast<unsigned>(s.size()));
    for (unsigned i = 0; i < s.size(); ++i) w.set(i, from_base(s[i]));
    return w;
}

// Lee-isometric binary image: a+ub -> (b, a+b) per coordinate, pairs
// concatenated in coordinate order (bit 2i = b_i, bit 2i+1 = a_i+b_i)
inline std::vector<bool> gray_image(const RingWord& w) {
    std::vector<bool> img(2 * w.size());
    for (unsigned i = 0; i < w.size(); ++i) {
        RingElem e = w.get(i);
        img[2 * i] = e.b;
        img[2 * i + 1] = e.a ^ e.b;
    }
    return img;
}

// FASTA record: ">cw<index> gc=<k> wH=<h> wL=<l>" then the strand
inline void write_fasta_record(std::ostream& os, uint64_t index, const RingWord& w) {
    WeightTriple wt = weights(w);
    os << ">cw" << index << " gc=" << gc_weight(w) << " wH=" << wt.hamming << " wL=" << wt.lee << "\n"
       << to_dna(w) << "\n";
}

}  // namespace dnacodex
