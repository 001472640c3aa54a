#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dnacodex/errors.hpp"

namespace dnacodex {

// Polynomial over GF(2), bit-packed: bit i of the word array is the
// coefficient of x^i. The word vector is kept trimmed, so the zero
// polynomial is the empty vector and degree() is nullopt rather than a
// -1 sentinel.
class BinPoly {
public:
    BinPoly() = default;

    static BinPoly zero() { return BinPoly{}; }
    static BinPoly one() { return monomial(0); }
    static BinPoly x() { return monomial(1); }

    static BinPoly monomial(unsigned e) {
        BinPoly p;
        p.w_.assign(e / 64 + 1, 0);
        p.w_[e / 64] = uint64_t{1} << (e % 64);
        return p;
    }

    // x^n - 1 (== x^n + 1 in characteristic 2)
    static BinPoly xn_minus_one(unsigned n) {
        BinPoly p = monomial(n);
        p.flip(0);
        return p;
    }

    static BinPoly from_words(std::vector<uint64_t> words) {
        BinPoly p;
        p.w_ = std::move(words);
        p.trim();
        return p;
    }

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }

    std::optional<unsigned> degree() const {
        if (w_.empty()) return std::nullopt;
        return static_cast<unsigned>(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
    }

    // degree of a polynomial known to be nonzero
    unsigned deg() const {
        auto d = degree();
        if (!d) throw DomainRefusal("degree of the zero polynomial is undefined");
        return *d;
    }

    bool coeff(unsigned i) const {
        return i / 64 < w_.size() && ((w_[i / 64] >> (i % 64)) & 1);
    }

    void flip(unsigned i) {
        if (i / 64 >= w_.size()) w_.resize(i / 64 + 1, 0);
        w_[i / 64] ^= uint64_t{1} << (i % 64);
        trim();
    }

    unsigned weight() const {
        unsigned c = 0;
        for (uint64_t v : w_) c += static_cast<unsigned>(std::popcount(v));
        return c;
    }

    bool constant_term() const { return coeff(0); }

    const std::vector<uint64_t>& words() const { return w_; }

    friend BinPoly operator+(const BinPoly& a, const BinPoly& b) {
        BinPoly r;
        r.w_.resize(std::max(a.w_.size(), b.w_.size()), 0);
        for (size_t i = 0; i < a.w_.size(); ++i) r.w_[i] ^= a.w_[i];
        for (size_t i = 0; i < b.w_.size(); ++i) r.w_[i] ^= b.w_[i];
        r.trim();
        return r;
    }

    BinPoly& operator+=(const BinPoly& b) { return *this = *this + b; }

    // carry-less shift-and-xor product
    friend BinPoly operator*(const BinPoly& a, const BinPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        BinPoly r;
        r.w_.assign(a.w_.size() + b.w_.size(), 0);
        for (size_t wi = 0; wi < a.w_.size(); ++wi) {
            uint64_t v = a.w_[wi];
            while (v) {
                unsigned bit = static_cast<unsigned>(std::countr_zero(v));
                v &= v - 1;
                r.xor_shifted(b, 64 * static_cast<unsigned>(wi) + bit);
            }
        }
        r.trim();
        return r;
    }

    BinPoly shifted(unsigned k) const {  // multiply by x^k
        if (is_zero()) return zero();
        BinPoly r;
        r.w_.assign(w_.size() + k / 64 + 1, 0);
        r.xor_shifted(*this, k);
        r.trim();
        return r;
    }

    struct DivMod;
    static DivMod divmod(const BinPoly& a, const BinPoly& b);

    bool divides(const BinPoly& multiple) const;

    static BinPoly gcd(BinPoly a, BinPoly b);
    static BinPoly lcm(const BinPoly& a, const BinPoly& b);

    // f*(x) = x^deg(f) f(1/x): the coefficient string reversed down from deg f
    BinPoly reciprocal() const {
        if (is_zero()) throw DomainRefusal("reciprocal of the zero polynomial is undefined");
        const unsigned d = deg();
        BinPoly r;
        r.w_.assign(w_.size(), 0);
        for (unsigned i = 0; i <= d; ++i)
            if (coeff(i)) r.w_[(d - i) / 64] |= uint64_t{1} << ((d - i) % 64);
        r.trim();
        return r;
    }

    bool is_self_reciprocal() const { return reciprocal() == *this; }

    friend bool operator==(const BinPoly& a, const BinPoly& b) { return a.w_ == b.w_; }

    friend std::strong_ordering operator<=>(const BinPoly& a, const BinPoly& b) {
        if (a.w_.size() != b.w_.size()) return a.w_.size() <=> b.w_.size();
        for (size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] <=> b.w_[i];
        return std::strong_ordering::equal;
    }

    // hex encoding: little-endian byte string, byte j holds coefficients of
    // x^(8j)..x^(8j+7); "0b" is x^3+x+1
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        if (is_zero()) return "00";
        size_t nbytes = deg() / 8 + 1;
        std::string s(2 * nbytes, '0');
        for (size_t j = 0; j < nbytes; ++j) {
            uint8_t byte = static_cast<uint8_t>(w_[j / 8] >> (8 * (j % 8)));
            s[2 * j] = digits[byte >> 4];
            s[2 * j + 1] = digits[byte & 15];
        }
        return s;
    }

    static BinPoly from_hex(std::string_view s) {
        if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
        if (s.empty() || s.size() % 2 != 0) throw ParseError("hex polynomial needs an even number of digits");
        BinPoly p;
        p.w_.assign(s.size() / 16 + 1, 0);
        for (size_t j = 0; 2 * j < s.size(); ++j) {
            unsigned byte = 16 * hex_digit(s[2 * j]) + hex_digit(s[2 * j + 1]);
            p.w_[j / 8] |= uint64_t{byte} << (8 * (j % 8));
        }
        p.trim();
        return p;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (unsigned i = deg() + 1; i-- > 0;) {
            if (!coeff(i)) continue;
            if (!first) os << "+";
            if (i == 0)
                os << "1";
            else if (i == 1)
                os << "x";
            else
                os << "x^" << i;
            first = false;
        }
        return os.str();
    }

    // accepts both "x^6+x^3+1" and little-endian hex ("49")
    static BinPoly parse(std::string_view s) {
        if (s.find('^') != std::string_view::npos || s.find('+') != std::string_view::npos ||
            s == "x" || s == "X" || s == "0" || (s.size() > 2 && (s[0] == 'x' || s[0] == 'X')))
            return parse_symbolic(s);
        if (s.size() == 1 && s[0] == '1') return one();
        return from_hex(s);
    }

private:
    std::vector<uint64_t> w_;

    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    void xor_shifted(const BinPoly& src, unsigned k) {
        const unsigned wk = k / 64, bk = k % 64;
        if (w_.size() < src.w_.size() + wk + 1) w_.resize(src.w_.size() + wk + 1, 0);
        for (size_t i = 0; i < src.w_.size(); ++i) {
            w_[i + wk] ^= src.w_[i] << bk;
            if (bk) w_[i + wk + 1] ^= src.w_[i] >> (64 - bk);
        }
    }

    static unsigned hex_digit(char c) {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw ParseError(std::string("invalid hex digit '") + c + "'");
    }

    static BinPoly parse_symbolic(std::string_view s) {
        BinPoly p;
        size_t pos = 0;
        auto skip_ws = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
        bool expect_term = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (!expect_term) {
                if (s[pos] != '+') throw ParseError("expected '+' in polynomial string");
                ++pos;
                skip_ws();
            }
            if (pos >= s.size()) throw ParseError("dangling '+' in polynomial string");
            if (s[pos] == 'x' || s[pos] == 'X') {
                ++pos;
                unsigned e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                        throw ParseError("missing exponent after '^'");
                    e = 0;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                        e = 10 * e + static_cast<unsigned>(s[pos++] - '0');
                }
                p.flip(e);
            } else if (s[pos] == '1') {
                ++pos;
                p.flip(0);
            } else if (s[pos] == '0') {
                ++pos;
            } else {
                throw ParseError(std::string("unexpected character '") + s[pos] + "' in polynomial string");
            }
            expect_term = false;
        }
        if (expect_term) throw ParseError("empty polynomial string");
        return p;
    }
};

struct BinPoly::DivMod {
    BinPoly quotient, remainder;
    bool exact() const { return remainder.is_zero(); }
};

inline BinPoly::DivMod BinPoly::divmod(const BinPoly& a, const BinPoly& b) {
    if (b.is_zero()) throw DomainRefusal("polynomial division by zero");
    DivMod out;
    out.remainder = a;
    const unsigned db = b.deg();
    while (!out.remainder.is_zero() && out.remainder.deg() >= db) {
        unsigned shift = out.remainder.deg() - db;
        out.quotient.flip(shift);
        out.remainder.xor_shifted(b, shift);
        out.remainder.trim();
    }
    return out;
}

inline BinPoly operator/(const BinPoly& a, const BinPoly& b) { return BinPoly::divmod(a, b).quotient; }
inline BinPoly operator%(const BinPoly& a, const BinPoly& b) { return BinPoly::divmod(a, b).remainder; }

inline bool BinPoly::divides(const BinPoly& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return (multiple % *this).is_zero();
}

inline BinPoly BinPoly::gcd(BinPoly a, BinPoly b) {
    while (!b.is_zero()) {
        BinPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline BinPoly BinPoly::lcm(const BinPoly& a, const BinPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return (a * b) / gcd(a, b);
}

// (f g)* = f* g* for nonzero f, g; exposed as a self-test hook
inline bool reciprocal_product_identity_check(const BinPoly& f, const BinPoly& g) {
    return (f * g).reciprocal() == f.reciprocal() * g.reciprocal();
}

}  // namespace dnacodex
