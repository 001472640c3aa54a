#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dnacodex/binpoly.hpp"

using namespace dnacodex;

namespace {

BinPoly P(const std::string& s) { return BinPoly::parse(s); }

// reference product by schoolbook convolution, independent of the shift-xor path
BinPoly ref_mul(const BinPoly& a, const BinPoly& b) {
    BinPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (unsigned i = 0; i <= a.deg(); ++i)
        for (unsigned j = 0; j <= b.deg(); ++j)
            if (a.coeff(i) && b.coeff(j)) r.flip(i + j);
    return r;
}

BinPoly random_poly(std::mt19937& rng, unsigned max_deg, bool nonzero = true) {
    std::uniform_int_distribution<unsigned> degd(0, max_deg);
    while (true) {
        unsigned d = degd(rng);
        BinPoly p;
        for (unsigned i = 0; i <= d; ++i)
            if (rng() & 1) p.flip(i);
        if (!nonzero || !p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("zero polynomial has distinguished degree") {
    BinPoly z;
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    CHECK_THROWS_AS(z.deg(), DomainRefusal);
    CHECK(BinPoly::one().degree() == 0u);
}

TEST_CASE("multiplication") {
    CHECK(P("x+1") * P("x+1") == P("x^2+1"));  // characteristic-2 squaring
    CHECK(P("x^3+x+1") * P("x^3+x^2+1") * P("x+1") == BinPoly::xn_minus_one(7));
    BinPoly p = P("x^5+x^2+1");
    CHECK(p * BinPoly::one() == p);
    CHECK(p * BinPoly::zero() == BinPoly::zero());
}

TEST_CASE("multiplication against convolution reference") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 300; ++i) {
        BinPoly a = random_poly(rng, 90, false), b = random_poly(rng, 90, false);
        CHECK(a * b == ref_mul(a, b));
    }
}

TEST_CASE("divmod") {
    auto dm = BinPoly::divmod(BinPoly::xn_minus_one(7), P("x+1"));
    CHECK(dm.quotient == P("x^6+x^5+x^4+x^3+x^2+x+1"));
    CHECK(dm.remainder.is_zero());
    CHECK(dm.exact());
    // verified by re-multiplication
    CHECK(dm.quotient * P("x+1") == BinPoly::xn_minus_one(7));

    BinPoly p = P("x^4+x^3+1");
    auto self = BinPoly::divmod(p, p);
    CHECK(self.quotient == BinPoly::one());
    CHECK(self.remainder.is_zero());

    auto low = BinPoly::divmod(P("x^2+1"), P("x^3+1"));
    CHECK(low.quotient.is_zero());
    CHECK(low.remainder == P("x^2+1"));

    CHECK_THROWS_AS(BinPoly::divmod(p, BinPoly::zero()), DomainRefusal);
}

TEST_CASE("divmod round-trip property") {
    std::mt19937 rng(99);
    for (int i = 0; i < 300; ++i) {
        BinPoly a = random_poly(rng, 120, false), b = random_poly(rng, 60);
        auto dm = BinPoly::divmod(a, b);
        CHECK(dm.quotient * b + dm.remainder == a);
        if (!dm.remainder.is_zero()) CHECK(dm.remainder.deg() < b.deg());
    }
}

TEST_CASE("reciprocal") {
    CHECK(P("x^3+x+1").reciprocal() == P("x^3+x^2+1"));  // 1011 -> 1101
    CHECK(P("x+1").reciprocal() == P("x+1"));
    CHECK(P("x^2").reciprocal() == BinPoly::one());  // f(0) = 0 collapses the degree
    CHECK_THROWS_AS(BinPoly::zero().reciprocal(), DomainRefusal);
}

TEST_CASE("self-reciprocal predicate") {
    CHECK(P("x+1").is_self_reciprocal());
    CHECK_FALSE(P("x^3+x+1").is_self_reciprocal());
    CHECK(P("x^2+x+1").is_self_reciprocal());
}

TEST_CASE("reciprocal is an involution away from x | f") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        BinPoly f = random_poly(rng, 64);
        if (!f.constant_term()) f.flip(0);  // force f(0) = 1
        CHECK(f.reciprocal().reciprocal() == f);
    }
}

TEST_CASE("reciprocal product identity") {
    CHECK(reciprocal_product_identity_check(P("x+1"), P("x^3+x+1")));
    CHECK(reciprocal_product_identity_check(P("x^2+x+1"), P("x^2+x+1")));
    std::mt19937 rng(2024);
    for (int i = 0; i < 300; ++i)
        CHECK(reciprocal_product_identity_check(random_poly(rng, 16), random_poly(rng, 16)));
}

TEST_CASE("reciprocal sum identity for strictly dominating degree") {
    // (f+g)* = f* + x^(deg f - deg g) g* when deg f > deg g
    std::mt19937 rng(555);
    for (int i = 0; i < 300; ++i) {
        BinPoly f = random_poly(rng, 40), g = random_poly(rng, 40);
        if (f.deg() == g.deg()) continue;
        if (f.deg() < g.deg()) std::swap(f, g);
        BinPoly lhs = (f + g).reciprocal();
        BinPoly rhs = f.reciprocal() + g.reciprocal().shifted(f.deg() - g.deg());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gcd and lcm") {
    BinPoly a = P("x^3+x+1") * P("x+1"), b = P("x+1") * P("x^2+x+1");
    CHECK(BinPoly::gcd(a, b) == P("x+1"));
    CHECK(BinPoly::lcm(a, b) == P("x^3+x+1") * P("x+1") * P("x^2+x+1"));
}

TEST_CASE("hex round trip") {
    CHECK(P("x^3+x+1").to_hex() == "0b");
    CHECK(BinPoly::from_hex("0b") == P("x^3+x+1"));
    CHECK(BinPoly::parse("0b") == P("x^3+x+1"));
    CHECK(P("x^6+x^3+1").to_hex() == "49");
    CHECK(BinPoly::from_hex("0x49") == P("x^6+x^3+1"));
    // multi-byte little-endian: x^8+1 is bytes 01 01
    CHECK(P("x^8+1").to_hex() == "0101");
    CHECK(BinPoly::from_hex("0101") == P("x^8+1"));
    std::mt19937 rng(31337);
    for (int i = 0; i < 100; ++i) {
        BinPoly p = random_poly(rng, 200);
        CHECK(BinPoly::from_hex(p.to_hex()) == p);
        CHECK(BinPoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("string format") {
    CHECK(P("x^6+x^3+1").to_string() == "x^6+x^3+1");
    CHECK(BinPoly::zero().to_string() == "0");
    CHECK(BinPoly::one().to_string() == "1");
    CHECK(P(" x^2 + x + 1 ") == P("x^2+x+1"));
    CHECK_THROWS_AS(BinPoly::parse("x^"), ParseError);
    CHECK_THROWS_AS(BinPoly::parse("y+1"), ParseError);
    CHECK_THROWS_AS(BinPoly::from_hex("zz"), ParseError);
}

TEST_CASE("addition is characteristic 2") {
    std::mt19937 rng(42);
    for (int i = 0; i < 100; ++i) {
        BinPoly p = random_poly(rng, 100, false);
        CHECK((p + p).is_zero());
    }
}
