#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dnacodex/gf2m.hpp"

using namespace dnacodex;

namespace {
BinPoly P(const std::string& s) { return BinPoly::parse(s); }
}

TEST_CASE("build_field basics") {
    FieldContext f3 = build_field(3);
    CHECK(f3.modulus() == P("x^3+x+1"));
    CHECK(f3.group_order() == 7);
    // antilog[log[x]] = x for all nonzero elements
    for (uint32_t x = 1; x < 8; ++x) CHECK(f3.antilog(f3.log_of(x)) == x);

    FieldContext f1 = build_field(1);
    CHECK(f1.mul(1, 1) == 1);

    CHECK_THROWS_AS(build_field(0), DomainRefusal);
    CHECK_THROWS_AS(build_field(21), DomainRefusal);
}

TEST_CASE("table moduli are primitive for every supported degree") {
    for (unsigned m = 1; m <= kMaxTableDegree; ++m) {
        FieldContext f(m);
        uint64_t order = f.group_order();
        uint32_t alpha = f.antilog(1 % order);
        CHECK(f.order_of(m == 1 ? 1 : alpha) == order);
        for (unsigned p : PolyField::prime_factors(static_cast<unsigned>(order)))
            CHECK(f.pow(alpha, order / p) != 1u);
    }
}

TEST_CASE("minimal polynomials") {
    FieldContext f3 = build_field(3);
    CHECK(minimal_polynomial(7, {1, 2, 4}, f3) == P("x^3+x+1"));
    CHECK(minimal_polynomial(7, {3, 5, 6}, f3) == P("x^3+x^2+1"));
    CHECK(minimal_polynomial(7, {0}, f3) == P("x+1"));

    FieldContext f6 = build_field(6);
    BinPoly m1_9 = minimal_polynomial(9, {1, 2, 4, 5, 7, 8}, f6);
    CHECK(m1_9 == P("x^6+x^3+1"));
    CHECK(m1_9 == BinPoly::xn_minus_one(9) / (P("x+1") * P("x^2+x+1")));

    // preconditions
    CHECK_THROWS_AS(minimal_polynomial(5, {1, 2, 4, 3}, f3), DomainRefusal);   // 5 does not divide 7
    CHECK_THROWS_AS(minimal_polynomial(7, {1, 2}, f3), DomainRefusal);         // not doubling-closed
}

TEST_CASE("factor_xn1 structure") {
    auto f7 = factor_xn1(7);
    REQUIRE(f7.size() == 3);
    CHECK(f7.at(0) == P("x+1"));
    CHECK(f7.at(1).deg() == 3);
    CHECK(f7.at(3).deg() == 3);
    // the two degree-3 factors form the set {x^3+x+1, x^3+x^2+1}
    std::set<BinPoly> degree3{f7.at(1), f7.at(3)};
    CHECK(degree3 == std::set<BinPoly>{P("x^3+x+1"), P("x^3+x^2+1")});

    auto f1 = factor_xn1(1);
    REQUIRE(f1.size() == 1);
    CHECK(f1.at(0) == P("x+1"));

    auto f15 = factor_xn1(15);
    std::multiset<unsigned> degs;
    for (auto& [rep, p] : f15) degs.insert(p.deg());
    CHECK(degs == std::multiset<unsigned>{1, 4, 4, 2, 4});

    CHECK_THROWS_AS(factor_xn1(8), DomainRefusal);
}

TEST_CASE("factorization multiplies back and is pairwise coprime, small sweep") {
    for (unsigned n : {1u, 3u, 7u, 9u, 15u, 17u, 21u, 33u, 43u, 63u, 65u}) {
        auto fs = factor_xn1(n);
        BinPoly prod = BinPoly::one();
        for (auto& [rep, p] : fs) {
            CHECK(p.divides(BinPoly::xn_minus_one(n)));
            CHECK(p.deg() >= 1);
            prod = prod * p;
        }
        CHECK(prod == BinPoly::xn_minus_one(n));
        for (auto it = fs.begin(); it != fs.end(); ++it)
            for (auto jt = std::next(it); jt != fs.end(); ++jt)
                CHECK(BinPoly::gcd(it->second, jt->second) == BinPoly::one());
        CHECK(fs.size() == build_cosets(n).cosets.size());
    }
}

TEST_CASE("factor labels track cosets: M_i self-reciprocal iff coset reversible") {
    for (unsigned n : {7u, 9u, 15u, 21u, 63u, 65u, 73u}) {
        auto fs = factor_xn1(n);
        for (const auto& c : build_cosets(n).cosets)
            CHECK(fs.at(c.rep).is_self_reciprocal() == c.reversible);
    }
}

TEST_CASE("PolyField irreducibility search and big-degree factorization") {
    CHECK(PolyField::is_irreducible(P("x^2+x+1")));
    CHECK_FALSE(PolyField::is_irreducible(P("x^2+1")));
    CHECK(PolyField::is_irreducible(P("x^3+x+1")));
    CHECK_FALSE(PolyField::is_irreducible(P("x^4+x^2+1")));  // (x^2+x+1)^2

    PolyField f(23);  // ord_47(2) = 23, beyond no table limit but small
    CHECK(f.modulus().deg() == 23);
    CHECK(PolyField::is_irreducible(f.modulus()));

    // n = 95 needs GF(2^36): two cosets of size 36 among the primitive 95th
    // roots of unity
    auto f95 = factor_xn1(95);
    BinPoly prod = BinPoly::one();
    for (auto& [rep, p] : f95) prod = prod * p;
    CHECK(prod == BinPoly::xn_minus_one(95));
    CHECK(f95.at(1).deg() == 36);
    CHECK(f95.size() == build_cosets(95).cosets.size());
}

TEST_CASE("minimal polynomial degree equals coset size across paths") {
    for (unsigned n : {31u, 73u, 89u}) {  // table path
        auto fs = factor_xn1(n);
        for (const auto& c : build_cosets(n).cosets) CHECK(fs.at(c.rep).deg() == c.members.size());
    }
    for (unsigned n : {37u, 47u}) {  // big-field path (ord 36, 23)
        auto fs = factor_xn1(n);
        for (const auto& c : build_cosets(n).cosets) CHECK(fs.at(c.rep).deg() == c.members.size());
    }
}
