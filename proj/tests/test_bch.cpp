#include <catch2/catch_amalgamated.hpp>

#include "dnacodex/bch.hpp"

using namespace dnacodex;

namespace {
const BchBound& bound(const BchSpec& s, const std::string& name) {
    for (const auto& b : s.bounds)
        if (b.name == name) return b;
    throw std::runtime_error("missing bound " + name);
}
}

TEST_CASE("bch generator degrees at n = 63") {
    CHECK(bch_generator(63, 9).deg() == 24);   // Cl(1), Cl(3), Cl(5), Cl(7)
    CHECK(bch_generator(63, 11).deg() == 27);  // adds Cl(9), size 3
    CHECK(bch_generator(7, 2) == factor_xn1(7).at(1));
    CHECK_THROWS_AS(bch_generator(63, 1), DomainRefusal);
    CHECK_THROWS_AS(bch_generator(63, 64), DomainRefusal);
    CHECK_THROWS_AS(bch_generator(8, 3), DomainRefusal);
}

TEST_CASE("BCH(63,11,9)") {
    BchSpec s = bch_code(63, 11, 9);
    CHECK(s.g_delta0.deg() == 27);
    CHECK(s.g_delta1.deg() == 24);
    CHECK(s.code.log2_size() == 75);
    CHECK(s.cosets_delta0 == std::vector<unsigned>{1, 3, 5, 7, 9});
    CHECK(s.cosets_delta1 == std::vector<unsigned>{1, 3, 5, 7});
    CHECK(s.published_log2_size == 75u);
    CHECK_FALSE(s.published_size_mismatch);
    CHECK(bound(s, "lee_lower").value == 11);
    // n = 2^6-1 applies the primitive-length bounds
    CHECK(bound(s, "dh_upper").applies);
    CHECK(bound(s, "dh_upper").value == 17);
    CHECK(bound(s, "rank_lower").applies);
    CHECK(bound(s, "rank_lower").value == 63 - 6 * 4);
    CHECK(bound(s, "rank_exact").applies);  // delta1 = 9 < 2^3+3
    CHECK(bound(s, "rank_exact").value == 63 - 6 * 4);
    CHECK(s.code.rank() == 39);
}

TEST_CASE("BCH(65,11,9) is a DNA code with torsion distance 13") {
    BchSpec s = bch_dna(65, 11, 9);
    CHECK(s.code.log2_size() == 34);
    CHECK(s.g_delta0.deg() == 48);
    CHECK(s.g_delta1.deg() == 48);
    CHECK(s.code.is_free());
    CHECK(s.code.is_reverse_complement());
    BinaryCyclicCode tor = s.code.torsion_code();
    CHECK(tor.dim() == 17);
    CHECK(*tor.min_distance() == 13);
    auto dl = s.code.min_distance(Metric::lee);
    CHECK(dl.lower_bound() == 13);
    CHECK(dl.upper_bound() == 13);
    CHECK(s.published_log2_size == 34u);
    CHECK_FALSE(s.published_size_mismatch);
}

TEST_CASE("BCH(43,7,3) publishes a cardinality that disagrees with the formula") {
    BchSpec s = bch_code(43, 7, 3);
    CHECK(s.g_delta0.deg() == 28);
    CHECK(s.g_delta1.deg() == 14);
    CHECK(s.code.log2_size() == 44);
    REQUIRE(s.published_log2_size.has_value());
    CHECK(*s.published_log2_size == 72);
    CHECK(s.published_size_mismatch);  // surfaced, not reconciled
    // the DNA construction still applies: 2^7 = -1 mod 43
    BchSpec dna = bch_dna(43, 7, 3);
    CHECK(dna.code.is_reverse_complement());
    CHECK(bound(dna, "lee_lower").value == 6);
}

TEST_CASE("bch_dna refuses lengths without 2^i = -1") {
    CHECK_THROWS_AS(bch_dna(15, 5, 3), DomainRefusal);
    CHECK_THROWS_AS(bch_dna(7, 3, 3), DomainRefusal);
    CHECK_NOTHROW(bch_dna(33, 5, 3));  // n = 2^5+1
}

TEST_CASE("bch_dna outputs pass the brute-force closure check") {
    for (auto [n, d0, d1] : {std::tuple{9u, 3u, 3u}, {33u, 5u, 3u}, {65u, 11u, 9u}}) {
        BchSpec s = bch_dna(n, d0, d1);
        CHECK(s.code.is_reverse_complement());
        CHECK(closure_bruteforce_planes(s.code).rc_closed);
        if (s.code.log2_size() <= 16) CHECK(closure_bruteforce_words(s.code, 16).rc_closed);
    }
}

TEST_CASE("designed distance can be normalized to odd: g_2t = g_2t+1") {
    for (unsigned n = 3; n <= 201; n += 2) {
        auto factors = factor_xn1(n);
        auto t = build_cosets(n);
        for (unsigned delta = 2; delta + 1 <= std::min(31u, n); delta += 2) {
            auto even = detail::bch_generator_parts(t, factors, delta);
            auto odd = detail::bch_generator_parts(t, factors, delta + 1);
            CHECK(even.gen == odd.gen);
        }
    }
}

TEST_CASE("generator divisibility is monotone in delta") {
    for (unsigned n : {7u, 15u, 63u, 65u}) {
        BinPoly prev = BinPoly::one();
        for (unsigned delta = 2; delta <= std::min(n - 1, 21u); ++delta) {
            BinPoly g = bch_generator(n, delta);
            CHECK(prev.divides(g));
            prev = g;
        }
    }
}

TEST_CASE("lee lower bound holds on enumerable BCH codes") {
    struct Case {
        unsigned n, d0, d1;
    };
    for (Case cs : {Case{7, 3, 3}, Case{7, 3, 2}, Case{15, 5, 3}, Case{15, 7, 5}, Case{17, 5, 3}}) {
        BchSpec s = bch_code(cs.n, cs.d0, cs.d1);
        if (s.code.log2_size() > 22) continue;
        auto dl = s.code.min_distance(Metric::lee);
        REQUIRE(dl.value.has_value());
        CHECK(*dl.value >= static_cast<unsigned>(*bound(s, "lee_lower").value));
        const auto& hi = bound(s, "lee_upper");
        if (hi.applies) CHECK(*dl.value <= static_cast<unsigned>(*hi.value));
    }
}

TEST_CASE("precondition-gated bounds are omitted when the shape does not match") {
    BchSpec s = bch_code(65, 11, 9);  // 65 is not 2^m-1
    CHECK_FALSE(bound(s, "dh_upper").applies);
    CHECK_FALSE(bound(s, "rank_exact").applies);
    CHECK_FALSE(bound(s, "dh_exact_allones_delta").applies);
    CHECK_FALSE(bound(s, "dh_exact_divisor").applies);  // 9 does not divide 65
}

TEST_CASE("delta ordering enforced") {
    CHECK_THROWS_AS(bch_code(63, 9, 11), DomainRefusal);
    CHECK_NOTHROW(bch_code(63, 9, 9));
}
