#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dnacodex/families.hpp"
#include "dnacodex/report.hpp"

using namespace dnacodex;

namespace {
BinPoly P(const std::string& s) { return BinPoly::parse(s); }
}

TEST_CASE("simplex family parameters") {
    for (unsigned m = 2; m <= 6; ++m) {
        FamilyCode fc = simplex_dna(m);
        unsigned n = (1u << m) - 1;
        CHECK(fc.code.n() == n);
        CHECK(fc.code.is_free());
        CHECK(fc.code.log2_size() == 2 * m);  // 4^m codewords
        CHECK(fc.predicted_log2_size == 2 * m);
        CHECK(fc.predicted_gc_weight == (1u << (m - 1)));

        // torsion is a one-weight [2^m-1, m, 2^(m-1)] code
        BinaryCyclicCode tor = fc.code.torsion_code();
        CHECK(tor.dim() == m);
        auto we = tor.weight_enumerator();
        CHECK(we.counts ==
              std::map<unsigned, uint64_t>{{0, 1}, {1u << (m - 1), (uint64_t{1} << m) - 1}});
    }
    CHECK_THROWS_AS(simplex_dna(1), DomainRefusal);
    CHECK_THROWS_AS(simplex_dna(13), DomainRefusal);
}

TEST_CASE("simplex m=4: 256 codewords, GC weight 8 off the all-A/T subcode") {
    FamilyCode fc = simplex_dna(4);
    auto rep = verify_constraints_bruteforce(fc.code);
    CHECK(rep.enumerated_count == 256);
    CHECK(rep.gc_fixed_nonzero_residue);
    CHECK(rep.gc_value == 8u);
    // 2^m residue-zero words carry GC weight 0, the rest sit at 8
    CHECK(rep.gc_histogram == std::map<unsigned, uint64_t>{{0, 16}, {8, 240}});
    // the simplex construction is GC-constant but not reverse-complement here
    CHECK_FALSE(fc.rc_by_predicate);
    CHECK(closure_bruteforce_planes(fc.code).rc_closed == fc.rc_by_predicate);
}

TEST_CASE("simplex m=2 direct enumeration") {
    FamilyCode fc = simplex_dna(2);
    CHECK(fc.code.n() == 3);
    auto rep = verify_constraints_bruteforce(fc.code);
    CHECK(rep.enumerated_count == 16);
    CHECK(rep.gc_value == 2u);
}

TEST_CASE("zetterberg family construction") {
    FamilyCode fc = zetterberg_dna(3);
    CHECK(fc.code.n() == 9);
    CHECK(fc.code.f1() == P("x^2+x+1"));
    CHECK(fc.code.log2_size() == 14);  // 2^(2(2m+1))
    CHECK(fc.predicted_log2_size == 14);
    CHECK(fc.rc_by_predicate);
    CHECK(fc.code.is_reverse_complement());

    FamilyCode fc4 = zetterberg_dna(4);
    CHECK(fc4.code.n() == 17);
    CHECK(fc4.code.log2_size() == 18);
    CHECK(fc4.rc_by_predicate);

    CHECK_THROWS_AS(zetterberg_dna(2), DomainRefusal);  // f1 degenerates to 1
    CHECK_THROWS_AS(zetterberg_dna(11), DomainRefusal);
}

TEST_CASE("zetterberg enumerated cardinality matches 2^(2(2m+1)) for m = 3, 4") {
    for (unsigned m : {3u, 4u}) {
        FamilyCode fc = zetterberg_dna(m);
        auto rep = verify_constraints_bruteforce(fc.code, std::nullopt, 20);
        CHECK(rep.enumerated_count == uint64_t{1} << (2 * (2 * m + 1)));
        CHECK(rep.count_matches_formula);
        CHECK(rep.closure.rc_closed);
    }
}

TEST_CASE("zetterberg M_1 is self-reciprocal for every supported m") {
    for (unsigned m = 3; m <= 10; ++m) {
        unsigned n = (1u << m) + 1;
        CHECK(ord2(n) == 2 * m);
        auto factors = factor_xn1(n);
        CHECK(factors.at(1).deg() == 2 * m);
        CHECK(factors.at(1).is_self_reciprocal());
        BinPoly f1 = detail::zetterberg_f1(m);
        CHECK(f1.is_self_reciprocal());
    }
}

TEST_CASE("zetterberg C_0 report, m = 3 frozen enumerator") {
    ZetterbergC0Report rep = zetterberg_c0_params(3);
    CHECK(rep.c0_dimension == 7);
    CHECK(rep.weights_symmetric);
    CHECK(rep.dual_weights_even);
    CHECK(rep.dual_counts_divisible);
    CHECK(rep.distance_bound_holds);
    CHECK(rep.dz_dual == 2);
    CHECK(rep.cz_dual_enumerator.counts ==
          std::map<unsigned, uint64_t>{{0, 1}, {2, 9}, {4, 27}, {6, 27}});
    CHECK(rep.c0_enumerator.counts ==
          std::map<unsigned, uint64_t>{{0, 1}, {2, 9}, {3, 27}, {4, 27}, {5, 27}, {6, 27}, {7, 9}, {9, 1}});
}

TEST_CASE("zetterberg C_0 enumerator has the complement-pair shape") {
    for (unsigned m : {3u, 4u}) {
        ZetterbergC0Report rep = zetterberg_c0_params(m);
        unsigned n = rep.n;
        // C_0 counts = sum over dual weights 2i of a_2i (x^2i + x^(n-2i))
        std::map<unsigned, uint64_t> expect;
        for (auto& [w, cnt] : rep.cz_dual_enumerator.counts) {
            expect[w] += cnt;
            expect[n - w] += cnt;
        }
        CHECK(rep.c0_enumerator.counts == expect);
    }
}

TEST_CASE("rm star generator dimensions") {
    CHECK(rm_star_generator(4) == factor_xn1(15).at(1));  // generator is M_1 at m = 4
    CHECK(15 - rm_star_generator(4).deg() == 11);
    CHECK(31 - rm_star_generator(5).deg() == 16);
    CHECK(63 - rm_star_generator(6).deg() == 22);
    CHECK_THROWS_AS(rm_star_generator(3), DomainRefusal);
}

TEST_CASE("rm dna construction at m = 6") {
    FamilyCode fc = rm_dna(6);
    auto factors = factor_xn1(63);
    CHECK(fc.code.f1() == factors.at(7) * factors.at(21));
    CHECK(fc.code.is_free());
    CHECK(fc.rc_by_predicate);
    CHECK(fc.code.is_reverse_complement());
    REQUIRE(fc.rm_generator.has_value());
    CHECK(fc.rm_generator->divides(BinPoly::xn_minus_one(63)));
    CHECK(fc.code.f1().divides(*fc.rm_generator));  // RM*(2,6) is a subcode of <g2>
    CHECK(*fc.rm_dimension == 22);

    // the planes have dimension 55, so exhaustive closure is out of reach;
    // sample codewords and check rc membership directly
    std::mt19937 rng(4242);
    auto random_multiple = [&](const BinPoly& g, unsigned n) {
        BinPoly q;
        for (unsigned i = 0; i + g.deg() < n; ++i)
            if (rng() & 1) q.flip(i);
        return q * g;
    };
    for (int i = 0; i < 2000; ++i) {
        RingWord w(63, random_multiple(fc.code.f0(), 63), random_multiple(fc.code.f1(), 63));
        REQUIRE(fc.code.contains(w));
        CHECK(fc.code.contains(reverse_complement(w)));
        CHECK(fc.code.contains(reverse_word(w)));
    }
}

TEST_CASE("rm dna refusals") {
    CHECK_THROWS_AS(rm_dna(5), DomainRefusal);  // odd m
    CHECK_THROWS_AS(rm_dna(4), DomainRefusal);  // no self-reciprocal factor divides g
    CHECK_THROWS_AS(rm_dna(7), DomainRefusal);
}

TEST_CASE("rm dna works at m = 8") {
    FamilyCode fc = rm_dna(8);
    CHECK(fc.code.n() == 255);
    CHECK(fc.rc_by_predicate);
    CHECK(fc.code.f1().is_self_reciprocal());
}

TEST_CASE("family reports carry fixed GC for the simplex") {
    FamilyCode fc = simplex_dna(5);
    CodeReport r = assemble_report(fc.code);
    REQUIRE(r.gc.fixed.has_value());
    CHECK(*r.gc.fixed == 16);
    REQUIRE(r.gc.enumerator.has_value());
    CHECK(r.gc.enumerator->counts.at(16) == 31);
}
