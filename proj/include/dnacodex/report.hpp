#pragma once

#include <optional>
#include <string>

#include "dnacodex/bch.hpp"
#include "dnacodex/cyclic_code.hpp"
#include "dnacodex/families.hpp"

namespace dnacodex {

// Verdict with the route that produced it. When both routes ran they must
// agree; assemble_report throws if a theorem and its brute-force check ever
// disagree, because that would falsify the theorem the code relies on.
struct Verdict {
    bool value = false;
    std::string provenance;  // "theorem" | "brute-force" | "both"
};

struct GcSection {
    std::optional<unsigned> fixed;   // shared GC weight of nonzero-residue codewords
    std::optional<WeightEnumerator> enumerator;
};

struct CodeReport {
    unsigned n = 0;
    BinPoly f0, f1;
    unsigned log2_size = 0, rank = 0;
    bool free_code = false;
    bool degenerate_zero = false, degenerate_full = false;

    DistanceResult dH, dL, dE;
    Verdict reversible, reverse_complement;
    GcSection gc;

    std::optional<BruteForceReport> brute_force;
};

// budget-aware report: theorem predicates always run; the brute-force pass
// runs when requested and the code fits the budget
inline CodeReport assemble_report(const CyclicCodeR& c, unsigned budget = kDefaultBudget,
                                  unsigned threads = 0, bool want_bruteforce = false,
                                  std::optional<unsigned> d = std::nullopt) {
    CodeReport r;
    r.n = c.n();
    r.f0 = c.f0();
    r.f1 = c.f1();
    r.log2_size = c.log2_size();
    r.rank = c.rank();
    r.free_code = c.is_free();
    r.degenerate_zero = c.is_zero_code();
    r.degenerate_full = c.is_full_space();

    r.dH = c.min_distance(Metric::hamming, budget, threads);
    r.dL = c.min_distance(Metric::lee, budget, threads);
    r.dE = c.min_distance(Metric::euclidean, budget, threads);

    r.reversible = {c.is_reversible(), "theorem"};
    r.reverse_complement = {c.is_reverse_complement(), "theorem"};

    if (c.torsion_code().dim() <= budget) r.gc.enumerator = c.gc_weight_enumerator(budget, threads);
    if (c.residue_code().dim() <= budget) {
        // codewords with nonzero residue have GC weight equal to the weight
        // of that residue word; one shared nonzero residue weight means a
        // fixed GC content outside the all-A/T subcode
        auto counts = c.residue_code().weight_enumerator(budget, threads).counts;
        counts.erase(0u);
        if (counts.size() == 1) r.gc.fixed = counts.begin()->first;
    }

    if (want_bruteforce && c.log2_size() <= budget) {
        r.brute_force = verify_constraints_bruteforce(c, d, budget, threads);
        bool rc_bf = r.brute_force->closure.rc_closed;
        bool rev_bf = r.brute_force->closure.rev_closed;
        if (rc_bf != r.reverse_complement.value || rev_bf != r.reversible.value)
            throw std::logic_error("brute-force closure disagrees with the theorem predicate");
        r.reversible.provenance = "both";
        r.reverse_complement.provenance = "both";
    }
    return r;
}

}  // namespace dnacodex
