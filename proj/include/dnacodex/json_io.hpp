#pragma once

#include <nlohmann/json.hpp>

#include "dnacodex/report.hpp"

namespace dnacodex {

inline constexpr const char* kToolVersion = "dnacodex 0.1.0";

using ojson = nlohmann::ordered_json;

inline ojson poly_json(const BinPoly& p) {
    return ojson{{"hex", p.to_hex()}, {"str", p.to_string()}};
}

inline ojson distance_json(const DistanceResult& d) {
    ojson j;
    if (d.degenerate) {
        j["value"] = nullptr;
        j["note"] = "no nonzero codewords";
    } else if (d.value) {
        j["value"] = *d.value;
    } else {
        j["interval"] = ojson::array({d.lower, d.upper});
    }
    j["method"] = d.method;
    return j;
}

inline ojson enumerator_json(const WeightEnumerator& we) {
    ojson j = ojson::object();
    for (auto& [w, c] : we.counts) j[std::to_string(w)] = c;
    return j;
}

inline ojson verdict_json(const Verdict& v) {
    return ojson{{"value", v.value}, {"provenance", v.provenance}};
}

inline ojson report_json(const CodeReport& r) {
    ojson j;
    j["n"] = r.n;
    j["f0"] = poly_json(r.f0);
    j["f1"] = poly_json(r.f1);
    j["log2_size"] = r.log2_size;
    j["rank"] = r.rank;
    j["free"] = r.free_code;
    j["dH"] = distance_json(r.dH);
    j["dL"] = distance_json(r.dL);
    j["dE"] = distance_json(r.dE);
    j["reversible"] = verdict_json(r.reversible);
    j["reverse_complement"] = verdict_json(r.reverse_complement);
    ojson gc;
    if (r.gc.fixed)
        gc["fixed"] = *r.gc.fixed;
    else
        gc["fixed"] = nullptr;
    if (r.gc.enumerator) gc["enumerator"] = enumerator_json(*r.gc.enumerator);
    j["gc"] = gc;
    ojson flags = ojson::array();
    if (r.degenerate_zero) flags.push_back("zero-code");
    if (r.degenerate_full) flags.push_back("full-space");
    j["degenerate_flags"] = flags;
    if (r.brute_force) {
        const BruteForceReport& b = *r.brute_force;
        ojson bj;
        bj["enumerated_count"] = b.enumerated_count;
        bj["count_matches_formula"] = b.count_matches_formula;
        bj["count_method"] = b.count_method;
        if (b.min_weights.hamming != ~0u) {
            bj["min_weight_hamming"] = b.min_weights.hamming;
            bj["min_weight_lee"] = b.min_weights.lee;
            bj["min_weight_euclidean"] = b.min_weights.euclidean;
        }
        bj["gc_histogram"] = [&] {
            ojson h = ojson::object();
            for (auto& [w, c] : b.gc_histogram) h[std::to_string(w)] = c;
            return h;
        }();
        bj["gc_fixed_strict"] = b.gc_fixed_strict;
        bj["gc_fixed_nonzero_residue"] = b.gc_fixed_nonzero_residue;
        if (b.gc_value) bj["gc_value"] = *b.gc_value;
        bj["rc_closed"] = b.closure.rc_closed;
        bj["rev_closed"] = b.closure.rev_closed;
        bj["closure_method"] = b.closure.method;
        if (b.pairwise) {
            bj["pairwise"] = ojson{{"hamming_distinct", b.pairwise->hamming_distinct},
                                   {"reverse", b.pairwise->reverse},
                                   {"reverse_complement", b.pairwise->reverse_complement}};
        }
        if (b.d) {
            bj["d"] = *b.d;
            bj["hamming_constraint"] = b.hamming_constraint;
            bj["reverse_constraint"] = b.reverse_constraint;
            bj["rc_constraint"] = b.rc_constraint;
        }
        if (b.degenerate) bj["degenerate"] = true;
        j["brute_force"] = bj;
    }
    return j;
}

inline ojson bch_json(const BchSpec& s, const CodeReport& r) {
    ojson j;
    j["n"] = s.n;
    j["delta0"] = s.delta0;
    j["delta1"] = s.delta1;
    j["g_delta0"] = poly_json(s.g_delta0);
    j["g_delta1"] = poly_json(s.g_delta1);
    j["cosets_delta0"] = s.cosets_delta0;
    j["cosets_delta1"] = s.cosets_delta1;
    j["dna_constructed"] = s.dna_constructed;
    ojson bounds = ojson::array();
    for (const auto& b : s.bounds) {
        ojson bj;
        bj["name"] = b.name;
        bj["statement"] = b.statement;
        bj["applies"] = b.applies;
        if (b.value) bj["value"] = *b.value;
        if (b.interpreted) bj["interpretation"] = "s taken as ord_n(2)";
        bounds.push_back(bj);
    }
    j["bounds"] = bounds;
    if (s.published_log2_size) {
        j["cardinality"] = ojson{{"log2_formula", r.log2_size},
                                 {"log2_published", *s.published_log2_size},
                                 {"published_mismatch", s.published_size_mismatch}};
    }
    j["report"] = report_json(r);
    return j;
}

inline ojson coset_table_json(const CosetTable& t) {
    ojson j;
    j["n"] = t.n;
    j["ord2"] = t.ord2;
    ojson cs = ojson::array();
    for (const auto& c : t.cosets)
        cs.push_back(ojson{{"rep", c.rep}, {"members", c.members}, {"reversible", c.reversible}});
    j["cosets"] = cs;
    return j;
}

inline ojson family_json(const FamilyCode& f, const CodeReport& r) {
    ojson j;
    j["family"] = family_name(f.family);
    j["m"] = f.m;
    j["predicted_log2_size"] = f.predicted_log2_size;
    if (f.predicted_gc_weight) j["predicted_gc_weight"] = *f.predicted_gc_weight;
    j["reverse_complement"] = f.rc_by_predicate;
    if (f.rm_generator) {
        j["rm_generator"] = poly_json(*f.rm_generator);
        j["rm_dimension"] = *f.rm_dimension;
    }
    j["report"] = report_json(r);
    return j;
}

}  // namespace dnacodex
