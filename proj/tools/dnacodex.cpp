// Command-line surface: construct cyclic codes over F2+uF2, factor x^n-1,
// list cyclotomic cosets, build the BCH and family constructions, verify the
// DNA-code constraints by brute force, and export codebooks as FASTA.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dnacodex/json_io.hpp"

using namespace dnacodex;

namespace {

struct GlobalOpts {
    unsigned budget = kDefaultBudget;
    unsigned threads = 0;
    std::string out;
    std::string format = "json";

    std::ostream& stream(std::ofstream& file) const {
        if (out.empty()) return std::cout;
        file.open(out);
        if (!file) throw DomainRefusal("cannot open output file: " + out);
        return file;
    }
};

// flat "path = value" rendering of a report, one line per leaf
void flatten(std::ostream& os, const ojson& j, const std::string& prefix) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) flatten(os, v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array()) {
        size_t i = 0;
        for (auto& v : j) flatten(os, v, prefix + "[" + std::to_string(i++) + "]");
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

// flag > DNACODEX_BUDGET > built-in default
unsigned env_budget() {
    const char* env = std::getenv("DNACODEX_BUDGET");
    return env ? static_cast<unsigned>(std::atoi(env)) : kDefaultBudget;
}

void add_common(CLI::App* cmd, GlobalOpts& g) {
    g.budget = env_budget();
    cmd->add_option("--budget", g.budget, "log2 enumeration budget")->check(CLI::Range(1u, 30u));
    cmd->add_option("--threads", g.threads, "worker threads (0 = all cores)");
    cmd->add_option("--out", g.out, "write output to this file instead of stdout");
    cmd->add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "table"}));
}

ojson envelope(ojson config, const GlobalOpts& g, ojson payload) {
    config["budget"] = g.budget;
    config["threads"] = g.threads;
    config["format"] = g.format;
    config["out"] = g.out;
    ojson j;
    j["config"] = std::move(config);
    j["provenance"] = ojson{{"tool", kToolVersion}};
    j["result"] = std::move(payload);
    return j;
}

void emit(const GlobalOpts& g, const ojson& j) {
    std::ofstream file;
    std::ostream& os = g.stream(file);
    if (g.format == "table")
        flatten(os, j, "");
    else
        os << j.dump(2) << "\n";
}

void export_fasta(const GlobalOpts& g, const CyclicCodeR& code, std::optional<unsigned> gc_filter) {
    std::ofstream file;
    std::ostream& os = g.stream(file);
    CyclicCodeR::Stream s = code.enumerate(g.budget);
    RingWord w;
    uint64_t index = 0;
    while (s.next(w)) {
        if (!gc_filter || gc_weight(w) == *gc_filter) write_fasta_record(os, index, w);
        ++index;
    }
}

CyclicCodeR parse_code_args(unsigned n, const std::string& f0s, const std::string& f1s) {
    BinPoly f0 = BinPoly::parse(f0s);
    BinPoly f1 = f1s.empty() ? f0 : BinPoly::parse(f1s);
    return CyclicCodeR(n, f0, f1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic DNA codes over the four-element chain ring F2+uF2"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("DNACODEX_BUDGET")) {
        int v = std::atoi(env);
        if (v < 1 || v > 30) {
            std::cerr << "DNACODEX_BUDGET must be in [1,30]\n";
            return 2;
        }
    }

    // factor
    auto* cmd_factor = app.add_subcommand("factor", "factor x^n-1 over GF(2) by cyclotomic coset");
    unsigned factor_n = 0;
    GlobalOpts factor_g;
    cmd_factor->add_option("--n", factor_n, "odd length")->required();
    add_common(cmd_factor, factor_g);

    // cosets
    auto* cmd_cosets = app.add_subcommand("cosets", "2-cyclotomic cosets modulo n");
    unsigned cosets_n = 0;
    GlobalOpts cosets_g;
    cmd_cosets->add_option("--n", cosets_n, "odd modulus")->required();
    add_common(cmd_cosets, cosets_g);

    // code
    auto* cmd_code = app.add_subcommand("code", "analyze a custom code <f0 | u f1>");
    unsigned code_n = 0;
    std::string code_f0, code_f1;
    bool code_bf = false;
    std::optional<unsigned> code_d;
    GlobalOpts code_g;
    cmd_code->add_option("--n", code_n, "odd length")->required();
    cmd_code->add_option("--f0", code_f0, "generator f0 (symbolic \"x^3+x+1\" or hex \"0b\")")->required();
    cmd_code->add_option("--f1", code_f1, "generator f1 (defaults to f0, a free code)");
    cmd_code->add_flag("--brute-force", code_bf, "run the exhaustive constraint verifier");
    cmd_code->add_option("--d", code_d, "distance threshold for the constraint verdicts");
    add_common(cmd_code, code_g);

    // bch
    auto* cmd_bch = app.add_subcommand("bch", "BCH code over R with designed distances (delta0, delta1)");
    unsigned bch_n = 0, bch_d0 = 0, bch_d1 = 0;
    bool bch_dna_flag = false;
    std::string bch_export;
    GlobalOpts bch_g;
    cmd_bch->add_option("--n", bch_n, "odd length")->required();
    cmd_bch->add_option("--d0", bch_d0, "designed distance delta0")->required();
    cmd_bch->add_option("--d1", bch_d1, "designed distance delta1")->required();
    cmd_bch->add_flag("--dna", bch_dna_flag, "require the reverse-complement construction (2^i = -1 mod n)");
    cmd_bch->add_option("--export", bch_export, "export codebook format (fasta)");
    add_common(cmd_bch, bch_g);

    // family
    auto* cmd_family = app.add_subcommand("family", "infinite DNA-code families");
    std::string family_kind;
    unsigned family_m = 0;
    std::string family_export;
    GlobalOpts family_g;
    cmd_family->add_option("kind", family_kind, "simplex | zetterberg | rm")->required();
    cmd_family->add_option("--m", family_m, "family parameter m")->required();
    cmd_family->add_option("--export", family_export, "export codebook format (fasta)");
    add_common(cmd_family, family_g);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "brute-force constraint verification of <f0 | u f1>");
    unsigned verify_n = 0;
    std::string verify_f0, verify_f1;
    std::optional<unsigned> verify_d;
    GlobalOpts verify_g;
    cmd_verify->add_option("--n", verify_n, "odd length")->required();
    cmd_verify->add_option("--f0", verify_f0, "generator f0")->required();
    cmd_verify->add_option("--f1", verify_f1, "generator f1 (defaults to f0)");
    cmd_verify->add_option("--d", verify_d, "distance threshold");
    add_common(cmd_verify, verify_g);

    // export
    auto* cmd_export = app.add_subcommand("export", "write the codebook of <f0 | u f1> as FASTA");
    unsigned export_n = 0;
    std::string export_f0, export_f1;
    std::optional<unsigned> export_gc;
    GlobalOpts export_g;
    cmd_export->add_option("--n", export_n, "odd length")->required();
    cmd_export->add_option("--f0", export_f0, "generator f0")->required();
    cmd_export->add_option("--f1", export_f1, "generator f1 (defaults to f0)");
    cmd_export->add_option("--gc", export_gc, "only export codewords with this GC weight");
    add_common(cmd_export, export_g);

    try {
        app.parse(argc, argv);

        if (*cmd_factor) {
            auto factors = factor_xn1(factor_n);
            ojson fl = ojson::array();
            BinPoly prod = BinPoly::one();
            for (auto& [rep, f] : factors) {
                ojson fj = poly_json(f);
                fj["coset_rep"] = rep;
                fj["degree"] = f.deg();
                fl.push_back(fj);
                prod = prod * f;
            }
            ojson payload;
            payload["n"] = factor_n;
            payload["count"] = factors.size();
            payload["factors"] = fl;
            payload["product_is_xn_minus_1"] = prod == BinPoly::xn_minus_one(factor_n);
            emit(factor_g, envelope(ojson{{"subcommand", "factor"}, {"n", factor_n}}, factor_g, payload));
        } else if (*cmd_cosets) {
            emit(cosets_g, envelope(ojson{{"subcommand", "cosets"}, {"n", cosets_n}}, cosets_g,
                                    coset_table_json(build_cosets(cosets_n))));
        } else if (*cmd_code) {
            CyclicCodeR c = parse_code_args(code_n, code_f0, code_f1);
            CodeReport r = assemble_report(c, code_g.budget, code_g.threads, code_bf, code_d);
            ojson cfg{{"subcommand", "code"}, {"n", code_n}, {"f0", code_f0}, {"f1", code_f1}};
            if (code_d) cfg["d"] = *code_d;
            cfg["brute_force"] = code_bf;
            emit(code_g, envelope(cfg, code_g, report_json(r)));
        } else if (*cmd_bch) {
            BchSpec spec = bch_dna_flag ? bch_dna(bch_n, bch_d0, bch_d1, bch_g.budget, bch_g.threads)
                                        : bch_code(bch_n, bch_d0, bch_d1, bch_g.budget, bch_g.threads);
            if (!bch_export.empty()) {
                if (bch_export != "fasta") throw DomainRefusal("unknown export format: " + bch_export);
                export_fasta(bch_g, spec.code, std::nullopt);
            } else {
                CodeReport r = assemble_report(spec.code, bch_g.budget, bch_g.threads);
                ojson cfg{{"subcommand", "bch"}, {"n", bch_n}, {"d0", bch_d0},
                          {"d1", bch_d1},        {"dna", bch_dna_flag}};
                emit(bch_g, envelope(cfg, bch_g, bch_json(spec, r)));
            }
        } else if (*cmd_family) {
            FamilyCode fc = [&] {
                if (family_kind == "simplex") return simplex_dna(family_m, family_g.budget);
                if (family_kind == "zetterberg") return zetterberg_dna(family_m, family_g.budget);
                if (family_kind == "rm") return rm_dna(family_m, family_g.budget);
                throw DomainRefusal("unknown family: " + family_kind + " (expected simplex, zetterberg or rm)");
            }();
            if (!family_export.empty()) {
                if (family_export != "fasta") throw DomainRefusal("unknown export format: " + family_export);
                export_fasta(family_g, fc.code, std::nullopt);
            } else {
                CodeReport r = assemble_report(fc.code, family_g.budget, family_g.threads);
                ojson cfg{{"subcommand", "family"}, {"kind", family_kind}, {"m", family_m}};
                ojson payload = family_json(fc, r);
                if (family_kind == "zetterberg") {
                    auto c0 = zetterberg_c0_params(family_m, family_g.budget, family_g.threads);
                    ojson zj;
                    zj["c0_dimension"] = c0.c0_dimension;
                    zj["c0_enumerator"] = enumerator_json(c0.c0_enumerator);
                    zj["cz_dual_enumerator"] = enumerator_json(c0.cz_dual_enumerator);
                    zj["dz_dual"] = c0.dz_dual;
                    zj["weights_symmetric"] = c0.weights_symmetric;
                    zj["dual_weights_even"] = c0.dual_weights_even;
                    zj["dual_counts_divisible_by_n"] = c0.dual_counts_divisible;
                    zj["distance_bound_holds"] = c0.distance_bound_holds;
                    payload["c0"] = zj;
                }
                emit(family_g, envelope(cfg, family_g, payload));
            }
        } else if (*cmd_verify) {
            CyclicCodeR c = parse_code_args(verify_n, verify_f0, verify_f1);
            CodeReport r = assemble_report(c, verify_g.budget, verify_g.threads, true, verify_d);
            ojson cfg{{"subcommand", "verify"}, {"n", verify_n}, {"f0", verify_f0}, {"f1", verify_f1}};
            if (verify_d) cfg["d"] = *verify_d;
            emit(verify_g, envelope(cfg, verify_g, report_json(r)));
        } else if (*cmd_export) {
            CyclicCodeR c = parse_code_args(export_n, export_f0, export_f1);
            export_fasta(export_g, c, export_gc);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const DomainRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
