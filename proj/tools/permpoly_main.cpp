// Command-line front end: every subcommand parses arguments, calls the
// library, and prints one JSON (or csv/text) document.  Exit codes: 0 for
// success or a true verdict, 1 for a false mathematical verdict or a failed
// audit, 2 for usage and internal errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "permpoly/audits.hpp"
#include "permpoly/cache.hpp"
#include "permpoly/classify.hpp"
#include "permpoly/criteria.hpp"
#include "permpoly/families.hpp"
#include "permpoly/orthomorphism.hpp"
#include "permpoly/table_families.hpp"

using nlohmann::json;
using namespace permpoly;

namespace {

struct GlobalOpts {
    std::string format = "json";
    std::uint64_t seed = 0;
    unsigned jobs = 0;
    bool no_cache = false;
};

std::vector<Elem> parse_codes(const std::string& csv) {
    std::vector<Elem> out;
    std::string token;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!token.empty()) out.push_back(Elem(std::stoul(token)));
            token.clear();
        } else {
            token += ch;
        }
    }
    return out;
}

FieldPtr field_from(std::uint32_t q, const std::string& modulus_csv) {
    std::optional<std::vector<Elem>> modulus;
    if (!modulus_csv.empty()) modulus = parse_codes(modulus_csv);
    return make_field_from_order(q, std::move(modulus));
}

json field_json(const Field& F) {
    return {{"p", F.p()}, {"r", F.r()}, {"q", F.q()}, {"modulus", F.modulus()}};
}

void emit(const json& j, const GlobalOpts& opts) {
    if (opts.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (opts.format == "text") {
        std::function<void(const json&, const std::string&)> walk =
            [&](const json& node, const std::string& prefix) {
                if (node.is_object()) {
                    for (auto it = node.begin(); it != node.end(); ++it)
                        walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
                } else {
                    std::cout << prefix << ": " << node.dump() << "\n";
                }
            };
        walk(j, "");
        return;
    }
    if (opts.format == "csv") {
        // flat key,value rows; arrays of polynomials become one row each
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "polynomials" && it.value().is_array()) {
                for (const auto& poly : it.value()) {
                    std::cout << "polynomial";
                    for (const auto& c : poly) std::cout << "," << c;
                    std::cout << "\n";
                }
            } else {
                std::cout << it.key() << "," << it.value().dump() << "\n";
            }
        }
        return;
    }
    throw Error("unknown format " + opts.format);
}

json classification_json(const ClassificationResult& res, bool with_timing) {
    json j;
    j["schema"] = 1;
    j["field"] = field_json(*res.field);
    j["degree"] = res.degree;
    j["mode"] = res.mode;
    j["count"] = res.polynomials.size();
    j["search_space"] = res.search_space;
    j["polynomials"] = res.polynomials;
    if (with_timing) j["wall_seconds"] = res.wall_seconds;
    return j;
}

// Classification with the file cache in front, shared by classify, table
// verify and ortho classify.
ClassificationResult classify_cached(const FieldPtr& field, std::uint32_t degree,
                                     const std::string& mode, const GlobalOpts& opts) {
    ResultCache cache = ResultCache::from_env(!opts.no_cache);
    if (auto hit = cache.load(field, degree, mode, opts.seed)) return *hit;
    ClassificationResult res;
    if (mode == "normalized")
        res = classify_normalized(field, degree, Prefilter::none, opts.jobs);
    else if (mode == "all")
        res = classify_all_pps(field, degree, opts.jobs);
    else if (mode == "orthomorphism")
        res = classify_orthomorphisms(field, degree, opts.jobs);
    else
        throw Error("unknown mode " + mode);
    cache.store(res);
    return res;
}

json audit_json(const AuditResult& res, std::uint64_t seed) {
    json checks = json::array();
    for (const AuditCheck& c : res.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    return {{"schema", 1},
            {"audit", res.name},
            {"criterion_ref", res.criterion_ref},
            {"seed", seed},
            {"checks", checks},
            {"pass", res.pass()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for permutation polynomials over small finite fields"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--format", opts.format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", opts.seed, "Seed for randomized audits and cache checks");
    app.add_option("--jobs", opts.jobs, "Worker threads for searches (0 = all cores)");
    app.add_flag("--no-cache", opts.no_cache, "Bypass the result cache");

    // field
    std::uint32_t q = 0, degree = 0, max_degree = 6;
    std::string modulus_csv, poly_csv, criteria_csv = "all";
    auto* cmd_field = app.add_subcommand("field", "Construct a field and print its spec");
    cmd_field->add_option("--q", q, "Field order (prime power)")->required();
    cmd_field->add_option("--modulus", modulus_csv, "Modulus coefficients, ascending");

    // test
    auto* cmd_test = app.add_subcommand("test", "Run permutation criteria on a polynomial");
    cmd_test->add_option("--q", q, "Field order")->required();
    cmd_test->add_option("--poly", poly_csv, "Coefficient codes, ascending")->required();
    cmd_test->add_option("--modulus", modulus_csv, "Modulus coefficients, ascending");
    cmd_test->add_option("--criteria", criteria_csv,
                         "all or a comma list: brute,power-sum,hermite,raussnitz,"
                         "resultant,turnwald,moreno");

    // family
    std::string family_name, g_csv, coeffs_csv;
    std::uint64_t fam_n = 0, fam_h = 0, fam_s = 0;
    std::uint32_t fam_k = 0, fam_m = 0, base_q = 0;
    std::int64_t fam_a = 0;
    auto* cmd_family = app.add_subcommand("family", "Build and test a named family instance");
    cmd_family->add_option("--name", family_name,
                           "monomial, dickson, quadratic-binomial, m-binomial, "
                           "specific-class, all-extensions, p-polynomial, q-polynomial")
        ->required();
    cmd_family->add_option("--q", q, "Field order")->required();
    cmd_family->add_option("--modulus", modulus_csv, "Modulus coefficients");
    cmd_family->add_option("--n", fam_n, "Monomial exponent");
    cmd_family->add_option("--k", fam_k, "Dickson degree");
    cmd_family->add_option("--a", fam_a, "Family parameter (element code)");
    cmd_family->add_option("--m", fam_m, "Binomial divisor m");
    cmd_family->add_option("--exp", fam_h, "Product-family exponent h");
    cmd_family->add_option("--s", fam_s, "Product-family divisor s");
    cmd_family->add_option("--g", g_csv, "Product-family polynomial g, ascending codes");
    cmd_family->add_option("--poly", poly_csv, "Polynomial for shape-based families");
    cmd_family->add_option("--base-q", base_q, "Base field order for q-polynomial routes");
    cmd_family->add_option("--coeffs", coeffs_csv, "q-polynomial coefficients");

    // classify
    std::string mode = "normalized", prefilter = "none", out_file;
    auto* cmd_classify = app.add_subcommand("classify", "Exhaustive classification search");
    cmd_classify->add_option("--q", q, "Field order")->required();
    cmd_classify->add_option("--degree", degree, "Degree to classify")->required();
    cmd_classify->add_option("--modulus", modulus_csv, "Modulus coefficients");
    cmd_classify->add_option("--mode", mode, "normalized or all")
        ->check(CLI::IsMember({"normalized", "all"}));
    cmd_classify->add_option("--prefilter", prefilter, "none or hermite-partial")
        ->check(CLI::IsMember({"none", "hermite-partial"}));
    cmd_classify->add_option("--out", out_file, "Also write the result (with timing) here");

    // table
    auto* cmd_table = app.add_subcommand("table", "Normalized-table operations");
    cmd_table->require_subcommand(1);
    auto* cmd_table_verify =
        cmd_table->add_subcommand("verify", "Compare a search against the table rows");
    cmd_table_verify->add_option("--q", q, "Field order")->required();
    cmd_table_verify->add_option("--degree", degree, "Degree")->required();
    auto* cmd_table_rows = cmd_table->add_subcommand("rows", "List applicable rows");
    cmd_table_rows->add_option("--q", q, "Field order")->required();
    cmd_table_rows->add_option("--degree", degree, "Degree")->required();
    std::string row_id;
    auto* cmd_table_expand = cmd_table->add_subcommand("expand", "Expand one row");
    cmd_table_expand->add_option("--q", q, "Field order")->required();
    cmd_table_expand->add_option("--row", row_id, "Row id")->required();

    // ortho
    auto* cmd_ortho = app.add_subcommand("ortho", "Orthomorphism operations");
    cmd_ortho->require_subcommand(1);
    auto* cmd_ortho_test = cmd_ortho->add_subcommand("test", "Test one polynomial");
    cmd_ortho_test->add_option("--q", q, "Field order")->required();
    cmd_ortho_test->add_option("--poly", poly_csv, "Coefficient codes")->required();
    cmd_ortho_test->add_option("--modulus", modulus_csv, "Modulus coefficients");
    auto* cmd_ortho_classify =
        cmd_ortho->add_subcommand("classify", "Classify degree-n orthomorphisms");
    cmd_ortho_classify->add_option("--q", q, "Field order")->required();
    cmd_ortho_classify->add_option("--degree", degree, "Degree")->required();
    cmd_ortho_classify->add_option("--out", out_file, "Also write the result here");

    // audit
    std::string audit_name;
    auto* cmd_audit = app.add_subcommand("audit", "Run a named batch verification");
    cmd_audit->add_option("name", audit_name, "mullen, wilson, wan-bound, tables, ortho, "
                                              "nonexistence or criteria-agreement")
        ->required();
    cmd_audit->add_option("--q", q, "Field order, where the audit takes one");
    cmd_audit->add_option("--degree", degree, "Degree, where the audit takes one");
    cmd_audit->add_option("--max-degree", max_degree, "Top degree for sweeps");

    // cache
    auto* cmd_cache = app.add_subcommand("cache", "Result cache maintenance");
    cmd_cache->require_subcommand(1);
    auto* cmd_cache_info = cmd_cache->add_subcommand("info", "Show directory and entries");
    auto* cmd_cache_clear = cmd_cache->add_subcommand("clear", "Remove cached results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_field) {
            auto F = field_from(q, modulus_csv);
            json j{{"schema", 1}, {"field", field_json(*F)},
                   {"primitive_element", F->primitive_element()},
                   {"has_tables", F->has_tables()}};
            emit(j, opts);
            return 0;
        }

        if (*cmd_test) {
            auto F = field_from(q, modulus_csv);
            Poly f(F, parse_codes(poly_csv));
            std::set<std::string> which;
            if (criteria_csv != "all")
                for (const std::string& name : {criteria_csv}) {
                    std::string token;
                    for (char ch : name + ",") {
                        if (ch == ',') {
                            if (!token.empty()) which.insert(token);
                            token.clear();
                        } else
                            token += ch;
                    }
                }
            CriterionReport rep = run_criteria(f, which);
            json criteria = json::object();
            for (const auto& [name, outcome] : rep.per_criterion)
                criteria[name] = {{"verdict", outcome.verdict}, {"witness", outcome.witness}};
            json j{{"schema", 1},       {"field", field_json(*F)},
                   {"poly", f.coeffs()}, {"is_pp", rep.is_pp},
                   {"criteria", criteria}};
            if (rep.stats) {
                json stats{{"v", rep.stats->v}, {"n", rep.stats->n}};
                stats["u"] = rep.stats->u ? json(*rep.stats->u) : json();
                stats["w"] = rep.stats->w ? json(*rep.stats->w) : json();
                j["value_set"] = stats;
            }
            if (rep.wan)
                j["wan_bound"] = {{"v", rep.wan->v},
                                  {"bound", rep.wan->bound},
                                  {"satisfied", rep.wan->satisfied}};
            emit(j, opts);
            return rep.is_pp ? 0 : 1;
        }

        if (*cmd_family) {
            auto F = field_from(q, modulus_csv);
            json j{{"schema", 1}, {"family", family_name}, {"field", field_json(*F)}};
            bool criterion = false, brute = false;
            if (family_name == "monomial") {
                criterion = monomial_is_pp(fam_n, *F);
                Poly f = reduce_mod_xq_minus_x(Poly::monomial(F, std::size_t(fam_n)));
                brute = is_pp_bruteforce(f).is_pp;
                j["params"] = {{"n", fam_n}};
                j["poly"] = f.coeffs();
            } else if (family_name == "dickson") {
                Poly f = dickson_poly(F, fam_k, Elem(fam_a));
                criterion = dickson_is_pp(fam_k, Elem(fam_a), *F);
                brute = is_pp_bruteforce(f).is_pp;
                j["params"] = {{"k", fam_k}, {"a", fam_a}};
                j["poly"] = f.coeffs();
            } else if (family_name == "quadratic-binomial") {
                Poly f = quadratic_binomial_poly(F, Elem(fam_a));
                criterion = quadratic_binomial_is_pp(Elem(fam_a), *F);
                brute = is_pp_bruteforce(f).is_pp;
                j["params"] = {{"a", fam_a}};
                j["poly"] = f.coeffs();
            } else if (family_name == "m-binomial") {
                Poly f = m_binomial_poly(F, fam_m, Elem(fam_a));
                criterion = m_binomial_is_pp(fam_m, Elem(fam_a), *F);
                brute = is_pp_bruteforce(f).is_pp;
                j["params"] = {{"m", fam_m}, {"a", fam_a}};
                j["poly"] = f.coeffs();
            } else if (family_name == "specific-class") {
                auto f = specific_class_build(fam_h, fam_s, Poly(F, parse_codes(g_csv)));
                criterion = f.has_value();
                brute = f && is_pp_bruteforce(*f).is_pp;
                j["params"] = {{"h", fam_h}, {"s", fam_s}, {"g", parse_codes(g_csv)}};
                if (f) j["poly"] = f->coeffs();
            } else if (family_name == "all-extensions") {
                Poly f(F, parse_codes(poly_csv));
                auto form = all_extensions_form(f);
                criterion = form.matches;
                brute = form.matches && all_extensions_verify(f);
                j["params"] = {{"poly", f.coeffs()}};
                if (form.matches)
                    j["form"] = {{"a", form.a}, {"h", form.h}, {"b", form.b}};
            } else if (family_name == "p-polynomial") {
                Poly f(F, parse_codes(poly_csv));
                criterion = p_polynomial_is_pp(f);
                brute = is_pp_bruteforce(f).is_pp;
                j["params"] = {{"poly", f.coeffs()}};
            } else if (family_name == "q-polynomial") {
                auto base = make_field_from_order(base_q);
                auto coeffs = parse_codes(coeffs_csv);
                criterion = q_polynomial_is_pp_det(*base, *F, coeffs);
                Poly f = q_polynomial_realize(*base, F, coeffs);
                brute = !f.is_zero() && is_pp_bruteforce(f).is_pp;
                j["params"] = {{"base_q", base_q}, {"coeffs", coeffs}};
                j["poly"] = f.coeffs();
            } else {
                throw UnknownFamily("no family named " + family_name);
            }
            j["criterion_verdict"] = criterion;
            j["brute_force_verdict"] = brute;
            emit(j, opts);
            return criterion ? 0 : 1;
        }

        if (*cmd_classify) {
            auto F = field_from(q, modulus_csv);
            ClassificationResult res;
            if (prefilter == "hermite-partial") {
                // the prefilter is a correctness cross-check, so skip the cache
                res = classify_normalized(F, degree, Prefilter::hermite_partial, opts.jobs);
            } else {
                res = classify_cached(F, degree, mode, opts);
            }
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                out << ResultCache::to_json(res);
            }
            emit(classification_json(res, false), opts);
            return 0;
        }

        if (*cmd_table_verify) {
            auto F = make_field_from_order(q);
            auto res = classify_cached(F, degree, "normalized", opts);
            auto expansion = expand_table_union(F, degree);
            bool equal = expansion == res.polynomials;
            json j{{"schema", 1},
                   {"field", field_json(*F)},
                   {"degree", degree},
                   {"rows", table_rows_for(*F, degree)},
                   {"search_count", res.polynomials.size()},
                   {"expansion_count", expansion.size()},
                   {"equal", equal}};
            emit(j, opts);
            return equal ? 0 : 1;
        }
        if (*cmd_table_rows) {
            auto F = make_field_from_order(q);
            json rows = json::array();
            for (const auto& id : table_rows_for(*F, degree))
                rows.push_back({{"id", id}, {"description", table_row(id).description}});
            emit(json{{"schema", 1}, {"degree", degree}, {"rows", rows}}, opts);
            return 0;
        }
        if (*cmd_table_expand) {
            auto F = make_field_from_order(q);
            auto polys = expand_table_family(F, row_id);
            emit(json{{"schema", 1},
                      {"row", row_id},
                      {"count", polys.size()},
                      {"polynomials", polys}},
                 opts);
            return 0;
        }

        if (*cmd_ortho_test) {
            auto F = field_from(q, modulus_csv);
            Poly f(F, parse_codes(poly_csv));
            OrthoReport rep = orthomorphism_report(f);
            json j{{"schema", 1},
                   {"field", field_json(*F)},
                   {"poly", f.coeffs()},
                   {"is_pp", rep.is_pp},
                   {"shifted_is_pp", rep.shifted_is_pp},
                   {"is_orthomorphism", rep.is_orthomorphism},
                   {"is_complete_mapping", rep.is_complete_mapping},
                   {"reduced_degree", rep.reduced_degree}};
            emit(j, opts);
            return rep.is_orthomorphism ? 0 : 1;
        }
        if (*cmd_ortho_classify) {
            auto F = make_field_from_order(q);
            auto res = classify_cached(F, degree, "orthomorphism", opts);
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                out << ResultCache::to_json(res);
            }
            emit(classification_json(res, false), opts);
            return 0;
        }

        if (*cmd_audit) {
            AuditResult res = run_audit(audit_name, q == 0 ? 5 : q, degree == 0 ? 6 : degree,
                                        max_degree, opts.seed, opts.jobs);
            emit(audit_json(res, opts.seed), opts);
            return res.pass() ? 0 : 1;
        }

        if (*cmd_cache_info) {
            ResultCache cache = ResultCache::from_env();
            json entries = json::array();
            if (std::filesystem::exists(cache.dir()))
                for (const auto& e : std::filesystem::directory_iterator(cache.dir()))
                    entries.push_back(e.path().filename().string());
            std::sort(entries.begin(), entries.end());
            emit(json{{"schema", 1}, {"dir", cache.dir().string()}, {"entries", entries}},
                 opts);
            return 0;
        }
        if (*cmd_cache_clear) {
            ResultCache cache = ResultCache::from_env();
            cache.clear();
            emit(json{{"schema", 1}, {"dir", cache.dir().string()}, {"cleared", true}}, opts);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
