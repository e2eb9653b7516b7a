#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pctk/demazure.hpp"
#include "pctk/enumeration.hpp"
#include "pctk/format.hpp"
#include "pctk/verify.hpp"
#include "pctk/witness.hpp"

namespace {

using namespace pctk;

std::array<int, 3> parse_sigma(const std::string& s) {
    std::array<int, 3> sigma{};
    std::string digits;
    for (char ch : s)
        if (ch != ',' && ch != ' ') digits += ch;
    if (digits.size() != 3) throw input_error("sigma must name a permutation of 1,2,3");
    std::array<bool, 3> seen{};
    for (int i = 0; i < 3; ++i) {
        int v = digits[i] - '0';
        if (v < 1 || v > 3 || seen[v - 1])
            throw input_error("sigma must name a permutation of 1,2,3");
        seen[v - 1] = true;
        sigma[i] = v;
    }
    return sigma;
}

std::string read_stream_or_file(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

void emit_tableau(const Tableau& t, bool json) {
    if (json)
        std::cout << tableau_to_json(t) << "\n";
    else
        std::cout << to_grid(t);
}

nlohmann::ordered_json nested(const std::string& dumped) {
    return nlohmann::ordered_json::parse(dumped);
}

nlohmann::ordered_json witness_json(const Witness& w) {
    nlohmann::ordered_json j;
    j["h"] = w.h;
    j["g"] = w.g;
    j["a"] = w.a;
    j["b"] = w.b;
    j["c"] = w.c;
    j["d"] = w.d;
    j["chi"] = nested(rtuple_to_json(w.chi));
    j["omega"] = nested(rtuple_to_json(w.omega));
    j["chi_bar"] = nested(rtuple_to_json(w.chi_bar));
    j["omega_bar"] = nested(rtuple_to_json(w.omega_bar));
    j["upper"] = nested(tableau_to_json(w.upper));
    j["lower"] = nested(tableau_to_json(w.lower));
    j["interior"] = nested(tableau_to_json(w.interior));
    auto cells = nlohmann::ordered_json::array();
    for (auto [col, row] : w.cells) cells.push_back({col, row});
    j["cells"] = cells;
    j["ratio"] = w.ratio.str();
    return j;
}

void print_witness_text(const Witness& w) {
    std::cout << "carrels: h=" << w.h << " g=" << w.g << "\n";
    std::cout << "positions: a=" << w.a << " b=" << w.b << " c=" << w.c
              << " d=" << w.d << "\n";
    std::cout << "chi       = " << to_text(w.chi) << "\n";
    std::cout << "omega     = " << to_text(w.omega) << "\n";
    std::cout << "chi_bar   = " << to_text(w.chi_bar) << "\n";
    std::cout << "omega_bar = " << to_text(w.omega_bar) << "\n";
    std::cout << "upper key:\n" << to_grid(w.upper);
    std::cout << "lower key:\n" << to_grid(w.lower);
    std::cout << "interior point:\n" << to_grid(w.interior);
    std::cout << "cells:";
    for (auto [col, row] : w.cells) std::cout << " (" << col << "," << row << ")";
    std::cout << "\n";
    std::cout << "ratio = " << w.ratio.str() << "\n";
}

void print_convexity(const ConvexityResult& res, bool json) {
    if (json) {
        nlohmann::ordered_json j;
        j["status"] = res.label();
        j["exact"] = res.exact;
        if (res.certificate)
            j["certificate"] = nested(tableau_to_json(*res.certificate));
        else
            j["certificate"] = nullptr;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << res.label() << "\n";
        if (res.certificate) {
            std::cout << "certificate:\n";
            std::cout << to_grid(*res.certificate);
        }
    }
}

const char* status_name(SuiteStatus st) {
    switch (st) {
        case SuiteStatus::pass: return "PASS";
        case SuiteStatus::fail: return "FAIL";
        default: return "SKIP";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"parabolic Catalan combinatorics toolkit"};
    app.require_subcommand(1);

    int n = 0;
    std::string rstr;
    std::string kind;
    std::string sigma_str;
    std::string seq;
    int terms = 0;
    std::string lambda_str;
    std::string perm_str;
    std::string alpha_str;
    std::string input_path = "-";
    int n_max = 0;
    std::string theorem;
    bool json = false;
    bool use_formula = false;
    bool mode_set = false, mode_poly = false, mode_conv = false, mode_wit = false;

    auto* c_count = app.add_subcommand(
        "count", "number of avoiding permutations for one divider set");
    c_count->add_option("--n", n, "tuple length")->required();
    c_count->add_option("--r", rstr, "divider positions, e.g. \"1,3\"");
    c_count->add_flag("--json", json, "emit JSON");

    auto* c_total = app.add_subcommand(
        "count-total", "number of avoiding permutations summed over divider sets");
    c_total->add_option("--n", n, "tuple length")->required();
    c_total->add_flag("--formula", use_formula,
                      "evaluate the alternating closed form instead of enumerating");
    c_total->add_flag("--json", json, "emit JSON");

    auto* c_list = app.add_subcommand("list", "enumerate a family, one per line");
    c_list->add_option("kind", kind, "r312|gapless|chains|gchains|shapes|opart")
        ->required()
        ->check(CLI::IsMember(
            {"r312", "gapless", "chains", "gchains", "shapes", "opart"}));
    c_list->add_option("--n", n, "tuple length")->required();
    auto* list_r = c_list->add_option("--r", rstr, "divider positions");
    auto* list_sigma =
        c_list->add_option("--sigma", sigma_str, "pattern for opart, e.g. 312");
    c_list->add_flag("--json", json, "emit JSON lines");

    auto* c_oeis = app.add_subcommand("oeis", "prefix of a catalogued sequence");
    c_oeis->add_option("--seq", seq, "a220097|a226316")
        ->required()
        ->check(CLI::IsMember({"a220097", "a226316"}));
    c_oeis->add_option("--terms", terms, "how many leading terms")->required();
    c_oeis->add_flag("--json", json, "emit JSON");

    auto* c_key = app.add_subcommand("key", "key tableau of a permutation");
    c_key->add_option("--lambda", lambda_str, "partition, e.g. 2,1,0")->required();
    c_key->add_option("--perm", perm_str, "permutation, e.g. \"3;1;2\"")->required();
    c_key->add_flag("--json", json, "emit JSON");

    auto* c_scan = app.add_subcommand("scan", "scanning tableau of a tableau");
    c_scan->add_option("input", input_path, "tableau JSON file, or - for stdin");
    c_scan->add_flag("--json", json, "emit JSON");

    auto* c_rem = app.add_subcommand(
        "rowendmax", "entrywise-maximal tableau with the given row end list");
    c_rem->add_option("--lambda", lambda_str, "partition, e.g. 2,1,0")->required();
    c_rem->add_option("--alpha", alpha_str, "row end list, e.g. \"2;3;3\"")->required();
    c_rem->add_flag("--json", json, "emit JSON");

    auto* c_dem = app.add_subcommand("demazure",
                                     "tableau set of a permutation and its reports");
    c_dem->add_option("--lambda", lambda_str, "partition, e.g. 2,1,0")->required();
    c_dem->add_option("--perm", perm_str, "permutation, e.g. \"3;1;2\"")->required();
    auto* modes = c_dem->add_option_group("mode", "what to report (default: --set)");
    modes->add_flag("--set", mode_set, "list the member tableaux");
    modes->add_flag("--poly", mode_poly, "weight polynomial");
    modes->add_flag("--convexity", mode_conv, "convexity status");
    modes->add_flag("--witness", mode_wit, "non-convexity certificate");
    modes->require_option(0, 1);
    c_dem->add_flag("--json", json, "emit JSON");

    auto* c_conv = app.add_subcommand("convexity",
                                      "convexity status of a permutation's set");
    c_conv->add_option("--lambda", lambda_str, "partition, e.g. 2,1,0")->required();
    c_conv->add_option("--perm", perm_str, "permutation, e.g. \"3;1;2\"")->required();
    c_conv->add_flag("--json", json, "emit JSON");

    auto* c_wit = app.add_subcommand("witness",
                                     "non-convexity certificate of a containing permutation");
    c_wit->add_option("--lambda", lambda_str, "partition, e.g. 2,1,0")->required();
    c_wit->add_option("--perm", perm_str, "permutation, e.g. \"3;1;2\"")->required();
    c_wit->add_flag("--json", json, "emit JSON");

    auto* c_verify = app.add_subcommand("verify", "run the exhaustive property suites");
    c_verify->add_option("--n-max", n_max, "largest tuple length to sweep (1..6)")
        ->required();
    c_verify->add_option("--theorem", theorem, "restrict to one suite id, e.g. 5.2");
    c_verify->add_flag("--json", json, "emit JSON lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(c_count)) {
        RSet rs = parse_rset(n, rstr);
        BigInt c = count_cnr(rs);
        if (json) {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["r"] = rs.dividers();
            j["count"] = c.str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << c.str() << "\n";
        }
    } else if (app.got_subcommand(c_total)) {
        BigInt c = use_formula ? total_via_formula(n) : count_total(n);
        if (json) {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["method"] = use_formula ? "formula" : "enumeration";
            j["total"] = c.str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << c.str() << "\n";
        }
    } else if (app.got_subcommand(c_list)) {
        if (kind == "gchains") {
            if (list_r->count() > 0)
                throw input_error("gchains ranges over every divider set; drop --r");
            for (const auto& c : gen_generalized_chains(n)) {
                if (json) {
                    nlohmann::ordered_json j;
                    j["n"] = n;
                    j["blocks"] = c;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << gchain_text(c) << "\n";
                }
            }
            return 0;
        }
        if (list_sigma->count() > 0 && kind != "opart")
            throw input_error("--sigma applies only to opart");
        RSet rs = parse_rset(n, rstr);
        if (kind == "r312") {
            for (const auto& t : gen_r312_avoiding(rs))
                std::cout << (json ? rtuple_to_json(t) : to_text(t)) << "\n";
        } else if (kind == "gapless") {
            for (const auto& t : gen_gapless(rs))
                std::cout << (json ? rtuple_to_json(t) : to_text(t)) << "\n";
        } else if (kind == "chains") {
            for (const auto& c : gen_rcd_chains(rs))
                std::cout << (json ? chain_to_json(c) : to_text(c)) << "\n";
        } else if (kind == "shapes") {
            for (const auto& mu : gen_shape_tuples(rs)) {
                if (json) {
                    nlohmann::ordered_json j;
                    j["n"] = n;
                    j["r"] = rs.dividers();
                    j["parts"] = mu;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << shape_tuple_text(mu) << "\n";
                }
            }
        } else {  // opart
            std::array<int, 3> sigma =
                parse_sigma(list_sigma->count() > 0 ? sigma_str : std::string("312"));
            for (const auto& t : gen_sigma_avoiding(rs, sigma))
                std::cout << (json ? rtuple_to_json(t) : to_text(t)) << "\n";
        }
    } else if (app.got_subcommand(c_oeis)) {
        if (terms < 1) throw input_error("--terms must be positive");
        auto vals = seq == "a220097" ? oeis_a220097(terms) : oeis_a226316(terms);
        if (json) {
            nlohmann::ordered_json j;
            j["seq"] = seq;
            auto arr = nlohmann::ordered_json::array();
            for (const auto& v : vals) arr.push_back(v.str());
            j["terms"] = arr;
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& v : vals) std::cout << v.str() << "\n";
        }
    } else if (app.got_subcommand(c_key)) {
        Partition shape = parse_partition(lambda_str);
        RTuple perm = parse_rtuple(perm_str);
        emit_tableau(key_of_perm(perm, shape), json);
    } else if (app.got_subcommand(c_scan)) {
        Tableau t = tableau_from_json(read_stream_or_file(input_path));
        emit_tableau(scan_tableau(t), json);
    } else if (app.got_subcommand(c_rem)) {
        Partition shape = parse_partition(lambda_str);
        RTuple alpha = parse_rtuple(alpha_str);
        emit_tableau(row_end_max(shape, alpha), json);
    } else if (app.got_subcommand(c_dem)) {
        Partition shape = parse_partition(lambda_str);
        RTuple perm = parse_rtuple(perm_str);
        if (mode_poly) {
            DemazurePolynomial poly = demazure_polynomial(perm, shape);
            if (json) {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& [expo, coeff] : poly.terms) {
                    nlohmann::ordered_json term;
                    term["exponents"] = expo;
                    term["coefficient"] = coeff.str();
                    arr.push_back(term);
                }
                std::cout << arr.dump() << "\n";
            } else {
                std::cout << poly.to_string() << "\n";
            }
        } else if (mode_conv) {
            print_convexity(check_convexity(perm, shape), json);
        } else if (mode_wit) {
            Witness w = convexity_witness(perm, shape);
            if (json)
                std::cout << witness_json(w).dump() << "\n";
            else
                print_witness_text(w);
        } else {
            bool first = true;
            for (const auto& t : demazure_set(perm, shape)) {
                if (!json && !first) std::cout << "\n";
                first = false;
                emit_tableau(t, json);
            }
        }
    } else if (app.got_subcommand(c_conv)) {
        Partition shape = parse_partition(lambda_str);
        RTuple perm = parse_rtuple(perm_str);
        print_convexity(check_convexity(perm, shape), json);
    } else if (app.got_subcommand(c_wit)) {
        Partition shape = parse_partition(lambda_str);
        RTuple perm = parse_rtuple(perm_str);
        Witness w = convexity_witness(perm, shape);
        if (json)
            std::cout << witness_json(w).dump() << "\n";
        else
            print_witness_text(w);
    } else if (app.got_subcommand(c_verify)) {
        std::optional<std::string> only;
        if (!theorem.empty()) only = theorem;
        auto results = run_verification(n_max, only);
        bool any_fail = false;
        for (const auto& res : results) {
            any_fail = any_fail || res.status == SuiteStatus::fail;
            if (json) {
                nlohmann::ordered_json j;
                j["id"] = res.id;
                j["title"] = res.title;
                j["status"] = status_name(res.status);
                j["detail"] = res.detail;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "suite " << res.id << " [" << status_name(res.status)
                          << "] " << res.title << "\n";
                for (const auto& line : res.detail) std::cout << "  " << line << "\n";
            }
        }
        if (!json) {
            std::size_t passed = 0;
            for (const auto& res : results)
                if (res.status == SuiteStatus::pass) ++passed;
            std::cout << passed << "/" << results.size() << " suites passed\n";
        }
        return any_fail ? 1 : 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pctk::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pctk::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    }
}
