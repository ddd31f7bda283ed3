#include "trk/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trk/arith.hpp"
#include "trk/integral.hpp"
#include "trk/kgroups.hpp"
#include "trk/limits.hpp"
#include "trk/repn.hpp"
#include "trk/trgroups.hpp"
#include "trk/verify.hpp"

namespace trk::cli {

namespace {

using nlohmann::json;

// Flag-level constraint violated: reported as a usage error (exit 2).
void require_usage(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

json factored_json(const FactoredInteger& n) {
    json factors = json::array();
    for (const auto& [p, e] : n.factors()) factors.push_back({p, e});
    return factors;
}

json group_json(const AbelianGroupInfo& g) {
    json out;
    out["rank"] = g.rank;
    out["torsion_order"] = to_decimal(g.torsion_order);
    out["torsion_factored"] = factored_json(g.torsion_order);
    if (g.structure_known()) {
        json factors = json::array();
        for (const CyclicFactor& f : *g.structure) factors.push_back({f.p, f.e});
        out["structure"] = factors;
        out["structure_known"] = "full";
    } else {
        out["structure"] = nullptr;
        out["structure_known"] = "order_only";
    }
    return out;
}

json decomposition_json(const LimDecomposition& dec) {
    json entries = json::array();
    for (const LimEntry& e : dec.entries)
        entries.push_back(
            {{"d", e.d}, {"j", e.j}, {"length", e.length}, {"level", e.level}, {"stage", e.stage}});
    json out;
    out["p"] = dec.p;
    out["level_shift"] = dec.level_shift;
    out["entries"] = std::move(entries);
    out["total_length"] = dec.total_length();
    return out;
}

void emit_document(std::ostream& out, const std::string& command, json query, json result) {
    json doc;
    doc["command"] = command;
    doc["query"] = std::move(query);
    doc["result"] = std::move(result);
    out << doc.dump(2) << '\n';
}

// Comma-free cell forms for csv (also used in the md table).
std::string compact_factored(const FactoredInteger& n) {
    if (n.is_one()) return "1";
    std::string out;
    for (const auto& [p, e] : n.factors()) {
        if (!out.empty()) out += '*';
        out += std::to_string(p);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::string compact_structure(const AbelianGroupInfo& g) {
    if (!g.structure_known()) return "";
    std::string out;
    auto append = [&](const std::string& piece) {
        if (!out.empty()) out += '+';
        out += piece;
    };
    if (g.rank == 1) append("Z");
    if (g.rank > 1) append("Z^" + std::to_string(g.rank));
    for (const CyclicFactor& f : *g.structure) {
        std::int64_t value = 1;
        for (std::int64_t k = 0; k < f.e; ++k) value = detail::checked_mul(value, f.p);
        append("Z/" + std::to_string(value));
    }
    return out.empty() ? "0" : out;
}

struct Options {
    std::int64_t m = 1;
    std::int64_t n = 1;
    std::int64_t p = 2;
    std::int64_t q = 0;
    std::int64_t r = 1;
    std::int64_t i = 1;
    std::int64_t seed = 1;
    std::int64_t m_max = 2;
    std::int64_t i_max = 3;
    std::int64_t dec_prime = 0;
    std::string lambda = "0";
    std::string parity = "odd";
    std::string suite = "all";
    std::string format = "md";
    std::string out_path;
    bool json_mode = false;
    bool include_structure = false;
};

int run_k(const Options& opt, std::ostream& out) {
    if (opt.q % 2 == 0)
        require_usage(opt.m * (opt.q / 2) <= 1'000'000,
                      "k: m * q/2 must stay at or below 10^6");
    const AbelianGroupInfo g = k_group(opt.m, opt.q);
    if (opt.json_mode) {
        json query;
        query["m"] = opt.m;
        query["q"] = opt.q;
        emit_document(out, "k", std::move(query), group_json(g));
    } else {
        out << "K_" << opt.q << "(Z[x]/(x^" << opt.m << "), (x)) = " << to_string(g) << '\n';
    }
    return 0;
}

int run_tr(const Options& opt, std::ostream& out) {
    require_usage(is_prime(opt.p), "tr: --p must be a prime");
    const Rep rep = parse_rep(opt.lambda);
    const AbelianGroupInfo g = tr_group(opt.p, opt.n, opt.q, rep);
    if (opt.json_mode) {
        json query;
        query["p"] = opt.p;
        query["n"] = opt.n;
        query["q"] = opt.q;
        query["lambda"] = to_string(rep);
        emit_document(out, "tr", std::move(query), group_json(g));
    } else {
        out << "TR^" << opt.n << "_{" << opt.q << "-" << to_string(rep) << "}(Z; " << opt.p
            << ") = " << to_string(g) << '\n';
    }
    return 0;
}

int run_modp(const Options& opt, std::ostream& out) {
    require_usage(is_prime(opt.p), "modp: --p must be a prime");
    const Rep rep = parse_rep(opt.lambda);
    const std::int64_t length = modp_length(opt.p, opt.n, opt.q, rep);
    const AbelianGroupInfo g = elementary_abelian(opt.p, length);
    if (opt.json_mode) {
        json query;
        query["p"] = opt.p;
        query["n"] = opt.n;
        query["q"] = opt.q;
        query["lambda"] = to_string(rep);
        json result = group_json(g);
        result["length"] = length;
        emit_document(out, "modp", std::move(query), std::move(result));
    } else {
        out << "TR^" << opt.n << "_{" << opt.q << "-" << to_string(rep) << "}(Z; " << opt.p
            << "; Z/" << opt.p << ") = " << to_string(g) << "  [length " << length << "]\n";
    }
    return 0;
}

int run_integral(const Options& opt, std::ostream& out) {
    const Rep rep = parse_rep(opt.lambda);
    AbelianGroupInfo g;
    if (opt.q % 2 == 0) {
        g = free_group(integral_rank(opt.r, opt.q, rep));
    } else if (opt.q > 0) {
        require_usage(opt.q <= 20'000, "integral: odd degrees must stay at or below 2*10^4");
        g = finite_order_only(integral_odd_order(opt.r, (opt.q + 1) / 2, rep));
    } else {
        g = zero_group();
    }
    if (opt.json_mode) {
        json query;
        query["r"] = opt.r;
        query["q"] = opt.q;
        query["lambda"] = to_string(rep);
        emit_document(out, "integral", std::move(query), group_json(g));
    } else {
        out << "TR^" << opt.r << "_{" << opt.q << "-" << to_string(rep) << "}(Z) = "
            << to_string(g) << '\n';
    }
    return 0;
}

int run_limr(const Options& opt, std::ostream& out) {
    require_usage(opt.m * opt.i <= 5'000, "limr: m * i must stay at or below 5000");
    if (opt.dec_prime != 0)
        require_usage(is_prime(opt.dec_prime), "limr: --p must be a prime");
    const Parity parity = opt.parity == "even" ? Parity::even : Parity::odd;
    const AbelianGroupInfo middle = limr_middle(opt.m, opt.i, parity);
    const AbelianGroupInfo left = limr_left(opt.m, opt.i, parity);
    const AbelianGroupInfo coker = limr_vm_coker(opt.m, opt.i, parity);
    if (opt.json_mode) {
        json query;
        query["m"] = opt.m;
        query["i"] = opt.i;
        query["parity"] = opt.parity;
        json result;
        result["middle"] = group_json(middle);
        result["left"] = group_json(left);
        result["cokernel"] = group_json(coker);
        if (opt.dec_prime != 0) {
            query["p"] = opt.dec_prime;
            json dec;
            dec["middle"] = decomposition_json(limr_middle_decomposition(opt.dec_prime, opt.m, opt.i));
            dec["left"] = decomposition_json(limr_left_decomposition(opt.dec_prime, opt.m, opt.i));
            result["decomposition"] = std::move(dec);
        }
        emit_document(out, "limr", std::move(query), std::move(result));
    } else {
        const std::int64_t degree = parity == Parity::odd ? 2 * opt.i - 1 : 2 * opt.i;
        out << "limit terms at m=" << opt.m << ", i=" << opt.i << ", "
            << (parity == Parity::odd ? "odd" : "even") << " degree " << degree << ":\n";
        out << "  middle:   " << to_string(middle) << '\n';
        out << "  left:     " << to_string(left) << '\n';
        out << "  cokernel: " << to_string(coker) << '\n';
        if (opt.dec_prime != 0) {
            for (const char* side : {"middle", "left"}) {
                const LimDecomposition dec =
                    side == std::string("middle")
                        ? limr_middle_decomposition(opt.dec_prime, opt.m, opt.i)
                        : limr_left_decomposition(opt.dec_prime, opt.m, opt.i);
                out << "  " << side << " decomposition at p=" << dec.p << " (level shift "
                    << dec.level_shift << ", total length " << dec.total_length() << "):\n";
                for (const LimEntry& e : dec.entries)
                    out << "    j=" << e.j << ": stage " << e.stage << ", level " << e.level
                        << ", d=" << e.d << ", length " << e.length << '\n';
            }
        }
    }
    return 0;
}

int run_dual(const Options& opt, std::ostream& out) {
    const DualStructure dual = dual_structure(opt.i);
    if (opt.json_mode) {
        json query;
        query["i"] = opt.i;
        json components = json::array();
        for (const DualComponent& component : dual.components) {
            json c;
            c["p"] = component.p;
            c["order"] = to_decimal(component.p_component_order);
            c["order_factored"] = factored_json(component.p_component_order);
            if (component.full) {
                json factors = json::array();
                for (const CyclicFactor& f : component.factors) factors.push_back({f.p, f.e});
                c["factors"] = std::move(factors);
                c["structure_known"] = "full";
            } else {
                c["factors"] = nullptr;
                c["structure_known"] = "order_only";
            }
            components.push_back(std::move(c));
        }
        json result;
        result["i"] = dual.i;
        result["order"] = to_decimal(dual.order);
        result["order_factored"] = factored_json(dual.order);
        result["components"] = std::move(components);
        emit_document(out, "dual", std::move(query), std::move(result));
    } else {
        out << "K_" << 2 * opt.i << "(Z[x]/(x^2), (x)): order " << to_decimal(dual.order)
            << " = " << to_factor_string(dual.order) << '\n';
        for (const DualComponent& component : dual.components) {
            out << "  p=" << component.p << ": ";
            if (component.full) {
                AbelianGroupInfo g{0, component.p_component_order, component.factors};
                out << compact_structure(g) << " (full)\n";
            } else {
                out << "order " << to_factor_string(component.p_component_order)
                    << " (structure not determined)\n";
            }
        }
    }
    return 0;
}

int run_stable(const Options& opt, std::ostream& out) {
    require_usage(opt.m * (std::max<std::int64_t>(opt.q, 0) / 2 + 2) <= 1'000'000,
                  "stable: m * (q/2 + 2) must stay at or below 10^6");
    const std::int64_t level = find_stable_level(opt.m, opt.q);
    const std::int64_t index = truncation_index(opt.m, level);
    if (opt.json_mode) {
        json query;
        query["m"] = opt.m;
        query["q"] = opt.q;
        json result;
        result["level"] = level;
        result["level_factored"] = factored_json(factor(level));
        result["truncation_index"] = index;
        emit_document(out, "stable", std::move(query), std::move(result));
    } else {
        out << "stable level for m=" << opt.m << ", q=" << opt.q << ": r = " << level << " = "
            << to_factor_string(factor(level)) << "  (truncation index " << index << ")\n";
    }
    return 0;
}

int run_verify(const Options& opt, std::ostream& out) {
    std::vector<verify::Check> checks;
    if (opt.suite == "paper" || opt.suite == "all") {
        std::vector<verify::Check> golden = verify::golden_checks();
        for (verify::Check& check : golden) checks.push_back(std::move(check));
    }
    if (opt.suite == "identities" || opt.suite == "all") {
        std::vector<verify::Check> identities =
            verify::identity_checks(static_cast<std::uint64_t>(opt.seed));
        for (verify::Check& check : identities) checks.push_back(std::move(check));
    }
    std::int64_t failures = 0;
    for (const verify::Check& check : checks)
        if (!check.pass) ++failures;
    if (opt.json_mode) {
        json query;
        query["suite"] = opt.suite;
        query["seed"] = opt.seed;
        json rows = json::array();
        for (const verify::Check& check : checks) {
            json row;
            row["name"] = check.name;
            row["pass"] = check.pass;
            row["detail"] = check.detail;
            rows.push_back(std::move(row));
        }
        json result;
        result["checks"] = std::move(rows);
        result["failures"] = failures;
        result["passed"] = failures == 0;
        emit_document(out, "verify", std::move(query), std::move(result));
    } else {
        for (const verify::Check& check : checks) {
            if (check.pass)
                out << "PASS " << check.name << '\n';
            else
                out << "FAIL " << check.name << ": " << check.detail << '\n';
        }
        out << (checks.size() - static_cast<std::size_t>(failures)) << " of " << checks.size()
            << " checks passed\n";
    }
    return failures == 0 ? 0 : 4;
}

int run_table(const Options& opt, std::ostream& out, std::ostream& err) {
    require_usage(opt.m_max * opt.i_max <= 1'000'000,
                  "table: m-max * i-max must stay at or below 10^6");
    require_usage(opt.m_max * (2 * opt.i_max + 2) <= 200'000,
                  "table: at most 2*10^5 rows");
    const std::vector<KTableRow> rows = k_table(opt.m_max, opt.i_max, opt.include_structure);

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) {
            err << "cannot open output path: " << opt.out_path << '\n';
            return 2;
        }
        sink = &file;
    }

    if (opt.format == "csv") {
        *sink << "m,q,rank,order_decimal,order_factored,structure,structure_known\n";
        for (const KTableRow& row : rows)
            *sink << row.m << ',' << row.q << ',' << row.group.rank << ','
                  << to_decimal(row.group.torsion_order) << ','
                  << compact_factored(row.group.torsion_order) << ','
                  << compact_structure(row.group) << ','
                  << (row.group.structure_known() ? "full" : "order_only") << '\n';
    } else if (opt.format == "md") {
        *sink << "| m | q | rank | order_decimal | order_factored | structure |"
                 " structure_known |\n";
        *sink << "|---|---|------|---------------|----------------|-----------|"
                 "-----------------|\n";
        for (const KTableRow& row : rows)
            *sink << "| " << row.m << " | " << row.q << " | " << row.group.rank << " | "
                  << to_decimal(row.group.torsion_order) << " | "
                  << compact_factored(row.group.torsion_order) << " | "
                  << compact_structure(row.group) << " | "
                  << (row.group.structure_known() ? "full" : "order_only") << " |\n";
    } else {
        json rows_json = json::array();
        for (const KTableRow& row : rows) {
            json r = group_json(row.group);
            r["m"] = row.m;
            r["q"] = row.q;
            rows_json.push_back(std::move(r));
        }
        json query;
        query["m_max"] = opt.m_max;
        query["i_max"] = opt.i_max;
        query["include_structure"] = opt.include_structure;
        json result;
        result["rows"] = std::move(rows_json);
        emit_document(*sink, "table", std::move(query), std::move(result));
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact orders, ranks and structures of cyclotomic fixed-point groups and"
                 " relative K-groups of truncated polynomial rings"};
    app.require_subcommand(1);

    const std::string lambda_help =
        "representation: 0 | d:<n> (weights 1..n) | w:<c1,c2,...> (explicit weights)";

    CLI::App* k_cmd = app.add_subcommand("k", "relative K-group K_q(Z[x]/(x^m), (x))");
    k_cmd->add_option("--m", opt.m, "truncation length m >= 1")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000}));
    k_cmd->add_option("--q", opt.q, "degree q >= 0")
        ->required()
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{2'000'000}));
    k_cmd->add_flag("--json", opt.json_mode, "emit a JSON document");

    auto add_p_typical_flags = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("--p", opt.p, "prime p")->required();
        cmd->add_option("--n", opt.n, "level n >= 1")
            ->required()
            ->check(CLI::Range(std::int64_t{1}, std::int64_t{100}));
        cmd->add_option("--q", opt.q, what)
            ->required()
            ->check(CLI::Range(std::int64_t{-1'000'000'000'000}, std::int64_t{1'000'000'000'000}));
        cmd->add_option("--lambda", opt.lambda, lambda_help);
        cmd->add_flag("--json", opt.json_mode, "emit a JSON document");
    };

    CLI::App* tr_cmd = app.add_subcommand("tr", "p-typical group TR^n_{q-lambda}(Z; p)");
    add_p_typical_flags(tr_cmd, "degree q (any integer)");

    CLI::App* modp_cmd =
        app.add_subcommand("modp", "mod-p coefficients TR^n_{q-lambda}(Z; p; Z/p)");
    add_p_typical_flags(modp_cmd, "degree q (any integer)");

    CLI::App* integral_cmd =
        app.add_subcommand("integral", "integral group TR^r_{q-lambda}(Z)");
    integral_cmd->add_option("--r", opt.r, "level r >= 1")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000'000}));
    integral_cmd->add_option("--q", opt.q, "degree q (odd degrees need |q| <= 2*10^4)")
        ->required()
        ->check(CLI::Range(std::int64_t{-1'000'000'000'000}, std::int64_t{1'000'000'000'000}));
    integral_cmd->add_option("--lambda", opt.lambda, lambda_help);
    integral_cmd->add_flag("--json", opt.json_mode, "emit a JSON document");

    CLI::App* limr_cmd = app.add_subcommand(
        "limr", "limit terms over the level maps and the transfer cokernel");
    limr_cmd->add_option("--m", opt.m, "truncation length m >= 1")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{5'000}));
    limr_cmd->add_option("--i", opt.i, "degree index i >= 0 (degrees 2i and 2i-1)")
        ->required()
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{5'000}));
    limr_cmd->add_option("--parity", opt.parity, "even (degree 2i) or odd (degree 2i-1)")
        ->check(CLI::IsMember({"even", "odd"}));
    limr_cmd->add_option("--p", opt.dec_prime, "also print the p-local decomposition");
    limr_cmd->add_flag("--json", opt.json_mode, "emit a JSON document");

    CLI::App* dual_cmd =
        app.add_subcommand("dual", "structure of K_2i(Z[x]/(x^2), (x)) by prime");
    dual_cmd->add_option("--i", opt.i, "degree index i >= 1 (degree 2i)")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{100'000}));
    dual_cmd->add_flag("--json", opt.json_mode, "emit a JSON document");

    CLI::App* stable_cmd = app.add_subcommand(
        "stable", "smallest level at which the limit projections are isomorphisms");
    stable_cmd->add_option("--m", opt.m, "truncation length m >= 1")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000}));
    stable_cmd->add_option("--q", opt.q, "degree q")
        ->required()
        ->check(CLI::Range(std::int64_t{-1'000'000}, std::int64_t{1'000'000}));
    stable_cmd->add_flag("--json", opt.json_mode, "emit a JSON document");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the self-verification suites");
    verify_cmd->add_option("--suite", opt.suite, "identities | paper | all")
        ->check(CLI::IsMember({"identities", "paper", "all"}));
    verify_cmd->add_option("--seed", opt.seed, "seed for the randomized sweeps (default 1)")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{1'000'000'000}));
    verify_cmd->add_flag("--json", opt.json_mode, "emit a JSON document");

    CLI::App* table_cmd = app.add_subcommand("table", "table of relative K-groups");
    table_cmd->add_option("--m-max", opt.m_max, "largest truncation length")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000}));
    table_cmd->add_option("--i-max", opt.i_max, "largest degree index (degrees up to 2i+1)")
        ->required()
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{100'000}));
    table_cmd->add_flag("--structure", opt.include_structure,
                        "include structure lists where known");
    table_cmd->add_option("--format", opt.format, "md | csv | json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    table_cmd->add_option("--out", opt.out_path, "write the table to this path");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (k_cmd->parsed()) return run_k(opt, out);
        if (tr_cmd->parsed()) return run_tr(opt, out);
        if (modp_cmd->parsed()) return run_modp(opt, out);
        if (integral_cmd->parsed()) return run_integral(opt, out);
        if (limr_cmd->parsed()) return run_limr(opt, out);
        if (dual_cmd->parsed()) return run_dual(opt, out);
        if (stable_cmd->parsed()) return run_stable(opt, out);
        if (verify_cmd->parsed()) return run_verify(opt, out);
        if (table_cmd->parsed()) return run_table(opt, out, err);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::overflow_error& e) {
        err << "overflow: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace trk::cli
