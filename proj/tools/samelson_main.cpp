#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "samelson/cohomology.hpp"
#include "samelson/oracle.hpp"
#include "samelson/products.hpp"
#include "samelson/report.hpp"

using namespace samelson;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

// Resolve the CLI's group naming. "SO" picks the compact form behind
// SO(N) by parity of N; the family names SpinOdd/SOEven take the rank
// parameter directly.
GroupSpec resolve_group(const std::string& name, int n, std::uint64_t p) {
    if (name == "SU") return make_group(Family::SU, n, p);
    if (name == "Sp") return make_group(Family::Sp, n, p);
    if (name == "SpinOdd") return make_group(Family::SpinOdd, n, p);
    if (name == "SOEven") return make_group(Family::SOEven, n, p);
    if (name == "SO") {
        if (n < 3) throw usage_error("SO(N) needs N >= 3, got N = " + std::to_string(n));
        return n % 2 == 0 ? make_group(Family::SOEven, n / 2, p) : make_group(Family::SpinOdd, (n - 1) / 2, p);
    }
    if (name == "G2") return make_group(Family::G2, n, p);
    if (name == "F4") return make_group(Family::F4, n, p);
    if (name == "E6") return make_group(Family::E6, n, p);
    if (name == "E7") return make_group(Family::E7, n, p);
    if (name == "E8") return make_group(Family::E8, n, p);
    throw usage_error("unknown group '" + name + "' (expected SU, Sp, SO, SpinOdd, SOEven, G2, F4, E6, E7 or E8)");
}

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> table = {
        {"SU", Family::SU}, {"Sp", Family::Sp},   {"SpinOdd", Family::SpinOdd},
        {"SOEven", Family::SOEven}, {"G2", Family::G2}, {"F4", Family::F4},
        {"E6", Family::E6}, {"E7", Family::E7},   {"E8", Family::E8},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw usage_error("unknown family '" + name + "' in --families (expected SU, Sp, SpinOdd, SOEven, G2, F4, E6, E7, E8)");
    return it->second;
}

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p <= limit; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

int run_p1(const std::string& group, int n, std::uint64_t p, const std::string& generator,
           const report::Options& opt, bool verify, const oracle::OracleLimits& limits) {
    GroupSpec g = resolve_group(group, n, p);
    if (!g.classical())
        throw usage_error("steenrod_p1: " + g.name() +
                          " has no polynomial generator model here; only SU, Sp, SO are supported");
    std::vector<report::P1Row> rows;
    std::vector<GeneratorDescriptor> wanted;
    if (generator.empty()) {
        wanted = g.generators;
    } else {
        int idx = g.gen_ctx->index_of(generator);
        if (idx < 0)
            throw usage_error(g.name() + " has no generator named '" + generator + "'");
        wanted.push_back(g.generators[static_cast<std::size_t>(idx)]);
    }
    bool mismatch = false;
    for (const auto& d : wanted) {
        report::P1Row row{d, steenrod_p1(g, d.name), std::nullopt};
        if (verify) {
            ModPoly check = oracle::brute_force_p1(g, d.name, limits);
            if (check == row.p1) {
                row.oracle = "agree";
            } else {
                row.oracle = "MISMATCH: engine " + row.p1.str() + " vs oracle " + check.str();
                mismatch = true;
            }
        }
        rows.push_back(std::move(row));
    }
    std::cout << report::render_p1(g, rows, opt);
    return mismatch ? kExitVerify : kExitOk;
}

int run_table(const std::string& group, int n, std::uint64_t p, const report::Options& opt) {
    GroupSpec g = resolve_group(group, n, p);
    auto verdicts = samelson_table(g);
    std::cout << report::render_table(g, verdicts, opt);
    for (const auto& v : verdicts)
        if (v.agree && !*v.agree) {
            std::cerr << "error: criteria disagree on <" << v.a.label() << ", " << v.b.label()
                      << "> outside the known edge case\n";
            return kExitVerify;
        }
    return kExitOk;
}

int run_normality(int n, std::uint64_t p, const report::Options& opt) {
    NormalityReport r = normality(n, p);
    std::cout << report::render_normality(r, opt);
    return kExitOk;
}

struct SweepStats {
    long long cells = 0;
    long long agree = 0;
    long long disagree = 0;
    long long edge = 0;
    long long unsupported = 0;
};

int run_sweep(std::vector<std::string> family_names, int n_lo, int n_hi, std::uint64_t p_max,
              const std::string& out_path) {
    if (family_names.empty())
        family_names = {"SU", "Sp", "SpinOdd", "SOEven", "G2", "F4", "E6", "E7", "E8"};
    std::vector<Family> families;
    for (const auto& s : family_names) {
        Family f = parse_family(s);
        bool dup = false;
        for (Family have : families) dup = dup || have == f;
        if (!dup) families.push_back(f);
    }
    // Canonical report order, independent of how the flag listed them.
    std::sort(families.begin(), families.end(),
              [](Family a, Family b) { return static_cast<int>(a) < static_cast<int>(b); });

    auto primes = odd_primes_upto(p_max);
    SweepStats stats;
    json tables = json::array();
    json normality_rows = json::array();
    json mahowald_rows = json::array();
    json errors = json::array();

    auto record_error = [&](const std::string& group, std::uint64_t p, const std::exception& e) {
        json err;
        err["group"] = group;
        err["p"] = p;
        err["error"] = e.what();
        errors.push_back(std::move(err));
    };

    for (Family f : families) {
        int lo = n_lo, hi = n_hi;
        if (is_exceptional(f)) lo = hi = 0;  // single group, rank parameter unused
        for (int n = lo; n <= hi; ++n) {
            for (std::uint64_t p : primes) {
                GroupSpec g;
                try {
                    g = make_group(f, n, p);
                } catch (const usage_error&) {
                    break;  // rank invalid for this family; same for every p
                }
                if (!is_p_regular(g)) continue;
                try {
                    auto verdicts = samelson_table(g);
                    json doc;
                    doc["group"] = g.name();
                    doc["family"] = family_name(f);
                    doc["n"] = n;
                    doc["p"] = p;
                    json jp = json::array();
                    for (const auto& v : verdicts) {
                        jp.push_back(report::pair_json(v));
                        ++stats.cells;
                        if (v.edge)
                            ++stats.edge;
                        else if (!v.agree)
                            ++stats.unsupported;
                        else if (*v.agree)
                            ++stats.agree;
                        else
                            ++stats.disagree;
                    }
                    doc["pairs"] = std::move(jp);
                    tables.push_back(std::move(doc));
                } catch (const std::exception& e) {
                    record_error(g.name(), p, e);
                }
            }
            if (f == Family::SOEven && n >= 2) {
                // Normality is meaningful at every prime, p = 2 and the
                // non-p-regular range included.
                try {
                    normality_rows.push_back(report::normality_json(normality(n, 2)));
                } catch (const std::exception& e) {
                    record_error("SO(" + std::to_string(2 * n) + ")", 2, e);
                }
                for (std::uint64_t p : primes) {
                    try {
                        normality_rows.push_back(report::normality_json(normality(n, p)));
                    } catch (const std::exception& e) {
                        record_error("SO(" + std::to_string(2 * n) + ")", p, e);
                    }
                }
                for (std::uint64_t p : primes) {
                    if (p < static_cast<std::uint64_t>(2 * n - 1)) continue;
                    try {
                        mahowald_rows.push_back(report::mahowald_json(mahowald_check(n, p)));
                    } catch (const std::exception& e) {
                        record_error("SO(" + std::to_string(2 * n) + ")", p, e);
                    }
                }
            }
        }
    }

    json doc;
    json fam = json::array();
    for (Family f : families) fam.push_back(family_name(f));
    doc["families"] = std::move(fam);
    doc["n_range"] = json::array({n_lo, n_hi});
    doc["p_max"] = p_max;
    doc["tables"] = std::move(tables);
    doc["normality"] = std::move(normality_rows);
    doc["mahowald"] = std::move(mahowald_rows);
    json agg;
    agg["cells"] = stats.cells;
    agg["agree"] = stats.agree;
    agg["disagree"] = stats.disagree;
    agg["edge"] = stats.edge;
    agg["unsupported"] = stats.unsupported;
    doc["agreement"] = std::move(agg);
    doc["errors"] = errors;

    std::string payload = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw usage_error("cannot open --out file '" + out_path + "'");
        out << payload;
    }
    if (stats.disagree > 0) return kExitVerify;
    if (!errors.empty()) return kExitUsage;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steenrod P^1 on classifying spaces and Samelson products in p-regular Lie groups"};
    app.require_subcommand(1);

    std::string group, generator, format = "text", families_csv, n_range = "2..8", out_path;
    int n = 0;
    std::uint64_t p = 0;
    std::uint64_t p_max = 37;
    bool signed_coeffs = false, verify = false;
    oracle::OracleLimits limits;

    auto* p1_cmd = app.add_subcommand("p1", "Steenrod P^1 of classifying-space generators");
    p1_cmd->add_option("--group", group, "SU, Sp, SO, SpinOdd, SOEven, G2, F4, E6, E7, E8")->required();
    p1_cmd->add_option("--n", n, "N in SU(N)/Sp(N)/SO(N), or the rank for SpinOdd/SOEven");
    p1_cmd->add_option("--p", p, "odd prime")->required();
    p1_cmd->add_option("--generator", generator, "single generator (default: all)");
    p1_cmd->add_option("--format", format, "text, markdown or json (default text)");
    p1_cmd->add_flag("--signed", signed_coeffs, "show symmetric residues");
    p1_cmd->add_flag("--verify", verify, "cross-check against the brute-force oracle");
    p1_cmd->add_option("--max-ell", limits.max_ell, "oracle rank bound (default 6)");
    p1_cmd->add_option("--max-p", limits.max_p, "oracle prime bound (default 13)");

    auto* table_cmd = app.add_subcommand("table", "Samelson product verdicts for all sphere pairs");
    table_cmd->add_option("--group", group, "SU, Sp, SO, SpinOdd, SOEven, G2, F4, E6, E7, E8")->required();
    table_cmd->add_option("--n", n, "N in SU(N)/Sp(N)/SO(N), or the rank for SpinOdd/SOEven");
    table_cmd->add_option("--p", p, "odd prime, p-regular for the group")->required();
    table_cmd->add_option("--format", format, "text, markdown or json (default text)");
    table_cmd->add_flag("--signed", signed_coeffs, "show symmetric residues");

    auto* norm_cmd = app.add_subcommand("normality", "is SO(2n-1) normal in SO(2n) at p?");
    norm_cmd->add_option("--n", n, "half the even dimension: SO(2n-1) in SO(2n)")->required();
    norm_cmd->add_option("--p", p, "prime (2 allowed)")->required();
    norm_cmd->add_option("--format", format, "text, markdown or json (default text)");

    auto* sweep_cmd = app.add_subcommand("sweep", "bulk verdicts over families, ranks and primes (JSON)");
    sweep_cmd->add_option("--families", families_csv, "comma-separated families (default: all)");
    sweep_cmd->add_option("--n-range", n_range, "rank range lo..hi (default 2..8)");
    sweep_cmd->add_option("--p-max", p_max, "largest prime to include (default 37)");
    sweep_cmd->add_option("--out", out_path, "write the JSON document here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        report::Options opt{report::parse_format(format), signed_coeffs};
        if (p1_cmd->parsed()) return run_p1(group, n, p, generator, opt, verify, limits);
        if (table_cmd->parsed()) return run_table(group, n, p, opt);
        if (norm_cmd->parsed()) return run_normality(n, p, opt);
        if (sweep_cmd->parsed()) {
            std::vector<std::string> fams;
            std::string cur;
            for (char c : families_csv) {
                if (c == ',') {
                    if (!cur.empty()) fams.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (!cur.empty()) fams.push_back(cur);
            auto dots = n_range.find("..");
            if (dots == std::string::npos)
                throw usage_error("--n-range must look like lo..hi, got '" + n_range + "'");
            int lo = 0, hi = 0;
            try {
                std::size_t used = 0;
                lo = std::stoi(n_range.substr(0, dots), &used);
                if (used != dots) throw std::invalid_argument("");
                std::string tail = n_range.substr(dots + 2);
                hi = std::stoi(tail, &used);
                if (used != tail.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw usage_error("--n-range must look like lo..hi, got '" + n_range + "'");
            }
            return run_sweep(std::move(fams), lo, hi, p_max, out_path);
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitUsage;
}
