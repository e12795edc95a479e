#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "permlab/diagram.hpp"
#include "permlab/dyck.hpp"
#include "permlab/involution.hpp"
#include "permlab/lab.hpp"
#include "permlab/perm.hpp"
#include "permlab/verify.hpp"

using nlohmann::ordered_json;
using namespace permlab;

namespace {

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

int cmd_diagram(const std::string& perm_text) {
    const Diagram d = build_diagram(Permutation::parse(perm_text));
    ordered_json out;
    out["n"] = d.n;
    out["squares"] = ordered_json::array();
    for (const auto& s : d.squares)
        out["squares"].push_back({{"row", s.row}, {"col", s.col}, {"rank", s.rank}});
    std::cout << out.dump() << '\n';
    return 0;
}

// Trace output needs the tail rows fed into reconstruct; recompute them the
// same way phi does.
std::vector<int> phi_tail_rows(const Permutation& pi, int m) {
    std::vector<int> rows;
    for (const auto& s : build_diagram(pi).squares)
        if (s.rank >= m - 2) rows.push_back(s.row);
    std::sort(rows.begin(), rows.end());
    return rows;
}

int cmd_phi(const std::string& perm_text, int m, bool trace) {
    const Permutation pi = Permutation::parse(perm_text);
    ReconstructTrace tr;
    const Permutation sigma = phi(pi, m, trace ? &tr : nullptr);
    if (trace) {
        const PartialData data = decompose(pi, m);
        std::string squares;
        for (const auto& [row, col] : data.low_squares) {
            if (!squares.empty()) squares += ' ';
            squares += '(' + std::to_string(row) + ',' + std::to_string(col) + ')';
        }
        std::cout << "low_squares = [" << squares << "]\n";
        std::cout << "tail_rows = " << join(phi_tail_rows(pi, m)) << '\n';
        std::cout << "r = " << join(tr.r) << '\n';
        std::cout << "c = " << join(tr.c) << '\n';
        std::cout << "e = " << join(tr.e) << '\n';
        std::cout << "c' = " << join(tr.c_prime) << '\n';
    }
    std::cout << sigma.str() << '\n';
    return 0;
}

int cmd_stats(const std::string& perm_text, int m) {
    const Permutation pi = Permutation::parse(perm_text);
    ordered_json out;
    out["n"] = pi.size();
    out["m"] = m;
    out["a"] = stat(pi, {m, PatternKind::A});
    out["b"] = stat(pi, {m, PatternKind::B});
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_dyck(const std::string& word) {
    const DyckPath d = parse_path(word);
    const PathFeatures f = path_features(d);
    ordered_json out;
    out["semilength"] = d.semilength;
    out["returns"] = f.returns;
    out["high_peaks"] = f.high_peaks;
    out["valleys_above_zero"] = f.valleys_above_zero;
    out["qualifying_tunnels"] = f.qualifying_tunnels;
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_enumerate(int n, int m, const std::string& stat_sel, const std::string& format,
                  int jobs) {
    std::vector<CountTable> tables;
    if (stat_sel == "a" || stat_sel == "both")
        tables.push_back(distribution(n, m, StatKind::A, jobs));
    if (stat_sel == "b" || stat_sel == "both")
        tables.push_back(distribution(n, m, StatKind::B, jobs));

    // `both` interleaves the a and b rows per k, keeping (n, m, stat, k) order.
    CountTable merged;
    for (const auto& t : tables) merged.insert(merged.end(), t.begin(), t.end());
    std::stable_sort(merged.begin(), merged.end(), [](const CountRow& x, const CountRow& y) {
        return std::tie(x.n, x.m, x.stat, x.k) < std::tie(y.n, y.m, y.stat, y.k);
    });

    if (format == "csv") {
        std::cout << to_csv(merged);
    } else {
        ordered_json rows = ordered_json::array();
        for (const auto& r : merged)
            rows.push_back({{"n", r.n},
                            {"m", r.m},
                            {"stat", r.stat == StatKind::A ? "a" : "b"},
                            {"k", r.k},
                            {"count", r.count}});
        std::cout << rows.dump() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern-tail statistics, the diagram involution, and the Dyck-path "
                 "verification lab"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--jobs", jobs, "worker cap for internal enumeration");

    std::string perm_text, word, suite;
    int m = 3, n = 3, n_max = 6;
    bool trace = false;
    std::string stat_sel = "both", format = "csv";

    auto* sc_diagram = app.add_subcommand("diagram", "print the ranked diagram as JSON");
    sc_diagram->add_option("perm", perm_text)->required();

    auto* sc_phi = app.add_subcommand("phi", "apply the involution");
    sc_phi->add_option("perm", perm_text)->required();
    sc_phi->add_option("--m", m)->required()->check(CLI::Range(2, 1000));
    sc_phi->add_flag("--trace", trace, "print r, c, e, c' of the sorting routine");

    auto* sc_stats = app.add_subcommand("stats", "print a_m and b_m");
    sc_stats->add_option("perm", perm_text)->required();
    sc_stats->add_option("--m", m)->required()->check(CLI::Range(2, 1000));

    auto* sc_dyck = app.add_subcommand("dyck", "print the feature record of a path");
    sc_dyck->add_option("word", word)->required();

    auto* sc_enum = app.add_subcommand("enumerate", "statistic distribution over S_n");
    sc_enum->add_option("--n", n)->required();
    sc_enum->add_option("--m", m)->required()->check(CLI::Range(2, 1000));
    sc_enum->add_option("--stat", stat_sel)->check(CLI::IsMember({"a", "b", "both"}));
    sc_enum->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* sc_verify = app.add_subcommand("verify", "run a verification suite");
    sc_verify->add_option("suite", suite)->required();
    sc_verify->add_option("--n-max", n_max)->check(CLI::Range(1, 14));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sc_diagram) return cmd_diagram(perm_text);
        if (*sc_phi) return cmd_phi(perm_text, m, trace);
        if (*sc_stats) return cmd_stats(perm_text, m);
        if (*sc_dyck) return cmd_dyck(word);
        if (*sc_enum) return cmd_enumerate(n, m, stat_sel, format, jobs);
        if (*sc_verify) {
            if (!permlab::verify::known_suite(suite)) {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            return permlab::verify::run_suite(suite, n_max, jobs, std::cout) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
