// Command-line surface for the toolkit: enumeration runs, table
// verification, group analysis on data files, construction checks.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "k3/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

bool parse_k_range(const std::string& text, int& lo, int& hi) {
    std::size_t colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, colon));
            hi = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && hi <= 20 && lo <= hi;
}

void print_entries(const std::vector<k3::ListEntry>& entries, const std::string& format) {
    if (format == "records") {
        for (const auto& e : entries)
            std::cout << k3::format_order_string(e.order) << "|" << e.config.str() << "\n";
        return;
    }
    // display mode: group configurations under one order, N descending
    std::size_t i = 0;
    while (i < entries.size()) {
        std::vector<std::string> lattices;
        std::size_t j = i;
        while (j < entries.size() && entries[j].order == entries[i].order)
            lattices.push_back(entries[j++].config.str_display());
        std::cout << std::left << std::setw(14) << k3::format_order_string(entries[i].order)
                  << join(lattices, ", ") << "\n";
        i = j;
    }
}

int cmd_enumerate(const std::string& k_range, bool no_square_filter, bool verify,
                  const std::string& format) {
    int lo = 4, hi = 5;
    if (!parse_k_range(k_range, lo, hi)) {
        std::cerr << "error: bad k range \"" << k_range << "\" (want LO:HI within [1,20])\n";
        return kExitUsage;
    }
    auto entries = k3::enumerate_list(lo, hi, true, !no_square_filter);
    print_entries(entries, format);
    if (!verify) return kExitOk;
    auto diff = k3::verify_table2(entries);
    if (diff.empty()) {
        std::cout << "verify: exact match with bundled transcription ("
                  << entries.size() << " entries)\n";
        return kExitOk;
    }
    for (const auto& e : diff.missing)
        std::cout << "verify: missing " << k3::format_order_string(e.order) << "|"
                  << e.config.str() << "\n";
    for (const auto& e : diff.extra)
        std::cout << "verify: extra " << k3::format_order_string(e.order) << "|"
                  << e.config.str() << "\n";
    return kExitMismatch;
}

int cmd_check_config(const std::string& config_text) {
    k3::SingConfig config({k3::AdeType(k3::AdeFamily::A, 1)});
    try {
        config = k3::parse_config(config_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& t : config.types)
        if (!k3::table1_lookup(t)) {
            std::cerr << "error: " << t.str()
                      << " is outside the 12-type stabilizer alphabet (no tame stabilizer"
                      << " produces it; tame element orders stop at 8)\n";
            return kExitUsage;
        }

    std::cout << "config:        " << config.str_display() << "\n";
    std::cout << "rank:          " << config.rank() << "\n";
    std::vector<std::string> orders;
    for (long long o : config.stabilizer_orders()) orders.push_back(std::to_string(o));
    std::cout << "orders:        " << join(orders, ",") << "\n";
    long long d = config.discriminant_product();
    std::cout << "disc product:  " << d << " = " << k3::format_order_string(d)
              << (k3::is_square(d) ? " (square)" : " (non-square)") << "\n";
    auto n = k3::candidate_order(config);
    if (!n) {
        std::cout << "candidate N:   none\n";
        return kExitOk;
    }
    std::cout << "candidate N:   " << *n << " = " << k3::format_order_string(*n) << "\n";
    auto rep = k3::check_constraints(config, *n);
    auto verdict = [](bool b) { return b ? "pass" : "FAIL"; };
    std::cout << "(i)   rank 20:            " << verdict(rep.rank_20) << "\n";
    std::cout << "(ii)  rational identity:  " << verdict(rep.rational_identity) << "\n";
    std::cout << "(iii) divisibility:       " << verdict(rep.divisibility) << "\n";
    std::cout << "(iv)  non-square disc:    " << verdict(rep.nonsquare_disc) << "\n";
    std::cout << "(v)   k in {4,5}:         " << verdict(rep.k_in_4_5) << "\n";
    return kExitOk;
}

int cmd_group(const std::string& path, bool want_mu, bool want_orbits, bool want_order,
              bool want_histogram, unsigned long long cap, const std::string& expect) {
    k3::GroupFile gf;
    try {
        gf = k3::load_group_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    k3::PermGroup g = k3::PermGroup::build(gf.generators, {}, gf.degree);
    std::string value;
    try {
        if (want_order || !(want_mu || want_orbits || want_histogram)) {
            value = std::to_string(g.order());
            std::cout << "order: " << value << "\n";
        }
        if (want_orbits) {
            std::ostringstream os;
            for (const auto& orbit : g.orbit_partition()) {
                os << " {";
                for (std::size_t i = 0; i < orbit.size(); ++i)
                    os << (i ? "," : "") << orbit[i] + 1;
                os << "}";
            }
            value = os.str().substr(1);
            std::cout << "orbits:" << os.str() << "\n";
        }
        if (want_histogram) {
            std::ostringstream os;
            bool first = true;
            for (auto& [ord, cnt] : g.element_order_histogram(cap).entries) {
                os << (first ? "" : " ") << ord << ":" << cnt;
                first = false;
            }
            value = os.str();
            std::cout << "histogram: " << value << "\n";
        }
        if (want_mu) {
            auto mu = g.mu(cap);
            value = mu.value.str();
            std::cout << "mu: " << value << "\n";
            for (long long ord : mu.nontame_orders)
                std::cerr << "warning: element order " << ord
                          << " exceeds 8; no tame symplectic action has such elements\n";
        }
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!expect.empty() && value != expect) {
        std::cerr << "expect mismatch: got \"" << value << "\", want \"" << expect << "\"\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_table1(const std::string& format) {
    if (format == "records") {
        for (const auto& rec : k3::table1())
            std::cout << rec.ade.str() << "," << rec.group_name << "," << rec.o_x << ","
                      << rec.c_x << "," << rec.disc_invariants.str() << "," << rec.d_x << "\n";
        return kExitOk;
    }
    std::cout << std::left << std::setw(6) << "type" << std::setw(7) << "G_x" << std::setw(5)
              << "o_x" << std::setw(5) << "c_x" << std::setw(7) << "D_x" << "d_x\n";
    for (const auto& rec : k3::table1())
        std::cout << std::left << std::setw(6) << rec.ade.str_display() << std::setw(7)
                  << rec.group_name << std::setw(5) << rec.o_x << std::setw(5) << rec.c_x
                  << std::setw(7) << rec.disc_invariants.str() << rec.d_x << "\n";
    return kExitOk;
}

int cmd_verify_constructions(bool s4_census) {
    k3::P511Constants consts;
    try {
        consts = k3::load_p511_constants(k3::data_dir() + "/p511.txt");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    bool all_ok = true;
    auto report = [&](const std::string& what, bool ok) {
        std::cout << (ok ? "pass" : "FAIL") << "  " << what << "\n";
        all_ok = all_ok && ok;
    };
    try {
        k3::PermGroup o48 = k3::build_O48(consts);
        report("O48 order 48", o48.order() == 48);
        auto hist = o48.element_order_histogram();
        report("O48 has a unique involution", hist.entries[2] == 1);
        report("mu(O48) = 4", o48.mu().value == k3::Rat(4));
        k3::PermGroup o96 = k3::build_O48_2(consts);
        report("O48:2 order 96", o96.order() == 96);
    } catch (const std::runtime_error& e) {
        std::cout << "FAIL  " << e.what() << "\n";
        all_ok = false;
    }
    report("orbit shape of first pair is 1+6+8",
           k3::linear_orbit_shape({consts.xviii_x, consts.xviii_y}) ==
               std::vector<int>({1, 6, 8}));
    report("orbit shape of second pair is 1+2+12",
           k3::linear_orbit_shape({consts.xx_x, consts.xx_y}) == std::vector<int>({1, 2, 12}));

    auto shapes = k3::classify_s4_shapes();
    auto contains = [&](std::vector<int> s) { return shapes.count(s) > 0; };
    report("census contains 3+12", contains({3, 12}));
    report("census contains 3+4+8", contains({3, 4, 8}));
    report("census contains 1+2+12", contains({1, 2, 12}));
    report("census contains 1+6+8", contains({1, 6, 8}));
    report("census contains 1+3+3+4+4", contains({1, 3, 3, 4, 4}));
    if (s4_census) {
        std::cout << "census of orbit shapes on the 15 nonzero vectors:\n";
        for (const auto& s : shapes) {
            std::cout << "  ";
            for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? "+" : "") << s[i];
            std::cout << "\n";
        }
    }
    return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for Mathieu-character arithmetic, ADE lattice data, and the"
                 " exhaustive singularity-configuration search"};
    app.require_subcommand(1);

    std::string k_range = "4:5", format = "text", expect, config_text, group_path;
    bool no_square_filter = false, verify = false, s4_census = false;
    bool want_mu = false, want_orbits = false, want_order = false, want_histogram = false;
    unsigned long long cap = 1000000;

    auto* enumerate = app.add_subcommand("enumerate", "run the exhaustive configuration search");
    enumerate->add_option("--k", k_range, "k range LO:HI (default 4:5)");
    enumerate->add_flag("--no-square-filter", no_square_filter,
                        "drop the non-square discriminant constraint");
    enumerate->add_flag("--verify", verify, "diff against the bundled transcription");
    enumerate->add_option("--format", format, "text (default) or records")
        ->check(CLI::IsMember({"text", "records"}));

    auto* check = app.add_subcommand("check-config", "constraint report for one configuration");
    check->add_option("config", config_text, "lattice multiset, e.g. A2,A4,A4,A6,D4")->required();

    auto* group = app.add_subcommand("group", "analyze a permutation group file");
    group->add_option("path", group_path, "group file")->required();
    group->add_flag("--mu", want_mu, "invariant dimension (exact rational)");
    group->add_flag("--orbits", want_orbits, "orbit partition");
    group->add_flag("--order", want_order, "group order");
    group->add_flag("--histogram", want_histogram, "element order histogram");
    group->add_option("--cap", cap, "element enumeration cap (default 10^6)");
    group->add_option("--expect", expect, "fail (exit 1) unless the value matches");

    auto* table1 = app.add_subcommand("table1", "print the stabilizer catalog");
    table1->add_option("--format", format, "text (default) or records")
        ->check(CLI::IsMember({"text", "records"}));

    auto* constructions =
        app.add_subcommand("verify-constructions", "check the explicit matrix constructions");
    constructions->add_flag("--s4-census", s4_census, "print the full orbit-shape census");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(k_range, no_square_filter, verify, format);
        if (check->parsed()) return cmd_check_config(config_text);
        if (group->parsed())
            return cmd_group(group_path, want_mu, want_orbits, want_order, want_histogram, cap,
                             expect);
        if (table1->parsed()) return cmd_table1(format);
        if (constructions->parsed()) return cmd_verify_constructions(s4_census);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
