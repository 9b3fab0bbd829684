// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any fails.  Each criterion carries its runtime bound in code; exact
// equality everywhere (no floating point, no tolerances).

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "k3/io.hpp"

namespace {

int failures = 0;

/// Runs a check, times it against the stated budget, prints one line.
void criterion(int number, const std::string& title, double budget_seconds, bool (*body)()) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed > budget_seconds) {
        ok = false;
        error = "over time budget of " + std::to_string(budget_seconds) + " s";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ["
              << elapsed << " s / " << budget_seconds << " s]";
    if (!ok && !error.empty()) std::cout << " -- " << error;
    std::cout << "\n";
    if (!ok) ++failures;
}

using k3::AdeFamily;
using k3::AdeType;
using k3::Rat;

bool c1_table2_reproduction() {
    auto entries = k3::enumerate_list();
    return entries.size() == 56 && k3::verify_table2(entries).empty();
}

bool c2_k_range_confined() {
    auto wide = k3::enumerate_list(1, 10);
    for (const auto& e : wide) {
        std::size_t k = e.config.types.size();
        if (k != 4 && k != 5) return false;
    }
    return wide == k3::enumerate_list(4, 5);
}

bool c3_epsilon_table() {
    const long long expected[] = {24, 8, 6, 4, 4, 2, 3, 2};
    for (long long n = 1; n <= 8; ++n)
        if (k3::epsilon(n) != Rat(expected[n - 1])) return false;
    return true;
}

bool c4_catalog_cross_check() {
    for (const auto& rec : k3::table1()) {
        if (!(k3::discriminant_group(rec.ade) == rec.disc_invariants)) return false;
        // |det Gram| is the product of the SNF diagonal
        k3::BigInt det = 1;
        for (const k3::BigInt& d : k3::smith_diagonal(k3::gram_matrix(rec.ade))) det *= d;
        if (det != rec.d_x) return false;
    }
    return true;
}

bool mu_of_file(const std::string& name, long long expected) {
    auto gf = k3::load_group_file(k3::data_dir() + "/" + name);
    auto r = k3::PermGroup::build(gf.generators, {}, gf.degree).mu();
    return r.value == Rat(expected) && r.nontame_orders.empty();
}

bool c5_mu_a6() { return mu_of_file("a6.grp", 5); }
bool c5_mu_l27() { return mu_of_file("l27.grp", 5); }
bool c5_mu_o48() { return k3::build_O48().mu().value == Rat(4); }

bool c6_square_exclusions() {
    long long d_aa = k3::disc_order({{AdeFamily::A, 10}, {AdeFamily::A, 10}});
    long long d_aaa =
        k3::disc_order({{AdeFamily::A, 14}, {AdeFamily::A, 4}, {AdeFamily::A, 2}});
    return d_aa == 121 && k3::is_square(d_aa) && d_aaa == 225 && k3::is_square(d_aaa);
}

bool c7_constructions() {
    k3::PermGroup o48 = k3::build_O48();  // throws if the printed relations fail
    if (o48.order() != 48) return false;
    auto hist = o48.element_order_histogram();
    if (hist.entries[2] != 1) return false;
    return k3::build_O48_2().order() == 96;
}

bool c8_orbit_shapes() {
    const auto& k = k3::p511_constants();
    if (k3::linear_orbit_shape({k.xviii_x, k.xviii_y}) != std::vector<int>{1, 6, 8})
        return false;
    if (k3::linear_orbit_shape({k.xx_x, k.xx_y}) != std::vector<int>{1, 2, 12}) return false;
    auto shapes = k3::classify_s4_shapes();
    for (const std::vector<int>& want :
         {std::vector<int>{3, 12}, std::vector<int>{3, 4, 8}, std::vector<int>{1, 2, 12},
          std::vector<int>{1, 6, 8}, std::vector<int>{1, 3, 3, 4, 4}})
        if (!shapes.count(want)) return false;
    return true;
}

bool c9_m24_validation() {
    auto gf = k3::load_group_file(k3::data_dir() + "/m24.grp");
    k3::PermGroup m24 = k3::PermGroup::build(gf.generators, {0, 1, 2, 3, 4}, gf.degree);
    if (m24.order() != 244823040ULL) return false;
    auto sizes = m24.fundamental_orbit_sizes();
    if (sizes.size() < 5) return false;
    const std::size_t want[] = {24, 23, 22, 21, 20};
    for (int i = 0; i < 5; ++i)
        if (sizes[i] != want[i]) return false;
    return m24.stabilizer(0).order() == 10200960ULL;
}

bool c10_point_count_sweep() {
    auto entries = k3::enumerate_list();
    if (entries.size() != 56) return false;
    for (const auto& e : entries)
        if (!k3::check_point_count_relation(e.config.stabilizer_orders(), e.order, Rat(4)))
            return false;
    return true;
}

bool c11_oracle_equivalence() {
    // (a) brute force over a restricted alphabet matches the pruned search
    std::vector<AdeType> alphabet{{AdeFamily::A, 1}, {AdeFamily::A, 2},
                                  {AdeFamily::A, 3}, {AdeFamily::D, 4}};
    std::vector<k3::ListEntry> oracle;
    int m = static_cast<int>(alphabet.size());
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b)
            for (int c = b; c < m; ++c)
                for (int d = c; d < m; ++d) {
                    k3::SingConfig config({alphabet[a], alphabet[b], alphabet[c], alphabet[d]});
                    auto n = k3::candidate_order(config);
                    if (!n || k3::is_square(config.discriminant_product())) continue;
                    oracle.push_back({*n, config});
                }
    std::sort(oracle.begin(), oracle.end());
    if (k3::enumerate_list_over(alphabet, 4, 4, false) != oracle) return false;

    // (b) SNF reconstruction on 100 random matrices
    std::mt19937 rng(24);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> size(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = static_cast<std::size_t>(size(rng));
        k3::IntMat mat(n, std::vector<k3::BigInt>(n));
        for (auto& row : mat)
            for (auto& v : row) v = entry(rng);
        auto dec = k3::smith_normal_form(mat);
        if (k3::mat_product(dec.left, k3::mat_product(dec.diag, dec.right)) != mat)
            return false;
    }

    // (c) orbit-stabilizer identity on every constructed group
    for (const char* name : {"a5.grp", "a6.grp", "s6.grp", "l27.grp", "c8.grp"}) {
        auto gf = k3::load_group_file(k3::data_dir() + "/" + std::string(name));
        k3::PermGroup g = k3::PermGroup::build(gf.generators, {}, gf.degree);
        for (const auto& orbit : g.orbit_partition())
            if (orbit.size() * g.stabilizer(orbit[0]).order() != g.order()) return false;
    }
    k3::PermGroup o48 = k3::build_O48();
    for (const auto& orbit : o48.orbit_partition())
        if (orbit.size() * o48.stabilizer(orbit[0]).order() != o48.order()) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "default enumeration reproduces the bundled list, zero diff", 5.0,
              c1_table2_reproduction);
    criterion(2, "widening k to [1,10] yields solutions only at k = 4 and 5", 30.0,
              c2_k_range_confined);
    criterion(3, "epsilon(1..8) = (24,8,6,4,4,2,3,2) exactly", 1.0, c3_epsilon_table);
    criterion(4, "SNF discriminant groups and |det Gram| match the catalog", 5.0,
              c4_catalog_cross_check);
    criterion(5, "mu(A6) = 5 from the bundled file", 1.0, c5_mu_a6);
    criterion(5, "mu of the simple group of order 168 = 5", 1.0, c5_mu_l27);
    criterion(5, "mu of the constructed 48-element group = 4", 1.0, c5_mu_o48);
    criterion(6, "excluded configurations have square discriminants 121 and 225", 1.0,
              c6_square_exclusions);
    criterion(7, "constructions: order 48 with one involution; extension order 96", 1.0,
              c7_constructions);
    criterion(8, "orbit shapes {1,6,8} and {1,2,12}; census holds all five shapes", 60.0,
              c8_orbit_shapes);
    criterion(9, "degree-24 generators: order, 5-step chain, point stabilizer", 10.0,
              c9_m24_validation);
    criterion(10, "every accepted pair satisfies the point-count relation with mu = 4", 5.0,
              c10_point_count_sweep);
    criterion(11, "brute-force, reconstruction, and orbit-stabilizer oracles agree", 30.0,
              c11_oracle_equivalence);

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criterion check(s) failed\n";
    return 1;
}
