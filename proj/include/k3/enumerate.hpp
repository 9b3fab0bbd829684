#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3/ade.hpp"
#include "k3/mathieu.hpp"
#include "k3/rational.hpp"

namespace k3 {

/// A singularity configuration: a canonically sorted multiset of ADE
/// types drawn from the 12-type catalog alphabet.
struct SingConfig {
    std::vector<AdeType> types;

    explicit SingConfig(std::vector<AdeType> ts) : types(std::move(ts)) {
        std::sort(types.begin(), types.end());
    }

    bool in_alphabet() const {
        return std::all_of(types.begin(), types.end(),
                           [](const AdeType& t) { return table1_lookup(t) != nullptr; });
    }

    long long rank() const {
        long long r = 0;
        for (const AdeType& t : types) r += t.rank;
        return r;
    }

    /// Stabilizer orders o_x, in multiset order.  Requires alphabet membership.
    std::vector<long long> stabilizer_orders() const {
        std::vector<long long> os;
        for (const AdeType& t : types) {
            const StabilizerRecord* rec = table1_lookup(t);
            if (!rec) throw std::invalid_argument("SingConfig: type outside catalog alphabet: " + t.str());
            os.push_back(rec->o_x);
        }
        return os;
    }

    long long discriminant_product() const { return disc_order(types); }

    auto operator<=>(const SingConfig&) const = default;

    std::string str() const {  // comma-separated tokens
        std::string out;
        for (const AdeType& t : types) {
            if (!out.empty()) out += ",";
            out += t.str();
        }
        return out;
    }
    std::string str_display() const {  // concatenated, e.g. "A_2A_4A_4A_6D_4"
        std::string out;
        for (const AdeType& t : types) out += t.str_display();
        return out;
    }
};

/// An accepted (group order, configuration) pair of the List.
struct ListEntry {
    long long order;
    SingConfig config;

    bool operator==(const ListEntry&) const = default;
    /// Canonical output order: by N descending, then multiset order.
    bool operator<(const ListEntry& o) const {
        if (order != o.order) return order > o.order;
        return config < o.config;
    }
};

/// Candidate group order from the rational identity
///   s = sum 1/o_i - (k - 4),  N = 24/s,
/// accepted only when s > 0, N is a positive integer, and every o_i
/// divides N.  Absence is the "no candidate" signal.
inline std::optional<long long> candidate_order(const SingConfig& config) {
    std::vector<long long> orders = config.stabilizer_orders();
    Rat s(0);
    for (long long o : orders) s += Rat(1, o);
    s -= Rat(static_cast<long long>(orders.size()) - 4);
    if (!(Rat(0) < s)) return std::nullopt;
    Rat n = Rat(24) / s;
    if (!n.is_integer()) return std::nullopt;
    long long N = n.num();
    for (long long o : orders)
        if (N % o != 0) return std::nullopt;
    return N;
}

/// Per-constraint verdicts for a (configuration, order) pair.
struct ConstraintReport {
    bool alphabet = false;        // all types in the 12-type catalog
    bool rank_20 = false;         // (i)
    bool rational_identity = false;  // (ii)
    bool divisibility = false;    // (iii)
    bool nonsquare_disc = false;  // (iv)
    bool k_in_4_5 = false;        // (v)

    bool all_pass() const {
        return alphabet && rank_20 && rational_identity && divisibility &&
               nonsquare_disc && k_in_4_5;
    }
};

inline ConstraintReport check_constraints(const SingConfig& config, long long group_order) {
    ConstraintReport rep;
    rep.alphabet = config.in_alphabet();
    if (!rep.alphabet) return rep;
    std::vector<long long> orders = config.stabilizer_orders();
    long long k = static_cast<long long>(orders.size());
    rep.rank_20 = config.rank() == 20;
    Rat lhs(0);
    for (long long o : orders) lhs += Rat(1, o);
    rep.rational_identity = lhs == Rat(k - 4) + Rat(24, group_order);
    rep.divisibility = std::all_of(orders.begin(), orders.end(),
                                   [&](long long o) { return group_order % o == 0; });
    rep.nonsquare_disc = !is_square(config.discriminant_product());
    rep.k_in_4_5 = k == 4 || k == 5;
    return rep;
}

/// Exhaustive search over multisets from the given alphabet with k in
/// [k_min, k_max], filtered by rank 20, candidate_order, and the
/// non-square discriminant test.  Canonically sorted, deterministic.
inline std::vector<ListEntry> enumerate_list_over(const std::vector<AdeType>& alphabet,
                                                  int k_min, int k_max,
                                                  bool require_rank20 = true,
                                                  bool require_nonsquare = true) {
    if (k_min < 1 || k_max > 20 || k_min > k_max)
        throw std::invalid_argument("enumerate_list: k range must lie in [1,20]");
    std::vector<ListEntry> out;
    std::vector<AdeType> stack;

    auto emit = [&]() {
        SingConfig cfg(stack);
        if (require_rank20 && cfg.rank() != 20) return;
        std::optional<long long> n = candidate_order(cfg);
        if (!n) return;
        if (require_nonsquare && is_square(cfg.discriminant_product())) return;
        out.push_back(ListEntry{*n, std::move(cfg)});
    };

    // non-decreasing type sequences with rank-sum pruning
    auto rec = [&](auto&& self, std::size_t first, long long rank_so_far) -> void {
        int k = static_cast<int>(stack.size());
        if (k >= k_min) emit();
        if (k == k_max) return;
        for (std::size_t i = first; i < alphabet.size(); ++i) {
            long long r = rank_so_far + alphabet[i].rank;
            if (require_rank20) {
                if (r > 20) continue;
                // max rank reachable with the remaining slots
                long long best = r + static_cast<long long>(k_max - k - 1) * 8;
                if (best < 20) continue;
            }
            stack.push_back(alphabet[i]);
            self(self, i, r);
            stack.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<AdeType> table1_alphabet() {
    std::vector<AdeType> al;
    for (const auto& rec : table1()) al.push_back(rec.ade);
    return al;
}

inline std::vector<ListEntry> enumerate_list(int k_min = 4, int k_max = 5,
                                             bool require_rank20 = true,
                                             bool require_nonsquare = true) {
    return enumerate_list_over(table1_alphabet(), k_min, k_max, require_rank20,
                               require_nonsquare);
}

/// Set difference against a reference transcription.
struct DiffReport {
    std::vector<ListEntry> missing;  // in reference, not in entries
    std::vector<ListEntry> extra;    // in entries, not in reference

    bool empty() const { return missing.empty() && extra.empty(); }
};

inline DiffReport diff_entries(const std::vector<ListEntry>& entries,
                               const std::vector<ListEntry>& reference) {
    auto key = [](const ListEntry& e) { return std::make_pair(e.order, e.config.types); };
    std::set<std::pair<long long, std::vector<AdeType>>> got, ref;
    for (const auto& e : entries) got.insert(key(e));
    for (const auto& e : reference) ref.insert(key(e));
    DiffReport rep;
    for (const auto& e : reference)
        if (!got.count(key(e))) rep.missing.push_back(e);
    for (const auto& e : entries)
        if (!ref.count(key(e))) rep.extra.push_back(e);
    std::sort(rep.missing.begin(), rep.missing.end());
    std::sort(rep.extra.begin(), rep.extra.end());
    return rep;
}

}  // namespace k3
