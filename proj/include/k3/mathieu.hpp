#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "k3/rational.hpp"

namespace k3 {

/// Element-order distribution of a finite group: order -> count.
/// A valid histogram has exactly one identity element and total count
/// equal to the group order.
struct OrderHistogram {
    std::map<long long, long long> entries;

    long long total() const {
        long long t = 0;
        for (auto& [ord, cnt] : entries) t += cnt;
        return t;
    }

    /// Throws unless the histogram is well formed.  When a group order is
    /// supplied, additionally requires every order to divide it and the
    /// total to match.
    void validate(long long group_order = 0) const {
        auto it = entries.find(1);
        if (it == entries.end() || it->second != 1)
            throw std::invalid_argument("OrderHistogram: identity entry must have count 1");
        for (auto& [ord, cnt] : entries) {
            if (ord < 1 || cnt < 1)
                throw std::invalid_argument("OrderHistogram: orders and counts must be positive");
        }
        if (group_order > 0) {
            if (total() != group_order)
                throw std::invalid_argument("OrderHistogram: total count != group order");
            for (auto& [ord, cnt] : entries)
                if (group_order % ord != 0)
                    throw std::invalid_argument("OrderHistogram: element order does not divide group order");
        }
    }
};

/// The Mathieu character value at an element of order n:
///   epsilon(n) = 24 / (n * prod_{q prime, q | n} (1 + 1/q)).
/// An integer for every tame order; defined (as a rational) for all n >= 1.
inline Rat epsilon(long long n) {
    if (n < 1) throw std::invalid_argument("epsilon: n must be positive");
    Rat denom(n);
    long long m = n;
    for (long long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            denom *= Rat(q + 1, q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) denom *= Rat(m + 1, m);
    return Rat(24) / denom;
}

/// Orders admissible for tame symplectic automorphisms: 1 through 8.
inline bool is_tame_order(long long n) {
    if (n < 1) throw std::invalid_argument("is_tame_order: n must be positive");
    return n <= 8;
}

/// Invariant dimension mu(G) = (1/#G) * sum_g epsilon(ord(g)), computed
/// from an order histogram in exact rationals.
inline Rat mu(const OrderHistogram& hist) {
    hist.validate();
    Rat sum(0);
    for (auto& [ord, cnt] : hist.entries) sum += epsilon(ord) * Rat(cnt);
    return sum / Rat(hist.total());
}

/// Point-count consistency: sum 1/o_i = 24/N + k - mu, with k the number
/// of stabilizer orders supplied.  Exact equality or nothing.
inline bool check_point_count_relation(const std::vector<long long>& orders,
                                       long long group_order, const Rat& mu_value) {
    if (group_order < 1)
        throw std::invalid_argument("check_point_count_relation: group order must be positive");
    Rat lhs(0);
    for (long long o : orders) {
        if (o < 2) throw std::invalid_argument("check_point_count_relation: stabilizer orders must be >= 2");
        lhs += Rat(1, o);
    }
    Rat rhs = Rat(24, group_order) + Rat((long long)orders.size()) - mu_value;
    return lhs == rhs;
}

}  // namespace k3
