#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3/snf.hpp"

namespace k3 {

enum class AdeFamily { A, D, E };

/// A symbol A_n / D_n / E_n naming a negative definite root lattice.
struct AdeType {
    AdeFamily family;
    int rank;

    AdeType(AdeFamily f, int r) : family(f), rank(r) {
        bool ok = (f == AdeFamily::A && r >= 1) ||
                  (f == AdeFamily::D && r >= 4) ||
                  (f == AdeFamily::E && r >= 6 && r <= 8);
        if (!ok) throw std::invalid_argument("AdeType: invalid family/rank " + str());
    }

    auto operator<=>(const AdeType&) const = default;

    std::string str() const {
        static const char* fam = "ADE";
        return std::string(1, fam[static_cast<int>(family)]) + std::to_string(rank);
    }
    /// Paper-style token, e.g. "A_7".
    std::string str_display() const {
        static const char* fam = "ADE";
        return std::string(1, fam[static_cast<int>(family)]) + "_" + std::to_string(rank);
    }
};

/// Parses "A7" or "A_7".  Returns nothing on malformed input.
inline std::optional<AdeType> parse_ade(const std::string& tok) {
    if (tok.size() < 2) return std::nullopt;
    AdeFamily f;
    switch (tok[0]) {
        case 'A': f = AdeFamily::A; break;
        case 'D': f = AdeFamily::D; break;
        case 'E': f = AdeFamily::E; break;
        default: return std::nullopt;
    }
    std::size_t pos = (tok[1] == '_') ? 2 : 1;
    if (pos >= tok.size()) return std::nullopt;
    int r = 0;
    for (std::size_t i = pos; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
        r = r * 10 + (tok[i] - '0');
    }
    try {
        return AdeType(f, r);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

/// Invariant factors d1 | d2 | ... | dm of a finite abelian group; the
/// empty list is the trivial group.
struct AbelianInvariants {
    std::vector<long long> factors;

    long long order() const {
        long long p = 1;
        for (long long f : factors) p *= f;
        return p;
    }

    bool operator==(const AbelianInvariants&) const = default;

    std::string str() const {
        if (factors.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < factors.size();) {
            std::size_t j = i;
            while (j < factors.size() && factors[j] == factors[i]) ++j;
            if (!out.empty()) out += "x";
            out += "C" + std::to_string(factors[i]);
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }
};

/// Gram matrix of the named root lattice, negative definite convention:
/// -2 on the diagonal, +1 for Dynkin-adjacent nodes.  Node numbering:
/// A_n a path 1..n; D_n a path 1..(n-2) with n-1 and n both attached to
/// n-2; E_n a path 1..(n-1) with node n attached to node 3.
inline IntMat gram_matrix(const AdeType& t) {
    int n = t.rank;
    IntMat m(n, std::vector<BigInt>(n, 0));
    auto link = [&](int a, int b) { m[a][b] = 1; m[b][a] = 1; };
    for (int i = 0; i < n; ++i) m[i][i] = -2;
    switch (t.family) {
        case AdeFamily::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case AdeFamily::D:
            for (int i = 0; i + 1 < n - 2; ++i) link(i, i + 1);
            link(n - 3, n - 2);
            link(n - 3, n - 1);
            break;
        case AdeFamily::E:
            for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
            link(2, n - 1);
            break;
    }
    return m;
}

/// Invariant factors of the cokernel of the Gram matrix, via SNF.
inline AbelianInvariants discriminant_group(const AdeType& t) {
    AbelianInvariants inv;
    for (const BigInt& d : smith_diagonal(gram_matrix(t)))
        if (d > 1) inv.factors.push_back(static_cast<long long>(d));
    return inv;
}

/// One column of the stabilizer catalog.
struct StabilizerRecord {
    AdeType ade;
    std::string group_name;
    long long o_x;  // stabilizer order
    long long c_x;  // components of the resolution (= rank)
    AbelianInvariants disc_invariants;
    long long d_x;  // discriminant order
};

/// The 12-entry catalog: which finite subgroups of SL2 occur as tame
/// stabilizers, and the lattice data of the corresponding singularity.
/// Authoritative compiled-in data; the SNF computation cross-checks it.
inline const std::array<StabilizerRecord, 12>& table1() {
    static const std::array<StabilizerRecord, 12> records = {{
        {AdeType(AdeFamily::A, 1), "C2", 2, 1, {{2}}, 2},
        {AdeType(AdeFamily::A, 2), "C3", 3, 2, {{3}}, 3},
        {AdeType(AdeFamily::A, 3), "C4", 4, 3, {{4}}, 4},
        {AdeType(AdeFamily::A, 4), "C5", 5, 4, {{5}}, 5},
        {AdeType(AdeFamily::A, 5), "C6", 6, 5, {{6}}, 6},
        {AdeType(AdeFamily::A, 6), "C7", 7, 6, {{7}}, 7},
        {AdeType(AdeFamily::A, 7), "C8", 8, 7, {{8}}, 8},
        {AdeType(AdeFamily::D, 4), "Q8", 8, 4, {{2, 2}}, 4},
        {AdeType(AdeFamily::D, 5), "Q12", 12, 5, {{4}}, 4},
        {AdeType(AdeFamily::D, 6), "Q16", 16, 6, {{2, 2}}, 4},
        {AdeType(AdeFamily::E, 6), "T24", 24, 6, {{3}}, 3},
        {AdeType(AdeFamily::E, 7), "O48", 48, 7, {{2}}, 2},
    }};
    return records;
}

inline const StabilizerRecord* table1_lookup(const AdeType& t) {
    for (const auto& rec : table1())
        if (rec.ade == t) return &rec;
    return nullptr;
}

/// Order of the discriminant group of the orthogonal sum over a multiset
/// of types.  Works for any valid AdeType, not just the catalog alphabet.
inline long long disc_order(const std::vector<AdeType>& types) {
    if (types.empty()) throw std::invalid_argument("disc_order: empty multiset");
    long long product = 1;
    for (const AdeType& t : types) product *= discriminant_group(t).order();
    return product;
}

/// Exact integer square test.
inline bool is_square(long long n) {
    if (n < 1) throw std::invalid_argument("is_square: n must be positive");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

/// Minimal generator count of the l-primary part of the discriminant
/// group of the orthogonal sum: the number of invariant factors across
/// all summands divisible by l.
inline long long l_part_generator_count(const std::vector<AdeType>& types, long long l) {
    if (!is_prime(l)) throw std::invalid_argument("l_part_generator_count: l must be prime");
    long long count = 0;
    for (const AdeType& t : types)
        for (long long f : discriminant_group(t).factors)
            if (f % l == 0) ++count;
    return count;
}

}  // namespace k3
