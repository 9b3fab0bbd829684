#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace k3 {

using BigInt = boost::multiprecision::cpp_int;
using IntMat = std::vector<std::vector<BigInt>>;

inline IntMat identity_matrix(std::size_t n) {
    IntMat m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMat mat_product(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size();
    IntMat c(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

/// M = left * diag * right with left/right unimodular and the diagonal
/// entries forming a divisibility chain s1 | s2 | ...
struct SmithDecomposition {
    IntMat left;
    IntMat diag;
    IntMat right;
};

/// Smith normal form over the integers by row/column reduction; exact
/// big-integer arithmetic throughout.  The unimodular factors accumulate
/// the inverses of the applied elementary operations, so the invariant
/// input = left * diag * right holds at every step.
inline SmithDecomposition smith_normal_form(const IntMat& input) {
    std::size_t n = input.size();
    for (auto& row : input)
        if (row.size() != n) throw std::invalid_argument("smith_normal_form: matrix must be square");

    IntMat s = input;
    IntMat left = identity_matrix(n);   // inverse of accumulated row ops
    IntMat right = identity_matrix(n);  // inverse of accumulated col ops

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(s[a], s[b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(left[i][a], left[i][b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) std::swap(s[i][a], s[i][b]);
        std::swap(right[a], right[b]);
    };
    // row[dst] += f * row[src] on s; left absorbs the inverse
    auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t j = 0; j < n; ++j) s[dst][j] += f * s[src][j];
        for (std::size_t i = 0; i < n; ++i) left[i][src] -= f * left[i][dst];
    };
    // col[dst] += f * col[src] on s; right absorbs the inverse
    auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t i = 0; i < n; ++i) s[i][dst] += f * s[i][src];
        for (std::size_t j = 0; j < n; ++j) right[src][j] -= f * right[dst][j];
    };
    auto negate_row = [&](std::size_t t) {
        for (std::size_t j = 0; j < n; ++j) s[t][j] = -s[t][j];
        for (std::size_t i = 0; i < n; ++i) left[i][t] = -left[i][t];
    };

    auto clear_cross = [&](std::size_t t) {
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i)
                if (s[i][t] != 0) {
                    add_row(i, t, -(s[i][t] / s[t][t]));
                    if (s[i][t] != 0) { swap_rows(i, t); dirty = true; }
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (s[t][j] != 0) {
                    add_col(j, t, -(s[t][j] / s[t][t]));
                    if (s[t][j] != 0) { swap_cols(j, t); dirty = true; }
                }
            if (!dirty) break;
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        // pivot: smallest nonzero entry of the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (s[i][j] != 0 && (!found || abs(s[i][j]) < abs(s[pi][pj]))) {
                    pi = i; pj = j; found = true;
                }
        if (!found) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);
        clear_cross(t);

        // enforce the divisibility chain: the pivot must divide the block
        for (;;) {
            bool fixed = true;
            for (std::size_t i = t + 1; i < n && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (s[i][j] % s[t][t] != 0) {
                        add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
            clear_cross(t);
        }
        if (s[t][t] < 0) negate_row(t);
    }
    return {left, s, right};
}

/// Diagonal of the SNF as nonnegative integers.
inline std::vector<BigInt> smith_diagonal(const IntMat& m) {
    auto dec = smith_normal_form(m);
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < m.size(); ++i) d.push_back(abs(dec.diag[i][i]));
    return d;
}

}  // namespace k3
