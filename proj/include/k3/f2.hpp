#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3/perm.hpp"

namespace k3 {

/// A vector in F_2^4 as a 4-bit value; coordinate 1 is the least
/// significant bit.
using F2Vec4 = std::uint8_t;

/// A 4x4 matrix over F_2, stored row-wise; row i is a 4-bit mask whose
/// bit j is the entry in column j.  Acts on column vectors: (Mv)_i is
/// the parity of row_i & v.
struct F2Mat4 {
    std::array<std::uint8_t, 4> rows{};

    static F2Mat4 identity() { return {{1, 2, 4, 8}}; }

    F2Vec4 apply(F2Vec4 v) const {
        F2Vec4 r = 0;
        for (int i = 0; i < 4; ++i)
            r |= static_cast<F2Vec4>((std::popcount(static_cast<unsigned>(rows[i] & v)) & 1) << i);
        return r;
    }

    /// Matrix product: (*this) * other, so apply(v) chains as
    /// this.apply(other.apply(v)).
    F2Mat4 mul(const F2Mat4& other) const {
        F2Mat4 r{};
        for (int j = 0; j < 4; ++j) {
            F2Vec4 col = apply(other.apply(static_cast<F2Vec4>(1 << j)));
            for (int i = 0; i < 4; ++i)
                if (col & (1 << i)) r.rows[i] |= static_cast<std::uint8_t>(1 << j);
        }
        return r;
    }

    bool is_invertible() const {
        // row reduce a copy
        std::array<std::uint8_t, 4> m = rows;
        for (int col = 0; col < 4; ++col) {
            int piv = -1;
            for (int r = col; r < 4; ++r)
                if (m[r] & (1 << col)) { piv = r; break; }
            if (piv < 0) return false;
            std::swap(m[col], m[piv]);
            for (int r = 0; r < 4; ++r)
                if (r != col && (m[r] & (1 << col))) m[r] ^= m[col];
        }
        return true;
    }

    /// Gauss-Jordan inverse; requires invertibility.
    F2Mat4 inverse() const {
        std::array<std::uint8_t, 4> m = rows;
        F2Mat4 inv = identity();
        for (int col = 0; col < 4; ++col) {
            int piv = -1;
            for (int r = col; r < 4; ++r)
                if (m[r] & (1 << col)) { piv = r; break; }
            if (piv < 0) throw std::invalid_argument("F2Mat4::inverse: matrix is singular");
            std::swap(m[col], m[piv]);
            std::swap(inv.rows[col], inv.rows[piv]);
            for (int r = 0; r < 4; ++r)
                if (r != col && (m[r] & (1 << col))) {
                    m[r] ^= m[col];
                    inv.rows[r] ^= inv.rows[col];
                }
        }
        return inv;
    }

    /// Minimal e >= 1 with M^e = identity; requires invertibility.
    int order() const {
        if (!is_invertible()) throw std::invalid_argument("F2Mat4::order: matrix is singular");
        F2Mat4 p = *this;
        int e = 1;
        while (!(p == identity())) {
            p = p.mul(*this);
            ++e;
        }
        return e;
    }

    /// Rows packed into 16 bits, for hashing and dense tables.
    std::uint16_t packed() const {
        return static_cast<std::uint16_t>(rows[0] | rows[1] << 4 | rows[2] << 8 | rows[3] << 12);
    }
    static F2Mat4 from_packed(std::uint16_t w) {
        return {{static_cast<std::uint8_t>(w & 15), static_cast<std::uint8_t>((w >> 4) & 15),
                 static_cast<std::uint8_t>((w >> 8) & 15), static_cast<std::uint8_t>((w >> 12) & 15)}};
    }

    bool operator==(const F2Mat4&) const = default;
    auto operator<=>(const F2Mat4&) const = default;
};

/// v -> linear*v + translation on the 16 points of F_2^4.
struct AffineMap4 {
    F2Mat4 linear;
    F2Vec4 translation = 0;

    static AffineMap4 identity() { return {F2Mat4::identity(), 0}; }
    static AffineMap4 translation_by(F2Vec4 a) { return {F2Mat4::identity(), a}; }

    F2Vec4 apply(F2Vec4 v) const { return linear.apply(v) ^ translation; }

    /// (*this) after other.
    AffineMap4 compose(const AffineMap4& other) const {
        return {linear.mul(other.linear),
                static_cast<F2Vec4>(linear.apply(other.translation) ^ translation)};
    }

    AffineMap4 pow(int e) const {
        AffineMap4 r = identity();
        for (int i = 0; i < e; ++i) r = r.compose(*this);
        return r;
    }

    bool operator==(const AffineMap4&) const = default;
};

/// The induced bijection of the 16 points, indexed by bit value.
inline Permutation to_permutation(const AffineMap4& m) {
    if (!m.linear.is_invertible())
        throw std::invalid_argument("to_permutation: linear part is singular");
    std::vector<int> images(16);
    for (int v = 0; v < 16; ++v) images[v] = m.apply(static_cast<F2Vec4>(v));
    return Permutation::from_images(images);
}

/// Parses "1100/0110/0011/0001": 4 rows of 4 bits, row entries column 1
/// first.  Returns nothing on malformed input.
inline std::optional<F2Mat4> parse_f2mat(const std::string& text) {
    F2Mat4 m{};
    int row = 0, col = 0;
    for (char ch : text) {
        if (ch == '/') {
            if (col != 4) return std::nullopt;
            ++row;
            col = 0;
            continue;
        }
        if (ch != '0' && ch != '1') return std::nullopt;
        if (row > 3 || col > 3) return std::nullopt;
        if (ch == '1') m.rows[row] |= static_cast<std::uint8_t>(1 << col);
        ++col;
    }
    if (row != 3 || col != 4) return std::nullopt;
    return m;
}

/// Parses "0101": 4 bits, coordinate 1 first.
inline std::optional<F2Vec4> parse_f2vec(const std::string& text) {
    if (text.size() != 4) return std::nullopt;
    F2Vec4 v = 0;
    for (int i = 0; i < 4; ++i) {
        if (text[i] != '0' && text[i] != '1') return std::nullopt;
        if (text[i] == '1') v |= static_cast<F2Vec4>(1 << i);
    }
    return v;
}

inline std::string format_f2vec(F2Vec4 v) {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i)
        if (v & (1 << i)) s[i] = '1';
    return s;
}

/// The matrix and vector constants of the two explicit constructions.
struct P511Constants {
    F2Mat4 xviii_x, xviii_y;  // order 4, order 2, product of order 3
    F2Mat4 xx_x, xx_y;
    F2Vec4 a, a_prime, b, c;
};

inline const P511Constants& p511_constants() {
    static const P511Constants k = [] {
        P511Constants c;
        c.xviii_x = *parse_f2mat("1100/0110/0011/0001");
        c.xviii_y = *parse_f2mat("1100/0100/0111/0001");
        c.xx_x = c.xviii_x;
        c.xx_y = *parse_f2mat("1100/0100/0010/0011");
        c.a = *parse_f2vec("1000");
        c.a_prime = *parse_f2vec("0100");
        c.b = *parse_f2vec("1111");
        c.c = *parse_f2vec("0101");
        return c;
    }();
    return k;
}

/// x^4 = y^2 = (xy)^3 = 1 and |<x,y>| = 24.
inline bool verify_s4_presentation(const F2Mat4& x, const F2Mat4& y) {
    if (!x.is_invertible() || !y.is_invertible())
        throw std::invalid_argument("verify_s4_presentation: singular generator");
    F2Mat4 id = F2Mat4::identity();
    if (!(x.mul(x).mul(x).mul(x) == id)) return false;
    if (!(y.mul(y) == id)) return false;
    F2Mat4 xy = x.mul(y);
    if (!(xy.mul(xy).mul(xy) == id)) return false;
    // closure, capped just above the target order
    std::set<F2Mat4> group{id};
    std::vector<F2Mat4> frontier{id};
    while (!frontier.empty()) {
        std::vector<F2Mat4> next;
        for (const auto& g : frontier)
            for (const auto& h : {x, y}) {
                F2Mat4 p = g.mul(h);
                if (group.insert(p).second) {
                    if (group.size() > 24) return false;
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    return group.size() == 24;
}

/// Orbit sizes of <generators> on the 15 nonzero vectors, ascending.
inline std::vector<int> linear_orbit_shape(const std::vector<F2Mat4>& generators) {
    for (const auto& g : generators)
        if (!g.is_invertible())
            throw std::invalid_argument("linear_orbit_shape: singular generator");
    std::array<bool, 16> seen{};
    std::vector<int> shape;
    for (int v = 1; v < 16; ++v) {
        if (seen[v]) continue;
        std::vector<F2Vec4> orbit{static_cast<F2Vec4>(v)};
        seen[v] = true;
        for (std::size_t h = 0; h < orbit.size(); ++h)
            for (const auto& g : generators) {
                F2Vec4 w = g.apply(orbit[h]);
                if (!seen[w]) {
                    seen[w] = true;
                    orbit.push_back(w);
                }
            }
        shape.push_back(static_cast<int>(orbit.size()));
    }
    std::sort(shape.begin(), shape.end());
    return shape;
}

namespace detail {
/// Checks (t_b x)^4 = (t_c y)^2 = t_a; a transcription error in the
/// constants shows up here, not downstream.
inline void require_p511_relations(const F2Mat4& x, const F2Mat4& y, F2Vec4 a, F2Vec4 b,
                                   F2Vec4 c, const char* which) {
    AffineMap4 tbx{x, b}, tcy{y, c};
    AffineMap4 ta = AffineMap4::translation_by(a);
    if (!(tbx.pow(4) == ta) || !(tcy.pow(2) == ta))
        throw std::runtime_error(std::string("relation check failed for case ") + which +
                                 ": (t_b x)^4 = (t_c y)^2 = t_a does not hold");
}
}  // namespace detail

/// The binary octahedral group as a 16-point permutation group,
/// generated by t_b.x and t_c.y of the first construction.
inline PermGroup build_O48(const P511Constants& k = p511_constants()) {
    detail::require_p511_relations(k.xviii_x, k.xviii_y, k.a, k.b, k.c, "xviii");
    return PermGroup::build({to_permutation({k.xviii_x, k.b}), to_permutation({k.xviii_y, k.c})});
}

/// Its degree-2 extension, adding the translation t_a'.
inline PermGroup build_O48_2(const P511Constants& k = p511_constants()) {
    detail::require_p511_relations(k.xx_x, k.xx_y, k.a, k.b, k.c, "xx");
    return PermGroup::build({to_permutation({k.xx_x, k.b}), to_permutation({k.xx_y, k.c}),
                             to_permutation(AffineMap4::translation_by(k.a_prime))});
}

/// All invertible matrices, packed.  |GL_4(2)| = 20160.
inline const std::vector<std::uint16_t>& gl4_elements() {
    static const std::vector<std::uint16_t> mats = [] {
        std::vector<std::uint16_t> out;
        for (std::uint32_t w = 0; w < 65536; ++w)
            if (F2Mat4::from_packed(static_cast<std::uint16_t>(w)).is_invertible())
                out.push_back(static_cast<std::uint16_t>(w));
        return out;
    }();
    return mats;
}

/// Orbit-size multisets of all faithful S4 actions on the nonzero
/// vectors: pairs (x, y) with x of order 4 (one representative per
/// conjugacy class, by conjugation invariance of shapes), y an
/// involution, (xy)^3 = 1 and |<x,y>| = 24.
inline std::set<std::vector<int>> classify_s4_shapes() {
    std::vector<F2Mat4> order4_reps, involutions;
    std::set<std::uint16_t> classified;
    for (std::uint16_t w : gl4_elements()) {
        F2Mat4 m = F2Mat4::from_packed(w);
        int ord = m.order();
        if (ord == 2) involutions.push_back(m);
        if (ord != 4 || classified.count(w)) continue;
        order4_reps.push_back(m);
        for (std::uint16_t gw : gl4_elements()) {
            F2Mat4 g = F2Mat4::from_packed(gw);
            classified.insert(g.mul(m).mul(g.inverse()).packed());
        }
    }
    std::set<std::vector<int>> shapes;
    for (const auto& x : order4_reps)
        for (const auto& y : involutions) {
            F2Mat4 xy = x.mul(y);
            if (!(xy.mul(xy).mul(xy) == F2Mat4::identity())) continue;
            if (!verify_s4_presentation(x, y)) continue;
            shapes.insert(linear_orbit_shape({x, y}));
        }
    return shapes;
}

}  // namespace k3
