#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3/mathieu.hpp"
#include "k3/rational.hpp"

namespace k3 {

constexpr int kMaxDegree = 64;

/// A bijection on {0,...,degree-1}, degree <= 64.  Images pack into a
/// fixed-width array so composition is a flat loop.
class Permutation {
public:
    explicit Permutation(int degree) : degree_(degree) {
        check_degree(degree);
        for (int i = 0; i < degree_; ++i) img_[i] = static_cast<std::uint8_t>(i);
    }

    /// From a 0-based image list; rejects non-bijections.
    static Permutation from_images(const std::vector<int>& images) {
        check_degree(static_cast<int>(images.size()));
        Permutation p(static_cast<int>(images.size()));
        std::array<bool, kMaxDegree> seen{};
        for (int i = 0; i < p.degree_; ++i) {
            int v = images[i];
            if (v < 0 || v >= p.degree_ || seen[v])
                throw std::invalid_argument("Permutation: image list is not a bijection");
            seen[v] = true;
            p.img_[i] = static_cast<std::uint8_t>(v);
        }
        return p;
    }

    int degree() const { return degree_; }
    int apply(int point) const { return img_[point]; }

    bool is_identity() const {
        for (int i = 0; i < degree_; ++i)
            if (img_[i] != i) return false;
        return true;
    }

    /// Smallest point not fixed, or -1 for the identity.
    int first_moved_point() const {
        for (int i = 0; i < degree_; ++i)
            if (img_[i] != i) return i;
        return -1;
    }

    /// (*this) after other: point -> this(other(point)).
    Permutation compose(const Permutation& other) const {
        require_same_degree(other);
        Permutation r(degree_);
        for (int i = 0; i < degree_; ++i) r.img_[i] = img_[other.img_[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r(degree_);
        for (int i = 0; i < degree_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    /// Multiplicative order: lcm of cycle lengths.
    long long order() const {
        long long ord = 1;
        std::array<bool, kMaxDegree> seen{};
        for (int i = 0; i < degree_; ++i) {
            if (seen[i]) continue;
            long long len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    bool operator==(const Permutation& o) const {
        if (degree_ != o.degree_) return false;
        for (int i = 0; i < degree_; ++i)
            if (img_[i] != o.img_[i]) return false;
        return true;
    }

private:
    static void check_degree(int d) {
        if (d < 1 || d > kMaxDegree)
            throw std::invalid_argument("Permutation: degree must be in [1,64]");
    }
    void require_same_degree(const Permutation& o) const {
        if (degree_ != o.degree_)
            throw std::invalid_argument("Permutation: mixed degrees");
    }

    int degree_;
    std::array<std::uint8_t, kMaxDegree> img_{};
};

/// A permutation group with a base and strong generating set, built by a
/// deterministic Schreier-Sims.  Immutable once constructed.
class PermGroup {
public:
    /// Builds the chain.  base_prefix forces the leading base points
    /// (used for point stabilizers); later base points are the smallest
    /// point moved by the generator that required them.  degree is
    /// inferred from the generators when 0 (a generator-free group needs
    /// it spelled out to act on more than one point).
    static PermGroup build(const std::vector<Permutation>& generators,
                           const std::vector<int>& base_prefix = {}, int degree = 0) {
        PermGroup g;
        if (!generators.empty()) {
            g.degree_ = generators[0].degree();
            if (degree != 0 && degree != g.degree_)
                throw std::invalid_argument("PermGroup: degree does not match generators");
        } else {
            g.degree_ = degree == 0 ? 1 : degree;
            if (g.degree_ < 1 || g.degree_ > kMaxDegree)
                throw std::invalid_argument("PermGroup: degree must be in [1,64]");
        }
        for (const auto& p : generators)
            if (p.degree() != g.degree_)
                throw std::invalid_argument("PermGroup: generators of mixed degrees");
        g.generators_ = generators;
        for (int b : base_prefix) {
            if (b < 0 || b >= g.degree_)
                throw std::invalid_argument("PermGroup: base point out of range");
            g.base_.push_back(b);
        }
        for (const auto& p : generators)
            if (!p.is_identity()) g.strong_.push_back(p);
        g.schreier_sims();
        g.verify_chain();
        return g;
    }

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<int>& base() const { return base_; }

    unsigned long long order() const {
        unsigned long long n = 1;
        for (const auto& lvl : levels_) n *= lvl.orbit.size();
        return n;
    }

    bool contains(const Permutation& p) const {
        if (p.degree() != degree_)
            throw std::invalid_argument("PermGroup: degree mismatch in membership test");
        return !sift(p, 0).has_value();
    }

    /// Orbits of the natural action, each sorted, ordered by least point.
    std::vector<std::vector<int>> orbit_partition() const {
        std::vector<bool> seen(degree_, false);
        std::vector<std::vector<int>> orbits;
        for (int p = 0; p < degree_; ++p) {
            if (seen[p]) continue;
            std::vector<int> orbit{p};
            seen[p] = true;
            for (std::size_t h = 0; h < orbit.size(); ++h)
                for (const auto& g : generators_) {
                    int q = g.apply(orbit[h]);
                    if (!seen[q]) {
                        seen[q] = true;
                        orbit.push_back(q);
                    }
                }
            std::sort(orbit.begin(), orbit.end());
            orbits.push_back(std::move(orbit));
        }
        return orbits;
    }

    /// The stabilizer of a point as a group in its own right: rebuild the
    /// chain with the point as first base; the strong generators fixing
    /// it generate the stabilizer.
    PermGroup stabilizer(int point) const {
        if (point < 0 || point >= degree_)
            throw std::invalid_argument("PermGroup: stabilizer point out of range");
        PermGroup rebased = build(generators_, {point}, degree_);
        std::vector<Permutation> stab_gens;
        for (const auto& s : rebased.strong_)
            if (s.apply(point) == point) stab_gens.push_back(s);
        return build(stab_gens, {}, degree_);
    }

    /// Fundamental orbit sizes along the chain, in base order.
    std::vector<std::size_t> fundamental_orbit_sizes() const {
        std::vector<std::size_t> sizes;
        for (const auto& lvl : levels_) sizes.push_back(lvl.orbit.size());
        return sizes;
    }

    /// Exact element-order counts by depth-first transversal products.
    /// Refuses groups larger than the cap (default 10^6).
    OrderHistogram element_order_histogram(unsigned long long cap = 1000000) const {
        if (order() > cap)
            throw std::runtime_error("element_order_histogram: group too large for cap " +
                                     std::to_string(cap));
        OrderHistogram hist;
        Permutation acc(degree_);
        enumerate_rec(0, acc, hist);
        return hist;
    }

    struct MuResult {
        Rat value;
        std::vector<long long> nontame_orders;  // element orders > 8, if any
    };

    /// mu of the group via its order histogram.  Element orders above 8
    /// are reported on the warning channel, not silently dropped.
    MuResult mu(unsigned long long cap = 1000000) const {
        OrderHistogram hist = element_order_histogram(cap);
        MuResult r{k3::mu(hist), {}};
        for (auto& [ord, cnt] : hist.entries)
            if (!is_tame_order(ord)) r.nontame_orders.push_back(ord);
        return r;
    }

private:
    struct Level {
        std::vector<Permutation> gens;  // strong generators fixing all earlier bases
        std::vector<int> orbit;         // discovery order; orbit[0] is the base point
        // transversal[p] = coset rep u with u(base) = p, for p in the orbit
        std::vector<std::optional<Permutation>> transversal;
    };

    PermGroup() = default;

    void rebuild_level(std::size_t l) {
        Level& lvl = levels_[l];
        lvl.gens.clear();
        for (const auto& s : strong_) {
            bool fixes_earlier = true;
            for (std::size_t m = 0; m < l && fixes_earlier; ++m)
                fixes_earlier = s.apply(base_[m]) == base_[m];
            if (fixes_earlier) lvl.gens.push_back(s);
        }
        int b = base_[l];
        lvl.orbit = {b};
        lvl.transversal.assign(degree_, std::nullopt);
        lvl.transversal[b] = Permutation(degree_);
        for (std::size_t h = 0; h < lvl.orbit.size(); ++h) {
            int p = lvl.orbit[h];
            for (const auto& s : lvl.gens) {
                int q = s.apply(p);
                if (!lvl.transversal[q]) {
                    lvl.transversal[q] = s.compose(*lvl.transversal[p]);
                    lvl.orbit.push_back(q);
                }
            }
        }
    }

    /// Sifts p through levels from `from`; returns the stuck residue and
    /// the level it belongs to, or nothing if p sifts to the identity.
    std::optional<std::pair<Permutation, std::size_t>> strip(const Permutation& p,
                                                            std::size_t from) const {
        Permutation g = p;
        for (std::size_t l = from; l < levels_.size(); ++l) {
            int image = g.apply(base_[l]);
            if (!levels_[l].transversal[image]) return std::make_pair(g, l);
            g = levels_[l].transversal[image]->inverse().compose(g);
        }
        if (g.is_identity()) return std::nullopt;
        return std::make_pair(g, levels_.size());
    }

    std::optional<Permutation> sift(const Permutation& p, std::size_t from) const {
        auto r = strip(p, from);
        if (!r) return std::nullopt;
        return r->first;
    }

    /// Deterministic Schreier-Sims: verify levels deepest-first; any
    /// failing Schreier generator becomes a strong generator at the level
    /// it got stuck, and verification resumes there.
    void schreier_sims() {
        // every strong generator must move some base point
        for (const auto& s : strong_)
            if (moves_no_base(s)) base_.push_back(s.first_moved_point());
        levels_.assign(base_.size(), Level{});
        for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_level(l);
        if (levels_.empty()) return;

        std::size_t l = levels_.size() - 1;
        for (;;) {
            auto stuck = find_failing_schreier(l);
            if (stuck) {
                auto [residue, at] = *stuck;
                strong_.push_back(residue);
                if (at == levels_.size()) {
                    base_.push_back(residue.first_moved_point());
                    levels_.push_back(Level{});
                }
                for (std::size_t m = l + 1; m <= at; ++m) rebuild_level(m);
                l = at;
                continue;
            }
            if (l == 0) break;
            --l;
        }
    }

    /// First Schreier generator at level l that fails to sift through
    /// the deeper chain, with the level it got stuck at.
    std::optional<std::pair<Permutation, std::size_t>> find_failing_schreier(
        std::size_t l) const {
        const Level& lvl = levels_[l];
        for (int p : lvl.orbit)
            for (const auto& s : lvl.gens) {
                int q = s.apply(p);
                Permutation schreier =
                    lvl.transversal[q]->inverse().compose(s.compose(*lvl.transversal[p]));
                auto stuck = strip(schreier, l + 1);
                if (stuck) return stuck;
            }
        return std::nullopt;
    }

    bool moves_no_base(const Permutation& s) const {
        for (int b : base_)
            if (s.apply(b) != b) return false;
        return !s.is_identity();
    }

    void verify_chain() const {
        for (const auto& g : generators_)
            if (sift(g, 0).has_value())
                throw std::logic_error("PermGroup: generator fails to sift through chain");
    }

    void enumerate_rec(std::size_t l, const Permutation& acc, OrderHistogram& hist) const {
        if (l == levels_.size()) {
            hist.entries[acc.order()] += 1;
            return;
        }
        for (int p : levels_[l].orbit)
            enumerate_rec(l + 1, acc.compose(*levels_[l].transversal[p]), hist);
    }

    int degree_ = 1;
    std::vector<Permutation> generators_;
    std::vector<Permutation> strong_;
    std::vector<int> base_;
    std::vector<Level> levels_;
};

}  // namespace k3
