#include <catch2/catch_amalgamated.hpp>

#include "k3/mathieu.hpp"

using k3::OrderHistogram;
using k3::Rat;

TEST_CASE("epsilon takes the catalog values on tame orders") {
    // (order, value) pairs: 24, then 8, 6, 4, 4, 2, 3, 2
    const std::pair<long long, long long> expected[] = {
        {1, 24}, {2, 8}, {3, 6}, {4, 4}, {5, 4}, {6, 2}, {7, 3}, {8, 2}};
    for (auto [n, v] : expected) {
        CHECK(k3::epsilon(n) == Rat(v));
        CHECK(k3::is_tame_order(n));
    }
}

TEST_CASE("epsilon is defined beyond the tame range") {
    CHECK(k3::epsilon(9) == Rat(2));
    CHECK(k3::epsilon(11) == Rat(2));
    CHECK(k3::epsilon(12) == Rat(1));
    CHECK(k3::epsilon(23) == Rat(1));
    CHECK_FALSE(k3::is_tame_order(9));
    CHECK_THROWS_AS(k3::epsilon(0), std::invalid_argument);
    CHECK_THROWS_AS(k3::is_tame_order(-3), std::invalid_argument);
}

TEST_CASE("epsilon is multiplicatively consistent with its formula") {
    // epsilon(n) = 24 / psi(n) with psi multiplicative: psi(p^e) = p^e (1 + 1/p)
    CHECK(k3::epsilon(6) == Rat(24) / (Rat(6) * Rat(3, 2) * Rat(4, 3)));
    CHECK(k3::epsilon(8) == Rat(24) / (Rat(8) * Rat(3, 2)));
}

TEST_CASE("order histogram validation") {
    OrderHistogram ok{{{1, 1}, {2, 3}}};
    CHECK_NOTHROW(ok.validate());
    CHECK_NOTHROW(ok.validate(4));
    CHECK_THROWS_AS(ok.validate(5), std::invalid_argument);   // total mismatch
    OrderHistogram bad_order{{{1, 1}, {3, 3}}};
    CHECK_THROWS_AS(bad_order.validate(4), std::invalid_argument);  // 3 does not divide 4
    OrderHistogram no_identity{{{2, 3}}};
    CHECK_THROWS_AS(no_identity.validate(), std::invalid_argument);
    OrderHistogram two_identities{{{1, 2}}};
    CHECK_THROWS_AS(two_identities.validate(), std::invalid_argument);
}

TEST_CASE("mu on small histograms") {
    CHECK(k3::mu(OrderHistogram{{{1, 1}}}) == Rat(24));
    CHECK(k3::mu(OrderHistogram{{{1, 1}, {2, 1}}}) == Rat(16));  // (24 + 8) / 2
}

TEST_CASE("mu of the alternating group A6 is 5") {
    // orders: 1 identity, 45 involutions, 80 of order 3, 90 of order 4,
    // 144 of order 5
    OrderHistogram a6{{{1, 1}, {2, 45}, {3, 80}, {4, 90}, {5, 144}}};
    a6.validate(360);
    CHECK(k3::mu(a6) == Rat(5));
}

TEST_CASE("mu of the simple group of order 168 is 5") {
    OrderHistogram l27{{{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}}};
    l27.validate(168);
    CHECK(k3::mu(l27) == Rat(5));
}

TEST_CASE("point-count relation on an accepted configuration") {
    // stabilizer orders of A2 A4 A4 A6 D4, group order 20160, mu = 4
    std::vector<long long> orders{3, 5, 5, 7, 8};
    CHECK(k3::check_point_count_relation(orders, 20160, Rat(4)));
    CHECK_FALSE(k3::check_point_count_relation(orders, 20160, Rat(5)));
}

TEST_CASE("point-count relation rejects an impossible order set") {
    // sum 1/o = 1/2 but the right side is -1/2: exact arithmetic keeps
    // this from rounding its way to a pass
    CHECK_FALSE(k3::check_point_count_relation({3, 8, 48, 48}, 48, Rat(5)));
}

TEST_CASE("point-count relation rejects malformed input") {
    CHECK_THROWS_AS(k3::check_point_count_relation({1, 2}, 4, Rat(4)), std::invalid_argument);
    CHECK_THROWS_AS(k3::check_point_count_relation({2, 2}, 0, Rat(4)), std::invalid_argument);
}
