#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "k3/f2.hpp"
#include "k3/io.hpp"

using k3::AffineMap4;
using k3::F2Mat4;
using k3::F2Vec4;
using k3::Rat;

TEST_CASE("matrix parsing and packing round-trip") {
    auto m = k3::parse_f2mat("1100/0110/0011/0001");
    REQUIRE(m.has_value());
    CHECK(F2Mat4::from_packed(m->packed()) == *m);
    CHECK_FALSE(k3::parse_f2mat("1100/0110/0011").has_value());
    CHECK_FALSE(k3::parse_f2mat("1100/0110/0011/002").has_value());
    auto v = k3::parse_f2vec("0101");
    REQUIRE(v.has_value());
    CHECK(k3::format_f2vec(*v) == "0101");
    CHECK_FALSE(k3::parse_f2vec("01011").has_value());
}

TEST_CASE("matrix arithmetic") {
    F2Mat4 id = F2Mat4::identity();
    CHECK(id.order() == 1);
    const auto& k = k3::p511_constants();
    CHECK(k.xviii_x.order() == 4);
    CHECK(k.xviii_y.order() == 2);
    CHECK(k.xviii_x.mul(k.xviii_y).order() == 3);
    CHECK(k.xx_y.order() == 2);
    CHECK(k.xx_x.mul(k.xx_y).order() == 3);
    CHECK(k.xviii_x.mul(k.xviii_x.inverse()) == id);

    // apply matches mul on basis vectors
    for (int j = 0; j < 4; ++j) {
        F2Vec4 e = static_cast<F2Vec4>(1 << j);
        CHECK(k.xviii_x.apply(k.xviii_y.apply(e)) == k.xviii_x.mul(k.xviii_y).apply(e));
    }
}

TEST_CASE("presentation checks") {
    const auto& k = k3::p511_constants();
    CHECK(k3::verify_s4_presentation(k.xviii_x, k.xviii_y));
    CHECK(k3::verify_s4_presentation(k.xx_x, k.xx_y));
    // y = x^2 satisfies y^2 = 1 but breaks (xy)^3 = 1
    CHECK_FALSE(k3::verify_s4_presentation(k.xviii_x, k.xviii_x.mul(k.xviii_x)));
    // x = y = identity satisfies every relation but generates nothing
    CHECK_FALSE(k3::verify_s4_presentation(F2Mat4::identity(), F2Mat4::identity()));
}

TEST_CASE("affine maps and the induced 16-point permutations") {
    const auto& k = k3::p511_constants();
    // a translation is a product of eight transpositions
    k3::Permutation ta = k3::to_permutation(AffineMap4::translation_by(k.a));
    CHECK(ta.order() == 2);
    for (int p = 0; p < 16; ++p) CHECK(ta.apply(p) != p);

    // to_permutation is a homomorphism
    std::mt19937 rng(20160);
    const auto& gl = k3::gl4_elements();
    std::uniform_int_distribution<std::size_t> pick(0, gl.size() - 1);
    std::uniform_int_distribution<int> vec(0, 15);
    for (int trial = 0; trial < 30; ++trial) {
        AffineMap4 f{F2Mat4::from_packed(gl[pick(rng)]), static_cast<F2Vec4>(vec(rng))};
        AffineMap4 g{F2Mat4::from_packed(gl[pick(rng)]), static_cast<F2Vec4>(vec(rng))};
        CHECK(k3::to_permutation(f.compose(g)) ==
              k3::to_permutation(f).compose(k3::to_permutation(g)));
    }
    CHECK_THROWS_AS(k3::to_permutation({F2Mat4{{0, 0, 0, 0}}, 0}), std::invalid_argument);
}

TEST_CASE("the defining relations of the constructions hold") {
    const auto& k = k3::p511_constants();
    AffineMap4 ta = AffineMap4::translation_by(k.a);
    CHECK(AffineMap4{k.xviii_x, k.b}.pow(4) == ta);
    CHECK(AffineMap4{k.xviii_y, k.c}.pow(2) == ta);
    CHECK(AffineMap4{k.xx_x, k.b}.pow(4) == ta);
    CHECK(AffineMap4{k.xx_y, k.c}.pow(2) == ta);
}

TEST_CASE("binary octahedral construction and its extension") {
    const auto& k = k3::p511_constants();
    k3::PermGroup o48 = k3::build_O48();
    CHECK(o48.order() == 48);
    auto hist = o48.element_order_histogram();
    hist.validate(48);
    CHECK(hist.entries[2] == 1);  // the unique involution
    CHECK(o48.mu().value == Rat(4));

    k3::PermGroup o96 = k3::build_O48_2();
    CHECK(o96.order() == 96);
    // dropping the extra translation leaves the index-2 subgroup
    k3::PermGroup inner =
        k3::PermGroup::build({o96.generators()[0], o96.generators()[1]});
    CHECK(inner.order() == 48);
    CHECK(o96.contains(k3::to_permutation(AffineMap4::translation_by(k.a))));
    CHECK(o96.contains(k3::to_permutation(AffineMap4::translation_by(k.a_prime))));
}

TEST_CASE("a bad translation constant fails the relation gate") {
    k3::P511Constants bad = k3::p511_constants();
    bad.a = *k3::parse_f2vec("0001");
    CHECK_THROWS_AS(k3::build_O48(bad), std::runtime_error);
}

TEST_CASE("bundled constants file matches the compiled-in constants") {
    auto k = k3::load_p511_constants(k3::data_dir() + "/p511.txt");
    const auto& ref = k3::p511_constants();
    CHECK(k.xviii_x == ref.xviii_x);
    CHECK(k.xviii_y == ref.xviii_y);
    CHECK(k.xx_x == ref.xx_x);
    CHECK(k.xx_y == ref.xx_y);
    CHECK(k.a == ref.a);
    CHECK(k.a_prime == ref.a_prime);
    CHECK(k.b == ref.b);
    CHECK(k.c == ref.c);
}

TEST_CASE("general linear group census") {
    // (2^4-1)(2^4-2)(2^4-4)(2^4-8) = 20160
    CHECK(k3::gl4_elements().size() == 20160);
}

TEST_CASE("orbit shapes of the two linear pairs") {
    const auto& k = k3::p511_constants();
    CHECK(k3::linear_orbit_shape({k.xviii_x, k.xviii_y}) == std::vector<int>{1, 6, 8});
    CHECK(k3::linear_orbit_shape({k.xx_x, k.xx_y}) == std::vector<int>{1, 2, 12});
    // shapes are conjugation-invariant
    F2Mat4 g = *k3::parse_f2mat("0100/1000/0010/1001");
    REQUIRE(g.is_invertible());
    auto conj = [&](const F2Mat4& m) { return g.mul(m).mul(g.inverse()); };
    CHECK(k3::linear_orbit_shape({conj(k.xviii_x), conj(k.xviii_y)}) ==
          std::vector<int>{1, 6, 8});
}

TEST_CASE("census of orbit shapes of faithful 24-element actions") {
    auto shapes = k3::classify_s4_shapes();
    CHECK(shapes.size() == 9);
    std::set<std::vector<int>> expected{
        {3, 12},          {3, 4, 8},      {1, 2, 12},    {1, 6, 8},  {1, 3, 3, 4, 4},
        {1, 1, 1, 6, 6},  {1, 2, 6, 6},   {1, 3, 3, 8},  {1, 4, 4, 6}};
    CHECK(shapes == expected);
    // every shape partitions the 15 nonzero vectors
    for (const auto& s : shapes) {
        int total = 0;
        for (int part : s) total += part;
        CHECK(total == 15);
    }
}
