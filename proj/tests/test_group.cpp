#include <doctest.h>

#include "hexa/errors.hpp"
#include "hexa/group.hpp"
#include "hexa/rng.hpp"

using namespace hexa;

namespace {

GroupElement rot(int k, Flavor flavor = Flavor::C6) {
    return GroupElement::from_point(enumerate_point_group(flavor)[k]);
}

} // namespace

TEST_CASE("point group orders") {
    CHECK(point_group_order(Flavor::C6) == 6);
    CHECK(point_group_order(Flavor::D6) == 12);
    CHECK(enumerate_point_group(Flavor::C6).size() == 6);
    CHECK(enumerate_point_group(Flavor::D6).size() == 12);
}

TEST_CASE("enumeration is canonical and distinct") {
    const auto& c6 = enumerate_point_group(Flavor::C6);
    const auto& d6 = enumerate_point_group(Flavor::D6);
    CHECK(c6[0].same_action(PointGroupElement::identity(Flavor::C6)));
    CHECK(d6[0].same_action(PointGroupElement::identity(Flavor::D6)));
    CHECK(c6[1].same_action(PointGroupElement::rotation60(Flavor::C6)));
    CHECK(d6[6].same_action(PointGroupElement::mirror()));
    for (std::size_t i = 0; i < d6.size(); ++i) {
        for (std::size_t j = i + 1; j < d6.size(); ++j) CHECK(!d6[i].same_action(d6[j]));
        CHECK(point_group_index(d6[i]) == static_cast<int>(i));
    }
    for (int i = 0; i < 6; ++i) CHECK(d6[i].same_action(c6[i].as_flavor(Flavor::D6)));
}

TEST_CASE("rotation has order 6, mirror order 2") {
    const PointGroupElement r = PointGroupElement::rotation60(Flavor::C6);
    PointGroupElement acc = PointGroupElement::identity(Flavor::C6);
    for (int k = 1; k <= 6; ++k) {
        acc = r.compose(acc);
        if (k < 6) CHECK(!acc.same_action(PointGroupElement::identity(Flavor::C6)));
    }
    CHECK(acc.same_action(PointGroupElement::identity(Flavor::C6)));
    const PointGroupElement m = PointGroupElement::mirror();
    CHECK(m.compose(m).same_action(PointGroupElement::identity(Flavor::D6)));
}

TEST_CASE("rotation composition is addition mod 6") {
    const auto& c6 = enumerate_point_group(Flavor::C6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(point_group_index(c6[a].compose(c6[b])) == (a + b) % 6);
}

TEST_CASE("point application matches the axial closed form") {
    const PointGroupElement r = PointGroupElement::rotation60(Flavor::C6);
    for (int u = -6; u <= 6; ++u)
        for (int v = -6; v <= 6; ++v)
            CHECK(r.apply(AxialPoint{u, v}) == axial_rotate60({u, v}));
}

TEST_CASE("mixed-flavor composition throws") {
    const PointGroupElement r6 = PointGroupElement::rotation60(Flavor::C6);
    const PointGroupElement rd = PointGroupElement::rotation60(Flavor::D6);
    CHECK_THROWS_AS(r6.compose(rd), FlavorMismatch);
}

TEST_CASE("flavor promotion keeps the action, demotion rejects mirrors") {
    const PointGroupElement r = PointGroupElement::rotation60(Flavor::C6);
    CHECK(r.as_flavor(Flavor::D6).flavor() == Flavor::D6);
    CHECK(r.as_flavor(Flavor::D6).same_action(r));
    const PointGroupElement back = r.as_flavor(Flavor::D6).as_flavor(Flavor::C6);
    CHECK(back == r);
    CHECK_THROWS_AS(PointGroupElement::mirror().as_flavor(Flavor::C6), UnsupportedTransform);
}

TEST_CASE("group composition follows the semidirect-product law") {
    const GroupElement a = rot(1);
    const GroupElement b = GroupElement::translation({1, 0}, Flavor::C6);
    const GroupElement ab = compose(a, b);
    CHECK(point_group_index(ab.h) == 1);
    CHECK(ab.t == AxialPoint{1, -1});
    CHECK(compose(GroupElement::identity(Flavor::C6), a) == a);
    CHECK(compose(a, GroupElement::identity(Flavor::C6)) == a);
}

TEST_CASE("inverses") {
    const GroupElement r1 = rot(1);
    CHECK(inverse(r1) == rot(5));
    CHECK(inverse(GroupElement::identity(Flavor::C6)) == GroupElement::identity(Flavor::C6));
    const GroupElement t = GroupElement::translation({2, -1}, Flavor::C6);
    CHECK(inverse(t) == GroupElement::translation({-2, 1}, Flavor::C6));
    SplitMix64 rng(11);
    const auto& d6 = enumerate_point_group(Flavor::D6);
    for (int i = 0; i < 100; ++i) {
        const GroupElement g{d6[rng.below(12)],
                             {static_cast<int>(rng.below(9)) - 4,
                              static_cast<int>(rng.below(9)) - 4}};
        CHECK(compose(g, inverse(g)) == GroupElement::identity(Flavor::D6));
        CHECK(compose(inverse(g), g) == GroupElement::identity(Flavor::D6));
    }
}

TEST_CASE("action on points") {
    CHECK(act_on_point(rot(1), {1, 0}) == AxialPoint{1, -1});
    CHECK(act_on_point(GroupElement::translation({3, 4}, Flavor::C6), {1, 0}) ==
          AxialPoint{4, 4});
    CHECK(act_on_point(GroupElement::identity(Flavor::D6), {-3, 7}) == AxialPoint{-3, 7});
}

TEST_CASE("action respects composition") {
    SplitMix64 rng(12);
    const auto& d6 = enumerate_point_group(Flavor::D6);
    for (int i = 0; i < 500; ++i) {
        auto pick = [&]() -> GroupElement {
            return {d6[rng.below(12)],
                    {static_cast<int>(rng.below(13)) - 6, static_cast<int>(rng.below(13)) - 6}};
        };
        const GroupElement g1 = pick(), g2 = pick();
        const AxialPoint p{static_cast<int>(rng.below(13)) - 6,
                           static_cast<int>(rng.below(13)) - 6};
        CHECK(act_on_point(compose(g1, g2), p) == act_on_point(g1, act_on_point(g2, p)));
    }
}

TEST_CASE("point-group actions preserve hex distance") {
    const auto& d6 = enumerate_point_group(Flavor::D6);
    for (const PointGroupElement& h : d6)
        for (int u = -3; u <= 3; ++u)
            for (int v = -3; v <= 3; ++v) {
                const AxialPoint p{u, v};
                const AxialPoint q{v - 1, -u + 2};
                CHECK(hex_distance(h.apply(p), h.apply(q)) == hex_distance(p, q));
            }
}

TEST_CASE("cube application preserves the cube constraint") {
    const auto& d6 = enumerate_point_group(Flavor::D6);
    for (const PointGroupElement& h : d6)
        for (int u = -4; u <= 4; ++u)
            for (int v = -4; v <= 4; ++v) {
                const CubePoint c = h.apply(axial_to_cube({u, v}));
                CHECK(c.x + c.y + c.z == 0);
            }
}
