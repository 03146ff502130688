#include <doctest.h>

#include <cmath>
#include <set>
#include <tuple>
#include <vector>

#include "hexa/errors.hpp"
#include "hexa/gconv.hpp"
#include "hexa/rng.hpp"
#include "hexa/suite.hpp"

using namespace hexa;

namespace {

double max_diff(const std::vector<float>& a, const std::vector<float>& b) {
    REQUIRE(a.size() == b.size());
    double err = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        err = std::max(err, std::abs(static_cast<double>(a[i]) - b[i]));
    return err;
}

double max_diff(const std::vector<float>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double err = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        err = std::max(err, std::abs(static_cast<double>(a[i]) - b[i]));
    return err;
}

} // namespace

TEST_CASE("layer names round-trip") {
    CHECK(layer_from_name("first") == GLayer::First);
    CHECK(layer_from_name("full") == GLayer::Full);
    CHECK_THROWS_AS(layer_from_name("last"), ArgumentError);
}

TEST_CASE("index array shapes") {
    const IndexArray a = build_index_array(Flavor::C6, GLayer::First, 3);
    CHECK(a.h_out == 6);
    CHECK(a.h_in == 1);
    CHECK(a.radius == 1);
    CHECK(a.table.size() == 6u * 1 * 9);
    const IndexArray b = build_index_array(Flavor::D6, GLayer::Full, 5);
    CHECK(b.h_out == 12);
    CHECK(b.h_in == 12);
    CHECK(b.radius == 2);
    CHECK_THROWS_AS(build_index_array(Flavor::C6, GLayer::First, 4), ArgumentError);
    CHECK_THROWS_AS(build_index_array(Flavor::C6, GLayer::First, 3, 2), ArgumentError);
}

TEST_CASE("identity slice maps cells to themselves") {
    for (GLayer layer : {GLayer::First, GLayer::Full}) {
        const IndexArray I = build_index_array(Flavor::D6, layer, 5);
        const auto disk = hex_disk_mask(I.radius, I.side);
        for (int o = 0; o < I.h_in; ++o)
            for (int r = 0; r < I.side; ++r)
                for (int c = 0; c < I.side; ++c) {
                    const IndexEntry& e = I.at(0, o, r, c);
                    if (disk[static_cast<std::size_t>(r) * I.side + c] == 0) {
                        CHECK(e.orientation == -1);
                    } else {
                        CHECK(e == IndexEntry{layer == GLayer::First ? 0 : o, r, c});
                    }
                }
    }
}

TEST_CASE("every slice permutes the disk") {
    for (Flavor flavor : {Flavor::C6, Flavor::D6})
        for (GLayer layer : {GLayer::First, GLayer::Full}) {
            const IndexArray I = build_index_array(flavor, layer, 5);
            const auto disk = hex_disk_mask(I.radius, I.side);
            for (int j = 0; j < I.h_out; ++j)
                for (int o = 0; o < I.h_in; ++o) {
                    std::set<std::tuple<int, int, int>> seen;
                    for (int r = 0; r < I.side; ++r)
                        for (int c = 0; c < I.side; ++c) {
                            const IndexEntry& e = I.at(j, o, r, c);
                            if (disk[static_cast<std::size_t>(r) * I.side + c] == 0) {
                                CHECK(e.orientation == -1);
                                continue;
                            }
                            CHECK(e.orientation >= 0);
                            CHECK(disk[static_cast<std::size_t>(e.row) * I.side + e.col] == 1);
                            seen.insert({e.orientation, e.row, e.col});
                        }
                    CHECK(seen.size() == 3u * I.radius * (I.radius + 1) + 1);
                }
        }
}

TEST_CASE("rotation slice entries follow the inverse rotation") {
    const IndexArray I = build_index_array(Flavor::C6, GLayer::Full, 3);
    const int ctr = 1;
    // spatial: source of offset (1, 0) under r^-1 is (0, 1)
    for (int o = 0; o < 6; ++o) {
        const IndexEntry& e = I.at(1, o, ctr + 0, ctr + 1);
        CHECK(e.orientation == (o + 5) % 6);
        CHECK(e.row == ctr + 1);
        CHECK(e.col == ctr + 0);
    }
}

TEST_CASE("transform_filters gathers without arithmetic") {
    SplitMix64 rng(41);
    const HexFilter bank = random_filter_bank(rng, 2, 1, 1);
    const IndexArray I = build_index_array(Flavor::C6, GLayer::First, 3);
    const HexFilter tb = transform_filters(bank, I);
    CHECK(tb.out_channels == 12);
    CHECK(tb.in_channels == 1);
    CHECK(mask_is_clean(tb));
    // slice 0 is the untouched bank; the center cell is fixed by every slice
    for (int c = 0; c < 2; ++c) {
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col)
                CHECK(tb.at(c * 6 + 0, 0, r, col) == bank.at(c, 0, r, col));
        for (int j = 0; j < 6; ++j)
            CHECK(tb.at(c * 6 + j, 0, 1, 1) == bank.at(c, 0, 1, 1));
    }
}

TEST_CASE("transform_filters validates shape and mask") {
    SplitMix64 rng(42);
    const IndexArray I = build_index_array(Flavor::C6, GLayer::Full, 3);
    CHECK_THROWS_AS(transform_filters(random_filter_bank(rng, 1, 6, 2), I), ShapeError);
    CHECK_THROWS_AS(transform_filters(random_filter_bank(rng, 1, 4, 1), I), ShapeError);
    HexFilter dirty = random_filter_bank(rng, 1, 6, 1);
    dirty.data[2 * 9] = 1.0f; // corner of the second input plane
    CHECK_THROWS_AS(transform_filters(dirty, I), MaskViolation);
}

TEST_CASE("gconv_first matches the direct sum") {
    SplitMix64 rng(43);
    for (Flavor flavor : {Flavor::C6, Flavor::D6}) {
        const HexImage f = random_disk_image(rng, 3, 2);
        const HexFilter bank = random_filter_bank(rng, 2, 2, 1);
        const GFeatureMap out = gconv_first(f, bank, flavor);
        CHECK(out.map.channels == 2);
        CHECK(out.map.orientations == point_group_order(flavor));
        const std::vector<double> ref = gconv_reference(f, bank, flavor, GLayer::First);
        CHECK(max_diff(out.map.data, ref) < 1e-5);
        CHECK(mask_is_clean(out.map));
    }
}

TEST_CASE("gconv_full matches the direct sum") {
    SplitMix64 rng(44);
    for (Flavor flavor : {Flavor::C6, Flavor::D6}) {
        const int order = point_group_order(flavor);
        const GFeatureMap f{random_disk_image(rng, 3, 2, order), flavor};
        const HexFilter bank = random_filter_bank(rng, 2, 2 * order, 1);
        const GFeatureMap out = gconv_full(f, bank);
        CHECK(out.map.channels == 2);
        CHECK(out.map.orientations == order);
        const std::vector<double> ref = gconv_reference(f.map, bank, flavor, GLayer::Full);
        CHECK(max_diff(out.map.data, ref) < 1e-5);
    }
}

TEST_CASE("centered delta bank passes a G-map through unchanged") {
    SplitMix64 rng(45);
    const GFeatureMap f{random_disk_image(rng, 2, 1, 6), Flavor::C6};
    HexFilter bank(1, 6, 1);
    bank.at(0, 0, 1, 1) = 1.0f; // delta on orientation 0 at the window center
    const GFeatureMap out = gconv_full(f, bank);
    CHECK(out.map.data == f.map.data);
}

TEST_CASE("shape contracts") {
    SplitMix64 rng(46);
    CHECK_THROWS_AS(GFeatureMap(random_disk_image(rng, 1, 1, 3), Flavor::C6), ShapeError);
    CHECK_THROWS_AS(gconv_first(random_disk_image(rng, 2, 1, 6),
                                random_filter_bank(rng, 1, 1, 1), Flavor::C6),
                    ShapeError);
    const GFeatureMap f{random_disk_image(rng, 2, 1, 6), Flavor::C6};
    CHECK_THROWS_AS(gconv_full(f, random_filter_bank(rng, 1, 4, 1)), ShapeError);
}

TEST_CASE("group convolution is equivariant") {
    SplitMix64 rng(47);
    for (Flavor flavor : {Flavor::C6, Flavor::D6}) {
        const int order = point_group_order(flavor);
        const HexImage planar = random_disk_image(rng, 3, 1);
        const HexFilter bank1 = random_filter_bank(rng, 2, 1, 1);
        const GFeatureMap gmap{random_disk_image(rng, 3, 1, order), flavor};
        const HexFilter bank2 = random_filter_bank(rng, 2, order, 1);
        for (int gi : {1, order - 1}) {
            const GroupElement g = GroupElement::from_point(enumerate_point_group(flavor)[gi]);
            const GFeatureMap first_lhs = gconv_first(transform_feature_map(g, planar), bank1, flavor);
            const GFeatureMap first_rhs = transform_gmap(g, gconv_first(planar, bank1, flavor));
            CHECK(max_diff(first_lhs.map.data, first_rhs.map.data) < 1e-5);

            const GFeatureMap full_lhs = gconv_full(transform_gmap(g, gmap), bank2);
            const GFeatureMap full_rhs = transform_gmap(g, gconv_full(gmap, bank2));
            CHECK(max_diff(full_lhs.map.data, full_rhs.map.data) < 1e-5);
        }
    }
}

TEST_CASE("transform_gmap rejects flavor mixing") {
    SplitMix64 rng(48);
    const GFeatureMap f{random_disk_image(rng, 1, 1, 6), Flavor::C6};
    const GroupElement g = GroupElement::from_point(PointGroupElement::mirror());
    CHECK_THROWS_AS(transform_gmap(g, f), FlavorMismatch);
}

TEST_CASE("spatial pooling with window 0 is the identity") {
    SplitMix64 rng(49);
    const GFeatureMap f{random_disk_image(rng, 2, 2, 6), Flavor::C6};
    const GFeatureMap out = pool_orientations_spatial(f, 0);
    CHECK(out.map.data == f.map.data);
    CHECK_THROWS_AS(pool_orientations_spatial(f, -1), ArgumentError);
}

TEST_CASE("spatial pooling takes the max over valid disk neighbors") {
    GFeatureMap f{make_hex_disk(1, 1, 6), Flavor::C6};
    for (int o = 0; o < 6; ++o) {
        auto cell = f.map.cell_of({1, 0});
        f.map.at(0, o, cell->row, cell->col) = 3.0f + o;
        f.map.at(0, o, 1, 1) = -1.0f;
    }
    const GFeatureMap out = pool_orientations_spatial(f, 1);
    for (int o = 0; o < 6; ++o) {
        CHECK(out.map.at(0, o, 1, 1) == 3.0f + o);            // center sees (1, 0)
        CHECK(out.map.value(0, o, {-1, 0}) == 0.0f);          // too far from the peak
        CHECK(out.map.value(0, o, {1, -1}) == 3.0f + o);      // adjacent to the peak
    }
    CHECK(mask_is_clean(out.map));
}

TEST_CASE("invariant pooling reduces channels over orientations and sites") {
    GFeatureMap f{make_hex_disk(1, 2, 6), Flavor::C6};
    for (int o = 0; o < 6; ++o) f.map.at(0, o, 1, 1) = -2.0f - o;
    f.map.at(1, 3, 0, 1) = 9.0f;
    const std::vector<float> mx = pool_invariant(f, PoolMode::Max);
    CHECK(mx.size() == 2);
    CHECK(mx[0] == 0.0f);  // zeros elsewhere dominate the negative peak
    CHECK(mx[1] == 9.0f);
    const std::vector<float> mean = pool_invariant(f, PoolMode::Mean);
    CHECK(std::abs(mean[0] - (-2.0 - 3.0 - 4.0 - 5.0 - 6.0 - 7.0) / 42.0) < 1e-7);
    CHECK(std::abs(mean[1] - 9.0 / 42.0) < 1e-7);
}

TEST_CASE("invariant pooling is exactly invariant under the point group") {
    SplitMix64 rng(50);
    const GFeatureMap f{random_disk_image(rng, 2, 2, 12), Flavor::D6};
    const std::vector<float> base = pool_invariant(f, PoolMode::Max);
    for (int gi = 0; gi < 12; ++gi) {
        const GroupElement g = GroupElement::from_point(enumerate_point_group(Flavor::D6)[gi]);
        CHECK(pool_invariant(transform_gmap(g, f), PoolMode::Max) == base);
    }
}

TEST_CASE("transformed bank shapes cover all layer and group combinations") {
    SplitMix64 rng(51);
    for (Flavor flavor : {Flavor::C6, Flavor::D6})
        for (GLayer layer : {GLayer::First, GLayer::Full}) {
            const int order = point_group_order(flavor);
            const int h_in = layer == GLayer::First ? 1 : order;
            const int C = 3, K = 2;
            const HexFilter bank = random_filter_bank(rng, C, K * h_in, 1);
            const IndexArray I = build_index_array(flavor, layer, bank.side, bank.radius);
            const HexFilter tb = transform_filters(bank, I);
            CHECK(tb.out_channels == C * order);
            CHECK(tb.in_channels == K * h_in);
            CHECK(tb.side == bank.side);
            CHECK(tb.radius == bank.radius);
        }
}
