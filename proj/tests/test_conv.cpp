#include <doctest.h>

#include <cmath>
#include <vector>

#include "hexa/conv.hpp"
#include "hexa/errors.hpp"
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

HexFilter delta_filter() {
    HexFilter psi(1, 1, 1);
    psi.at(0, 0, 1, 1) = 1.0f;
    return psi;
}

} // namespace

TEST_CASE("backend names round-trip") {
    for (Backend b : {Backend::Axial, Backend::DoubleWidth, Backend::Offset})
        CHECK(backend_from_name(backend_name(b)) == b);
    CHECK(backend_from_name("double_width") == Backend::DoubleWidth);
    CHECK_THROWS_AS(backend_from_name("cube"), ArgumentError);
}

TEST_CASE("rect_correlate with a centered delta is the identity") {
    const std::vector<float> f{1.0f, 2.0f, 3.0f, 4.0f};
    std::vector<float> psi(9, 0.0f);
    psi[4] = 1.0f;
    CHECK(rect_correlate(f, 1, 2, 2, psi, 1, 3) == f);
}

TEST_CASE("rect_correlate shifts and zero-pads") {
    const std::vector<float> f{1.0f, 2.0f, 3.0f, 4.0f};
    std::vector<float> psi(9, 0.0f);
    psi[5] = 1.0f; // tap at (i=1, j=2): out(y, x) = f(y, x+1)
    CHECK(rect_correlate(f, 1, 2, 2, psi, 1, 3) == std::vector<float>{2.0f, 0.0f, 4.0f, 0.0f});
}

TEST_CASE("rect_correlate sums input channels") {
    const std::vector<float> f{1.0f, 2.0f, 3.0f, 4.0f, 10.0f, 20.0f, 30.0f, 40.0f};
    std::vector<float> psi(18, 0.0f);
    psi[4] = 1.0f;  // k = 0 delta
    psi[13] = 1.0f; // k = 1 delta
    CHECK(rect_correlate(f, 2, 2, 2, psi, 1, 3) ==
          std::vector<float>{11.0f, 22.0f, 33.0f, 44.0f});
}

TEST_CASE("rect_correlate validates its arguments") {
    const std::vector<float> f(4, 0.0f);
    const std::vector<float> psi(9, 0.0f);
    CHECK_THROWS_AS(rect_correlate(f, 1, 2, 2, psi, 1, 2), ArgumentError);
    CHECK_THROWS_AS(rect_correlate(f, 1, 3, 2, psi, 1, 3), ShapeError);
    CHECK_THROWS_AS(rect_correlate(f, 1, 2, 2, psi, 2, 3), ShapeError);
}

TEST_CASE("delta filter is the identity on every backend") {
    SplitMix64 rng(31);
    const HexImage f = random_disk_image(rng, 3, 1);
    for (Backend b : {Backend::Axial, Backend::DoubleWidth, Backend::Offset}) {
        const HexImage out = hexconv(f, delta_filter(), b);
        CHECK(out.data == f.data);
        CHECK(out.mask == f.mask);
        CHECK(out.anchor == f.anchor);
    }
}

TEST_CASE("uniform filter on a uniform disk counts valid neighbors") {
    HexImage f = make_hex_disk(1);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (f.mask[static_cast<std::size_t>(r) * 3 + c]) f.at(0, 0, r, c) = 1.0f;
    HexFilter psi(1, 1, 1);
    psi = apply_mask(psi);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (psi.in_disk(r, c)) psi.at(0, 0, r, c) = 1.0f;

    for (Backend b : {Backend::Axial, Backend::DoubleWidth, Backend::Offset}) {
        const HexImage out = hexconv(f, psi, b);
        CHECK(out.value(0, 0, {0, 0}) == 7.0f);  // whole disk in reach
        CHECK(out.value(0, 0, {1, 0}) == 4.0f);  // boundary site: 4 valid neighbors
        CHECK(out.value(0, 0, {-1, 1}) == 4.0f);
        CHECK(out.at(0, 0, 0, 0) == 0.0f);       // masked corner stays 0
        CHECK(out.at(0, 0, 2, 2) == 0.0f);
    }
}

TEST_CASE("backends are bitwise identical") {
    SplitMix64 rng(32);
    for (int i = 0; i < 10; ++i) {
        const int img_radius = 2 + static_cast<int>(rng.below(3));
        const int filt_radius = 1 + static_cast<int>(rng.below(2));
        const int K = 1 + static_cast<int>(rng.below(3));
        const int C = 1 + static_cast<int>(rng.below(3));
        const HexImage f = random_disk_image(rng, img_radius, K);
        const HexFilter psi = random_filter_bank(rng, C, K, filt_radius);
        const HexImage a = hexconv(f, psi, Backend::Axial);
        const HexImage d = hexconv(f, psi, Backend::DoubleWidth);
        const HexImage o = hexconv(f, psi, Backend::Offset);
        CHECK(a.data == d.data);
        CHECK(a.data == o.data);
    }
}

TEST_CASE("backends agree with the direct-sum oracle") {
    SplitMix64 rng(33);
    for (int i = 0; i < 5; ++i) {
        const HexImage f = random_disk_image(rng, 3, 2);
        const HexFilter psi = random_filter_bank(rng, 2, 2, 1);
        const HexImage want = hexconv_oracle(f, psi);
        for (Backend b : {Backend::Axial, Backend::DoubleWidth, Backend::Offset})
            CHECK(max_diff(hexconv(f, psi, b).data, want.data) < 1e-5);
    }
}

TEST_CASE("convolution output stays masked") {
    SplitMix64 rng(34);
    const HexImage f = random_disk_image(rng, 3, 1);
    HexFilter psi = random_filter_bank(rng, 2, 1, 1);
    for (Backend b : {Backend::Axial, Backend::DoubleWidth, Backend::Offset})
        CHECK(mask_is_clean(hexconv(f, psi, b)));
}

TEST_CASE("shape and mask contracts") {
    SplitMix64 rng(35);
    const HexImage f = random_disk_image(rng, 2, 2);
    CHECK_THROWS_AS(hexconv(f, random_filter_bank(rng, 1, 3, 1)), ShapeError);

    HexFilter dirty = random_filter_bank(rng, 1, 2, 1);
    dirty.data[0] = 1.0f; // corner outside the disk support
    CHECK_THROWS_AS(hexconv(f, dirty), MaskViolation);

    HexImage unclean = f;
    unclean.at(0, 0, 0, 0) = 1.0f; // masked-out corner of the disk buffer
    CHECK_THROWS_AS(hexconv(unclean, random_filter_bank(rng, 1, 2, 1)), MaskViolation);
}

TEST_CASE("translation equivariance is exact on the interior") {
    SplitMix64 rng(36);
    const int R = 3, FR = 1;
    const HexImage f = random_disk_image(rng, R, 1);
    const HexFilter psi = random_filter_bank(rng, 1, 1, FR);
    const AxialPoint t{1, 0};
    const GroupElement shift = GroupElement::translation(t, Flavor::C6);

    const HexImage base = hexconv(f, psi);
    const HexImage shifted = hexconv(transform_feature_map(shift, f), psi);
    int compared = 0;
    for (int r = 0; r < base.rows; ++r)
        for (int c = 0; c < base.cols; ++c) {
            const AxialPoint p = base.point_of(r, c);
            if (hex_distance({0, 0}, p) > R - FR) continue;
            if (hex_distance({0, 0}, p - t) > R - FR) continue;
            CHECK(shifted.value(0, 0, p) == base.value(0, 0, p - t));
            ++compared;
        }
    CHECK(compared > 0);
}

TEST_CASE("rotation relation between image and filter transforms") {
    SplitMix64 rng(37);
    const HexImage f = random_disk_image(rng, 3, 1);
    const HexFilter psi = random_filter_bank(rng, 1, 1, 1);
    const GroupElement r1 = GroupElement::from_point(PointGroupElement::rotation60(Flavor::C6));
    const HexImage lhs = hexconv(transform_feature_map(r1, f), psi);
    const HexImage rhs = transform_feature_map(r1, hexconv(f, rotate_filter(psi, 5)));
    CHECK(max_diff(lhs.data, rhs.data) < 1e-5);
}

TEST_CASE("convolution is linear") {
    SplitMix64 rng(38);
    const HexImage f = random_disk_image(rng, 2, 1);
    const HexImage g = random_disk_image(rng, 2, 1);
    const HexFilter psi = random_filter_bank(rng, 1, 1, 1);
    HexImage mix = f;
    for (std::size_t i = 0; i < mix.data.size(); ++i)
        mix.data[i] = 2.5f * f.data[i] - 1.25f * g.data[i];
    const HexImage want = hexconv(mix, psi);
    const HexImage yf = hexconv(f, psi);
    const HexImage yg = hexconv(g, psi);
    double err = 0.0;
    for (std::size_t i = 0; i < want.data.size(); ++i)
        err = std::max(err, std::abs(2.5 * yf.data[i] - 1.25 * yg.data[i] - want.data[i]));
    CHECK(err < 1e-5);
}

TEST_CASE("reference sums are double precision") {
    SplitMix64 rng(39);
    const HexImage f = random_disk_image(rng, 2, 2);
    const HexFilter psi = random_filter_bank(rng, 1, 2, 1);
    const std::vector<double> ref = hexconv_reference(f, psi);
    CHECK(ref.size() == f.plane_size());
    const HexImage oracle = hexconv_oracle(f, psi);
    for (std::size_t i = 0; i < ref.size(); ++i)
        CHECK(oracle.data[i] == static_cast<float>(ref[i]));
}
