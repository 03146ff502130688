#include "hexa/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <tuple>

#include "hexa/conv.hpp"
#include "hexa/errors.hpp"
#include "hexa/io.hpp"

namespace hexa {

namespace {

struct Runner {
    const SuiteOptions& opt;
    std::string suite;
    std::vector<PropertyResult> results;

    Runner(const SuiteOptions& o, std::string s) : opt(o), suite(std::move(s)) {}

    /// Exact property: passes iff err == 0.
    void exact(const std::string& name, double err, const std::string& detail = "") {
        results.push_back({suite, name, err == 0.0, err, 0.0, detail});
    }
    /// Approximate property with an explicit tolerance.
    void metric(const std::string& name, double err, double tol, const std::string& detail = "") {
        results.push_back({suite, name, err <= tol, err, tol, detail});
    }
    /// Approximate property governed by the run's --tolerance.
    void metric(const std::string& name, double err, const std::string& detail = "") {
        metric(name, err, opt.tolerance, detail);
    }
};

double max_abs_diff(const std::vector<float>& a, const std::vector<float>& b) {
    double err = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        err = std::max(err, std::abs(static_cast<double>(a[i]) - b[i]));
    return err;
}

double max_abs_diff(const std::vector<float>& a, const std::vector<double>& b) {
    double err = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        err = std::max(err, std::abs(static_cast<double>(a[i]) - b[i]));
    return err;
}

GroupElement point_element(Flavor flavor, int index) {
    return GroupElement::from_point(enumerate_point_group(flavor)[index]);
}

/// The single-slice gather T_{h_j}: bank channel c rearranged by slice j.
HexFilter gather_slice(const HexFilter& bank, const IndexArray& I, int j) {
    const int K = bank.in_channels / I.h_in;
    HexFilter out(bank.out_channels, bank.in_channels, I.radius, I.side);
    for (int c = 0; c < bank.out_channels; ++c)
        for (int k = 0; k < K; ++k)
            for (int o = 0; o < I.h_in; ++o)
                for (int r = 0; r < I.side; ++r)
                    for (int col = 0; col < I.side; ++col) {
                        const IndexEntry& e = I.at(j, o, r, col);
                        if (e.orientation < 0) continue;
                        out.at(c, k * I.h_in + o, r, col) =
                            bank.at(c, k * I.h_in + e.orientation, e.row, e.col);
                    }
    return out;
}

} // namespace

HexImage random_disk_image(SplitMix64& rng, int radius, int channels, int orientations) {
    HexImage img = make_hex_disk(radius, channels, orientations);
    for (int c = 0; c < channels; ++c)
        for (int o = 0; o < orientations; ++o)
            for (int r = 0; r < img.rows; ++r)
                for (int col = 0; col < img.cols; ++col)
                    if (img.mask[static_cast<std::size_t>(r) * img.cols + col])
                        img.at(c, o, r, col) = rng.uniform_pm1();
    return img;
}

HexFilter random_filter_bank(SplitMix64& rng, int out_channels, int in_channels, int radius) {
    HexFilter psi(out_channels, in_channels, radius);
    for (int c = 0; c < out_channels; ++c)
        for (int k = 0; k < in_channels; ++k)
            for (int r = 0; r < psi.side; ++r)
                for (int col = 0; col < psi.side; ++col)
                    if (psi.in_disk(r, col)) psi.at(c, k, r, col) = rng.uniform_pm1();
    return psi;
}

HexFilter rotate_filter(const HexFilter& psi, int steps) {
    const IndexArray I = build_index_array(Flavor::C6, GLayer::First, psi.side, psi.radius);
    return gather_slice(psi, I, ((steps % 6) + 6) % 6);
}

std::vector<PropertyResult> run_suite_coords(const SuiteOptions& opt) {
    Runner run(opt, "coords");

    {
        long violations = 0;
        for (int u = -32; u <= 32; ++u)
            for (int v = -32; v <= 32; ++v) {
                const AxialPoint p{u, v};
                const CubePoint c = axial_to_cube(p);
                if (c.x + c.y + c.z != 0) ++violations;
                if (cube_to_axial(c) != p) ++violations;
                if (offset_to_axial(axial_to_offset(p)) != p) ++violations;
                const DoubleWidthPoint d = axial_to_doublewidth(p);
                if ((d.col - d.row) % 2 != 0) ++violations;
                if (doublewidth_to_axial(d) != p) ++violations;
                const CubePoint rc = cube_rotate60(c);
                if (rc.x + rc.y + rc.z != 0) ++violations;
                const CubePoint mc = cube_mirror(c);
                if (mc.x + mc.y + mc.z != 0) ++violations;
            }
        // Offset and double-width rows are axial rows, so covering the axial
        // window covers them; also walk a raw offset window both ways.
        for (int row = -16; row <= 16; ++row)
            for (int col = -16; col <= 16; ++col) {
                const OffsetPoint o{row, col};
                if (axial_to_offset(offset_to_axial(o)) != o) ++violations;
            }
        run.exact("coordinate-round-trips", violations);
    }

    {
        long violations = 0;
        for (int u = -16; u <= 16; ++u)
            for (int v = -16; v <= 16; ++v) {
                const AxialPoint p{u, v};
                AxialPoint q = p;
                for (int k = 1; k <= 6; ++k) {
                    q = axial_rotate60(q);
                    const bool back = q == p;
                    if (k < 6 && back && !(p == AxialPoint{0, 0})) ++violations;
                    if (k == 6 && !back) ++violations;
                }
                const CubePoint c = axial_to_cube(p);
                if (cube_mirror(cube_mirror(c)) != c) ++violations;
            }
        run.exact("rotation-order-6-mirror-order-2", violations);
    }

    {
        // embed commutes with rotation: a fixed +60 degree matrix on the plane.
        const double c60 = 0.5, s60 = kHalfSqrt3;
        double err = 0.0;
        for (int u = -16; u <= 16; ++u)
            for (int v = -16; v <= 16; ++v) {
                const CartesianPoint e = embed({u, v});
                const CartesianPoint er = embed(axial_rotate60({u, v}));
                err = std::max(err, std::abs(er.px - (c60 * e.px - s60 * e.py)));
                err = std::max(err, std::abs(er.py - (s60 * e.px + c60 * e.py)));
            }
        run.metric("embedding-commutes-with-rotation", err, 1e-12);
    }

    {
        long violations = 0;
        for (int radius = 0; radius <= 5; ++radius) {
            const HexImage disk = make_hex_disk(radius);
            long count = 0;
            for (uint8_t m : disk.mask) count += m;
            if (count != 3L * radius * (radius + 1) + 1) ++violations;
        }
        run.exact("hex-disk-support-counts", violations);
    }

    {
        // The indexing map and its inverse over a 9x9 buffer.
        const HexImage img = make_hex_disk(4);
        long violations = 0;
        for (int r = 0; r < img.rows; ++r)
            for (int c = 0; c < img.cols; ++c) {
                const AxialPoint p = img.point_of(r, c);
                const auto cell = img.cell_of(p);
                if (!cell || cell->row != r || cell->col != c) ++violations;
                const auto right = img.cell_of({p.u + 1, p.v});
                if (c + 1 < img.cols && (!right || right->row != r || right->col != c + 1))
                    ++violations;
            }
        if (img.cell_of({0, 0}) != std::optional<Cell>(img.anchor)) ++violations;
        run.exact("buffer-index-invertible", violations);
    }

    {
        PlanarImage src;
        src.rows = 16;
        src.cols = 24;
        src.data.assign(static_cast<std::size_t>(src.rows) * src.cols, 0.6f);
        const HexImage hex = resample_square_to_hex(src, 1.0);
        long violations = 0;
        for (int r = 0; r < hex.rows; ++r)
            for (int c = 0; c < hex.cols; ++c) {
                const CartesianPoint e = embed(hex.point_of(r, c));
                const double x = e.px, y = -e.py;
                const bool inside = x >= 0 && x <= src.cols - 1 && y >= 0 && y <= src.rows - 1;
                const float v = hex.at(0, 0, r, c);
                if (inside && v != 0.6f) ++violations;
                if (!inside && v != 0.0f) ++violations;
            }
        run.exact("resample-preserves-constants", violations);
    }

    {
        PlanarImage src;
        src.rows = 16;
        src.cols = 24;
        src.data.resize(static_cast<std::size_t>(src.rows) * src.cols);
        // PGM-normalized values in [0, 1]: float storage keeps ~1e-7 accuracy
        for (int y = 0; y < src.rows; ++y)
            for (int x = 0; x < src.cols; ++x)
                src.at(y, x) = 0.1f + 0.8f * static_cast<float>(x) / 23.0f;
        const HexImage hex = resample_square_to_hex(src, 0.75);
        double err = 0.0;
        for (int r = 0; r < hex.rows; ++r)
            for (int c = 0; c < hex.cols; ++c) {
                const CartesianPoint e = embed(hex.point_of(r, c));
                const double x = 0.75 * e.px, y = -0.75 * e.py;
                if (x < 0 || x > src.cols - 1 || y < 0 || y > src.rows - 1) continue;
                err = std::max(err, std::abs(hex.at(0, 0, r, c) - (0.1 + 0.8 * x / 23.0)));
            }
        run.metric("resample-reproduces-ramps", err, 1e-6);
    }

    {
        SplitMix64 rng(opt.seed);
        HexImage img = make_hex_disk(2, 2);
        for (float& v : img.data) v = rng.uniform_pm1(); // corners too
        const HexImage once = apply_mask(img);
        const HexImage twice = apply_mask(once);
        double err = max_abs_diff(once.data, twice.data);
        if (!mask_is_clean(once)) err = std::max(err, 1.0);
        HexImage ones = make_hex_disk(1);
        for (float& v : ones.data) v = 1.0f;
        const HexImage masked = apply_mask(ones);
        long zeroed = 0;
        for (float v : masked.data) zeroed += v == 0.0f;
        if (zeroed != 2) err = std::max(err, 1.0);
        run.exact("apply-mask-idempotent", err);
    }

    return run.results;
}

std::vector<PropertyResult> run_suite_groups(const SuiteOptions& opt) {
    Runner run(opt, "groups");

    std::vector<GroupElement> window;
    for (const PointGroupElement& h : enumerate_point_group(Flavor::D6))
        for (int tu = -2; tu <= 2; ++tu)
            for (int tv = -2; tv <= 2; ++tv) window.push_back({h, {tu, tv}});
    const GroupElement e = GroupElement::identity(Flavor::D6);

    {
        long violations = 0;
        for (const GroupElement& a : window) {
            if (!(compose(e, a) == a) || !(compose(a, e) == a)) ++violations;
            if (!(compose(a, inverse(a)) == e) || !(compose(inverse(a), a) == e)) ++violations;
            for (const GroupElement& b : window) {
                const GroupElement ab = compose(a, b);
                point_group_index(ab.h); // closure: the point part stays in D6
                const AxialPoint probe{1, -2};
                if (act_on_point(ab, probe) != act_on_point(a, act_on_point(b, probe)))
                    ++violations;
            }
        }
        run.exact("identity-inverse-closure-exhaustive", violations);
    }

    {
        long violations = 0;
        for (std::size_t ia = 0; ia < window.size(); ++ia)
            for (std::size_t ib = 0; ib < window.size(); ++ib) {
                const GroupElement ab = compose(window[ia], window[ib]);
                for (std::size_t ic = 0; ic < window.size(); ++ic)
                    if (!(compose(ab, window[ic]) ==
                          compose(window[ia], compose(window[ib], window[ic]))))
                        ++violations;
            }
        run.exact("associativity-exhaustive", violations);
    }

    {
        long violations = 0;
        const auto& c6 = enumerate_point_group(Flavor::C6);
        PointGroupElement acc = PointGroupElement::identity(Flavor::C6);
        for (int k = 0; k < 6; ++k) acc = PointGroupElement::rotation60(Flavor::C6).compose(acc);
        if (!(acc == PointGroupElement::identity(Flavor::C6))) ++violations;
        const PointGroupElement m = PointGroupElement::mirror();
        if (!m.compose(m).same_action(PointGroupElement::identity(Flavor::D6))) ++violations;
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                if (point_group_index(c6[a].compose(c6[b])) != (a + b) % 6) ++violations;
        run.exact("order-relations-and-mod-6", violations);
    }

    {
        SplitMix64 rng(opt.seed);
        const auto& d6 = enumerate_point_group(Flavor::D6);
        long violations = 0;
        for (int i = 0; i < 1000; ++i) {
            auto pick = [&]() -> GroupElement {
                return {d6[rng.below(12)],
                        {static_cast<int>(rng.below(17)) - 8, static_cast<int>(rng.below(17)) - 8}};
            };
            const GroupElement g1 = pick(), g2 = pick();
            const AxialPoint p{static_cast<int>(rng.below(17)) - 8,
                               static_cast<int>(rng.below(17)) - 8};
            const AxialPoint q{static_cast<int>(rng.below(17)) - 8,
                               static_cast<int>(rng.below(17)) - 8};
            if (act_on_point(compose(g1, g2), p) != act_on_point(g1, act_on_point(g2, p)))
                ++violations;
            if (act_on_point(e, p) != p) ++violations;
            if (hex_distance(act_on_point(g1, p), act_on_point(g1, q)) != hex_distance(p, q))
                ++violations;
        }
        run.exact("action-and-distance-invariance", violations);
    }

    {
        long violations = 0;
        const auto& c6 = enumerate_point_group(Flavor::C6);
        const auto& d6 = enumerate_point_group(Flavor::D6);
        if (c6.size() != 6 || d6.size() != 12) ++violations;
        for (std::size_t i = 0; i < d6.size(); ++i)
            for (std::size_t j = i + 1; j < d6.size(); ++j)
                if (d6[i].same_action(d6[j])) ++violations;
        if (!c6[0].same_action(PointGroupElement::identity(Flavor::C6))) ++violations;
        for (int i = 0; i < 6; ++i)
            if (!d6[i].same_action(c6[i].as_flavor(Flavor::D6))) ++violations;
        run.exact("enumeration-distinct-canonical", violations);
    }

    return run.results;
}

namespace {

struct ConvInstance {
    HexImage image;
    HexFilter filter;
};

ConvInstance make_conv_instance(SplitMix64& rng, int index) {
    SplitMix64 sub = rng.split();
    const int img_radius = static_cast<int>(sub.below(6));       // 0..5
    const int filt_radius = 1 + static_cast<int>(sub.below(2));  // 1..2
    const int K = 1 + static_cast<int>(sub.below(4));
    const int C = 1 + static_cast<int>(sub.below(4));
    (void)index;
    ConvInstance inst;
    inst.image = random_disk_image(sub, img_radius, K);
    inst.filter = random_filter_bank(sub, C, K, filt_radius);
    return inst;
}

} // namespace

std::vector<PropertyResult> run_suite_conv(const SuiteOptions& opt) {
    Runner run(opt, "conv");
    SplitMix64 rng(opt.seed);

    {
        double err = 0.0;
        double mask_err = 0.0;
        std::string detail;
        SplitMix64 gen = rng.split();
        for (int i = 0; i < 50; ++i) {
            const ConvInstance inst = make_conv_instance(gen, i);
            const HexImage a = hexconv_axial(inst.image, inst.filter);
            const HexImage d = hexconv_double_width(inst.image, inst.filter);
            const HexImage o = hexconv_offset(inst.image, inst.filter);
            const std::vector<double> ref = hexconv_reference(inst.image, inst.filter);
            const double inst_err =
                std::max({max_abs_diff(a.data, d.data), max_abs_diff(a.data, o.data),
                          max_abs_diff(a.data, ref), max_abs_diff(d.data, ref),
                          max_abs_diff(o.data, ref)});
            if (!mask_is_clean(a) || !mask_is_clean(d) || !mask_is_clean(o)) mask_err += 1.0;
            if (inst_err > opt.tolerance && detail.empty()) {
                detail = "instance " + std::to_string(i);
                if (opt.dump_on_failure) {
                    const std::string base = opt.dump_dir + "/conv_equivalence_" +
                                             std::to_string(i);
                    save_hext(base + "_input.hext", inst.image);
                    save_hext(base + "_filter.hext", inst.filter);
                    save_hext(base + "_axial.hext", a);
                    detail += ", dumped " + base + "_{input,filter,axial}.hext";
                }
            }
            err = std::max(err, inst_err);
        }
        run.metric("backend-equivalence-vs-oracle", err, detail);
        run.exact("mask-discipline-after-conv", mask_err);
    }

    {
        // Exact translation equivariance away from the boundary.
        SplitMix64 gen = rng.split();
        long violations = 0;
        long compared = 0;
        const AxialPoint shifts[] = {{1, 0}, {0, 1}, {-1, 2}, {2, -1}};
        for (int i = 0; i < 12; ++i) {
            SplitMix64 sub = gen.split();
            const int K = 1 + static_cast<int>(sub.below(2));
            const int C = 1 + static_cast<int>(sub.below(2));
            const int fr = 1 + static_cast<int>(sub.below(2));
            const int R = 4;
            const HexImage f = random_disk_image(sub, R, K);
            const HexFilter psi = random_filter_bank(sub, C, K, fr);
            const AxialPoint t = shifts[i % 4];
            const GroupElement shift = GroupElement::translation(t, Flavor::C6);
            const HexImage conv_shifted = hexconv(transform_feature_map(shift, f), psi);
            const HexImage conv_plain = hexconv(f, psi);
            const AxialPoint origin{0, 0};
            for (int r = 0; r < f.rows; ++r)
                for (int col = 0; col < f.cols; ++col) {
                    const AxialPoint p = f.point_of(r, col);
                    if (hex_distance(origin, p) > R - fr) continue;
                    if (hex_distance(origin, p - t) > R - fr) continue;
                    for (int c = 0; c < C; ++c) {
                        ++compared;
                        if (conv_shifted.value(c, 0, p) != conv_plain.value(c, 0, p - t))
                            ++violations;
                    }
                }
        }
        run.exact("translation-equivariance-interior", violations,
                  std::to_string(compared) + " interior sites compared");
    }

    {
        // Rotation relation: conv of a rotated image equals the rotated conv
        // with the inversely rotated filter.
        SplitMix64 gen = rng.split();
        double err = 0.0;
        for (int i = 0; i < 6; ++i) {
            SplitMix64 sub = gen.split();
            const int K = 1 + static_cast<int>(sub.below(2));
            const int C = 1 + static_cast<int>(sub.below(2));
            const int fr = 1 + static_cast<int>(sub.below(2));
            const HexImage f = random_disk_image(sub, 4, K);
            const HexFilter psi = random_filter_bank(sub, C, K, fr);
            for (int a = 0; a < 6; ++a) {
                const GroupElement rot = point_element(Flavor::C6, a);
                const HexImage lhs = hexconv(transform_feature_map(rot, f), psi);
                const HexImage rhs =
                    transform_feature_map(rot, hexconv(f, rotate_filter(psi, (6 - a) % 6)));
                err = std::max(err, max_abs_diff(lhs.data, rhs.data));
            }
        }
        run.metric("rotation-relation", err);
    }

    {
        SplitMix64 gen = rng.split();
        double err = 0.0;
        for (int i = 0; i < 8; ++i) {
            SplitMix64 sub = gen.split();
            const int K = 1 + static_cast<int>(sub.below(3));
            const int C = 1 + static_cast<int>(sub.below(3));
            const HexImage f = random_disk_image(sub, 3, K);
            const HexImage g = random_disk_image(sub, 3, K);
            const HexFilter psi = random_filter_bank(sub, C, K, 1);
            const float alpha = 2.5f, beta = -1.25f;
            HexImage combo = f;
            for (std::size_t n = 0; n < combo.data.size(); ++n)
                combo.data[n] = alpha * f.data[n] + beta * g.data[n];
            const HexImage lhs = hexconv(combo, psi);
            const HexImage cf = hexconv(f, psi);
            const HexImage cg = hexconv(g, psi);
            for (std::size_t n = 0; n < lhs.data.size(); ++n)
                err = std::max(err, std::abs(static_cast<double>(lhs.data[n]) -
                                             (alpha * static_cast<double>(cf.data[n]) +
                                              beta * static_cast<double>(cg.data[n]))));
        }
        run.metric("linearity", err);
    }

    {
        // The correlation primitive against an independently coded quad loop.
        SplitMix64 sub = rng.split();
        const int K = 2, C = 2, H = 6, W = 6, S = 3;
        std::vector<float> f(static_cast<std::size_t>(K) * H * W);
        std::vector<float> psi(static_cast<std::size_t>(C) * K * S * S);
        for (float& v : f) v = sub.uniform_pm1();
        for (float& v : psi) v = sub.uniform_pm1();
        const std::vector<float> got = rect_correlate(f, K, H, W, psi, C, S);
        double err = 0.0;
        for (int c = 0; c < C; ++c)
            for (int y = 0; y < H; ++y)
                for (int x = 0; x < W; ++x) {
                    double acc = 0.0;
                    for (int k = 0; k < K; ++k)
                        for (int dy = -1; dy <= 1; ++dy)
                            for (int dx = -1; dx <= 1; ++dx) {
                                const int sy = y + dy, sx = x + dx;
                                if (sy < 0 || sy >= H || sx < 0 || sx >= W) continue;
                                acc += static_cast<double>(
                                           f[(static_cast<std::size_t>(k) * H + sy) * W + sx]) *
                                       psi[((static_cast<std::size_t>(c) * K + k) * S + dy + 1) *
                                               S +
                                           dx + 1];
                            }
                    err = std::max(err,
                                   std::abs(acc - got[(static_cast<std::size_t>(c) * H + y) * W +
                                                      x]));
                }
        run.metric("rect-correlate-direct-sum", err, 1e-6);
    }

    return run.results;
}

std::vector<PropertyResult> run_suite_gconv(const SuiteOptions& opt) {
    Runner run(opt, "gconv");
    SplitMix64 rng(opt.seed);

    {
        long violations = 0;
        for (Flavor flavor : {Flavor::C6, Flavor::D6})
            for (GLayer layer : {GLayer::First, GLayer::Full})
                for (int side : {3, 5}) {
                    const IndexArray I = build_index_array(flavor, layer, side);
                    const int ctr = (side - 1) / 2;
                    for (int j = 0; j < I.h_out; ++j) {
                        std::set<std::tuple<int, int, int>> seen;
                        long disk_cells = 0;
                        for (int o = 0; o < I.h_in; ++o)
                            for (int r = 0; r < side; ++r)
                                for (int c = 0; c < side; ++c) {
                                    const AxialPoint d{c - ctr, r - ctr};
                                    const IndexEntry& e = I.at(j, o, r, c);
                                    if (hex_distance({0, 0}, d) > I.radius) {
                                        if (e.orientation >= 0) ++violations;
                                        continue;
                                    }
                                    ++disk_cells;
                                    if (e.orientation < 0) {
                                        ++violations;
                                        continue;
                                    }
                                    seen.insert({e.orientation, e.row, e.col});
                                    if (j == 0 && !(e == IndexEntry{o, r, c})) ++violations;
                                }
                        if (static_cast<long>(seen.size()) != disk_cells) ++violations;
                    }
                }
        run.exact("index-array-bijection-identity", violations);
    }

    {
        // Gathers compose like the group and the r-gather has order 6.
        SplitMix64 gen = rng.split();
        long violations = 0;
        for (Flavor flavor : {Flavor::C6, Flavor::D6})
            for (GLayer layer : {GLayer::First, GLayer::Full}) {
                const IndexArray I = build_index_array(flavor, layer, 3);
                const auto& elems = enumerate_point_group(flavor);
                const HexFilter bank =
                    random_filter_bank(gen, 2, layer == GLayer::First ? 2 : 2 * I.h_in, 1);
                for (int j1 = 0; j1 < I.h_out; ++j1)
                    for (int j2 = 0; j2 < I.h_out; ++j2) {
                        const HexFilter two = gather_slice(gather_slice(bank, I, j1), I, j2);
                        const int jc = point_group_index(elems[j2].compose(elems[j1]));
                        if (max_abs_diff(two.data, gather_slice(bank, I, jc).data) != 0.0)
                            ++violations;
                    }
                HexFilter six = bank;
                for (int k = 0; k < 6; ++k) six = gather_slice(six, I, 1);
                if (max_abs_diff(six.data, bank.data) != 0.0) ++violations;
            }
        run.exact("gather-composition-and-order-6", violations);
    }

    {
        SplitMix64 gen = rng.split();
        double err = 0.0;
        for (Flavor flavor : {Flavor::C6, Flavor::D6}) {
            const int order = point_group_order(flavor);
            for (GLayer layer : {GLayer::First, GLayer::Full})
                for (int i = 0; i < 3; ++i) {
                    SplitMix64 sub = gen.split();
                    const int K = 1 + static_cast<int>(sub.below(2));
                    const int C = 1 + static_cast<int>(sub.below(2));
                    const int h_in = layer == GLayer::First ? 1 : order;
                    const HexImage f = random_disk_image(sub, 3, K, h_in);
                    const HexFilter bank = random_filter_bank(sub, C, K * h_in, 1);
                    const std::vector<double> ref = gconv_reference(f, bank, flavor, layer);
                    const GFeatureMap got = layer == GLayer::First
                                                ? gconv_first(f, bank, flavor)
                                                : gconv_full({f, flavor}, bank);
                    err = std::max(err, max_abs_diff(got.map.data, ref));
                }
        }
        run.metric("gconv-matches-direct-sum", err);
    }

    {
        SplitMix64 gen = rng.split();
        double err = 0.0;
        double mask_err = 0.0;
        std::string detail;
        for (Flavor flavor : {Flavor::C6, Flavor::D6}) {
            const int order = point_group_order(flavor);
            for (GLayer layer : {GLayer::First, GLayer::Full})
                for (int i = 0; i < 20; ++i) {
                    SplitMix64 sub = gen.split();
                    const int K = 1 + static_cast<int>(sub.below(2));
                    const int C = 1 + static_cast<int>(sub.below(2));
                    const int h_in = layer == GLayer::First ? 1 : order;
                    const HexImage f = random_disk_image(sub, 3, K, h_in);
                    const HexFilter bank = random_filter_bank(sub, C, K * h_in, 1);
                    auto forward = [&](const HexImage& img) {
                        return layer == GLayer::First ? gconv_first(img, bank, flavor)
                                                      : gconv_full({img, flavor}, bank);
                    };
                    const GFeatureMap base = forward(f);
                    if (!mask_is_clean(base.map)) mask_err += 1.0;
                    for (int j = 0; j < order; ++j) {
                        const GroupElement g = point_element(flavor, j);
                        const GFeatureMap lhs = forward(transform_feature_map(g, f));
                        const GFeatureMap rhs = transform_gmap(g, base);
                        const double inst_err = max_abs_diff(lhs.map.data, rhs.map.data);
                        if (inst_err > opt.tolerance && detail.empty()) {
                            detail = std::string(flavor_name(flavor)) + " " + layer_name(layer) +
                                     " element " + std::to_string(j);
                            if (opt.dump_on_failure) {
                                const std::string base_path = opt.dump_dir + "/gconv_equivariance";
                                save_hext(base_path + "_input.hext", f);
                                save_hext(base_path + "_bank.hext", bank);
                                detail += ", dumped " + base_path + "_{input,bank}.hext";
                            }
                        }
                        err = std::max(err, inst_err);
                    }
                }
        }
        run.metric("g-equivariance", err, detail);
        run.exact("mask-discipline-after-gconv", mask_err);
    }

    {
        // First layer -> full layer -> invariant pooling is rotation invariant.
        SplitMix64 gen = rng.split();
        double err = 0.0;
        for (Flavor flavor : {Flavor::C6, Flavor::D6}) {
            SplitMix64 sub = gen.split();
            const int order = point_group_order(flavor);
            const HexImage f = random_disk_image(sub, 4, 1);
            const HexFilter bank1 = random_filter_bank(sub, 3, 1, 1);
            const HexFilter bank2 = random_filter_bank(sub, 2, 3 * order, 1);
            auto pipeline = [&](const HexImage& img) {
                return pool_invariant(gconv_full(gconv_first(img, bank1, flavor), bank2));
            };
            const std::vector<float> base = pipeline(f);
            for (int j = 1; j < order; ++j) {
                const std::vector<float> rotated =
                    pipeline(transform_feature_map(point_element(flavor, j), f));
                err = std::max(err, max_abs_diff(rotated, base));
            }
        }
        run.metric("end-to-end-invariance", err);
    }

    {
        SplitMix64 gen = rng.split();
        long violations = 0;
        const HexImage f = random_disk_image(gen, 4, 2, 6);
        const GFeatureMap gmap{f, Flavor::C6};
        const GFeatureMap pooled = pool_orientations_spatial(gmap, 1);
        for (int j = 0; j < 6; ++j) {
            const GroupElement g = point_element(Flavor::C6, j);
            const GFeatureMap lhs = pool_orientations_spatial(transform_gmap(g, gmap), 1);
            const GFeatureMap rhs = transform_gmap(g, pooled);
            if (max_abs_diff(lhs.map.data, rhs.map.data) != 0.0) ++violations;
            const std::vector<float> pi = pool_invariant(transform_gmap(g, gmap));
            if (max_abs_diff(pi, pool_invariant(gmap)) != 0.0) ++violations;
        }
        const GFeatureMap same = pool_orientations_spatial(gmap, 0);
        if (max_abs_diff(same.map.data, gmap.map.data) != 0.0) ++violations;
        run.exact("pooling-equivariance-and-invariance", violations);
    }

    {
        long violations = 0;
        for (Flavor flavor : {Flavor::C6, Flavor::D6})
            for (GLayer layer : {GLayer::First, GLayer::Full}) {
                const int order = point_group_order(flavor);
                const int h_in = layer == GLayer::First ? 1 : order;
                SplitMix64 sub(opt.seed);
                const HexFilter bank = random_filter_bank(sub, 2, 3 * h_in, 1);
                const IndexArray I = build_index_array(flavor, layer, bank.side, bank.radius);
                const HexFilter tb = transform_filters(bank, I);
                if (tb.out_channels != 2 * order || tb.in_channels != 3 * h_in ||
                    tb.side != bank.side)
                    ++violations;
                if (!mask_is_clean(tb)) ++violations;
            }
        run.exact("transformed-bank-shape", violations);
    }

    return run.results;
}

std::vector<PropertyResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "coords") return run_suite_coords(opt);
    if (name == "groups") return run_suite_groups(opt);
    if (name == "conv") return run_suite_conv(opt);
    if (name == "gconv") return run_suite_gconv(opt);
    if (name == "all") {
        std::vector<PropertyResult> all;
        for (const char* n : {"coords", "groups", "conv", "gconv"}) {
            auto part = run_suite(n, opt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw ArgumentError("unknown suite '" + name + "' (coords, groups, conv, gconv, all)");
}

} // namespace hexa
