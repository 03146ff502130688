#include "hexa/gconv.hpp"

#include <algorithm>
#include <cstddef>

#include "hexa/errors.hpp"

namespace hexa {

const char* layer_name(GLayer layer) { return layer == GLayer::First ? "first" : "full"; }

GLayer layer_from_name(const std::string& name) {
    if (name == "first") return GLayer::First;
    if (name == "full") return GLayer::Full;
    throw ArgumentError("unknown layer '" + name + "' (first, full)");
}

IndexArray build_index_array(Flavor flavor, GLayer layer, int side, int radius) {
    if (side < 1 || side % 2 == 0) throw ArgumentError("build_index_array: side must be odd");
    if (radius < 0) radius = (side - 1) / 2;
    if (2 * radius + 1 > side) throw ArgumentError("build_index_array: radius too large for side");

    IndexArray I;
    I.flavor = flavor;
    I.layer = layer;
    I.side = side;
    I.radius = radius;
    I.h_out = point_group_order(flavor);
    I.h_in = layer == GLayer::First ? 1 : I.h_out;
    I.table.resize(static_cast<std::size_t>(I.h_out) * I.h_in * side * side);

    const auto& elems = enumerate_point_group(flavor);
    const int ctr = (side - 1) / 2;
    for (int j = 0; j < I.h_out; ++j) {
        const PointGroupElement hinv = elems[j].inverse();
        for (int o = 0; o < I.h_in; ++o) {
            const int src_orient =
                layer == GLayer::First ? 0 : point_group_index(hinv.compose(elems[o]));
            for (int r = 0; r < side; ++r)
                for (int c = 0; c < side; ++c) {
                    IndexEntry& e =
                        I.table[((static_cast<std::size_t>(j) * I.h_in + o) * side + r) * side + c];
                    const AxialPoint d{c - ctr, r - ctr};
                    if (hex_distance({0, 0}, d) > radius) continue; // stays the zero marker
                    const AxialPoint s = hinv.apply(d);
                    e = {src_orient, s.v + ctr, s.u + ctr};
                }
        }
    }
    return I;
}

HexFilter transform_filters(const HexFilter& bank, const IndexArray& I) {
    if (bank.side != I.side || bank.radius != I.radius)
        throw ShapeError("transform_filters: filter window does not match the index array");
    if (bank.in_channels % I.h_in != 0)
        throw ShapeError("transform_filters: input channels not divisible by |H_in| = " +
                         std::to_string(I.h_in));
    if (!mask_is_clean(bank))
        throw MaskViolation("transform_filters: bank has nonzero cells outside its support");

    const int K = bank.in_channels / I.h_in;
    HexFilter out(bank.out_channels * I.h_out, bank.in_channels, I.radius, I.side);
    for (int c = 0; c < bank.out_channels; ++c)
        for (int j = 0; j < I.h_out; ++j)
            for (int k = 0; k < K; ++k)
                for (int o = 0; o < I.h_in; ++o)
                    for (int r = 0; r < I.side; ++r)
                        for (int col = 0; col < I.side; ++col) {
                            const IndexEntry& e = I.at(j, o, r, col);
                            if (e.orientation < 0) continue;
                            out.at(c * I.h_out + j, k * I.h_in + o, r, col) =
                                bank.at(c, k * I.h_in + e.orientation, e.row, e.col);
                        }
    return out;
}

GFeatureMap::GFeatureMap(HexImage m, Flavor f) : map(std::move(m)), flavor(f) {
    if (map.orientations != point_group_order(flavor))
        throw ShapeError("GFeatureMap: expected " +
                         std::to_string(point_group_order(flavor)) + " orientations for " +
                         flavor_name(flavor) + ", got " + std::to_string(map.orientations));
}

GFeatureMap gconv_first(const HexImage& f, const HexFilter& bank, Flavor flavor,
                        Backend backend) {
    if (f.orientations != 1)
        throw ShapeError("gconv_first: input must be planar (1 orientation), got " +
                         std::to_string(f.orientations));
    const IndexArray I = build_index_array(flavor, GLayer::First, bank.side, bank.radius);
    const HexFilter tb = transform_filters(bank, I);
    HexImage conv = hexconv(f, tb, backend);
    return {conv.reshaped(bank.out_channels, I.h_out), flavor};
}

GFeatureMap gconv_full(const GFeatureMap& f, const HexFilter& bank, Backend backend) {
    const int order = point_group_order(f.flavor);
    if (bank.in_channels % order != 0)
        throw ShapeError("gconv_full: filter input channels must be a multiple of |H| = " +
                         std::to_string(order));
    const IndexArray I = build_index_array(f.flavor, GLayer::Full, bank.side, bank.radius);
    const HexFilter tb = transform_filters(bank, I);
    HexImage conv = hexconv(f.map, tb, backend);
    return {conv.reshaped(bank.out_channels, I.h_out), f.flavor};
}

std::vector<double> gconv_reference(const HexImage& f, const HexFilter& bank, Flavor flavor,
                                    GLayer layer) {
    const int order = point_group_order(flavor);
    const int h_in = layer == GLayer::First ? 1 : order;
    if (f.orientations != h_in)
        throw ShapeError("gconv_reference: input orientation count does not match the layer");
    if (bank.in_channels % h_in != 0)
        throw ShapeError("gconv_reference: filter input channels not divisible by |H_in|");
    const int K = bank.in_channels / h_in;
    if (K != f.channels)
        throw ShapeError("gconv_reference: filter expects " + std::to_string(K) +
                         " image channels, got " + std::to_string(f.channels));

    const auto& elems = enumerate_point_group(flavor);
    const int ctr = bank.center();
    std::vector<double> out(static_cast<std::size_t>(bank.out_channels) * order * f.plane_size(),
                            0.0);
    for (int c = 0; c < bank.out_channels; ++c)
        for (int j = 0; j < order; ++j) {
            const PointGroupElement hinv = elems[j].inverse();
            std::vector<int> src_orient(h_in);
            for (int s = 0; s < h_in; ++s)
                src_orient[s] = layer == GLayer::First ? 0 : point_group_index(hinv.compose(elems[s]));
            for (int r = 0; r < f.rows; ++r)
                for (int col = 0; col < f.cols; ++col) {
                    if (f.mask[static_cast<std::size_t>(r) * f.cols + col] == 0) continue;
                    const AxialPoint p = f.point_of(r, col);
                    double acc = 0.0;
                    // Eq with e ranging over the rotated support, which the
                    // disk mask already is: psi evaluated at hinv e.
                    for (int i = 0; i < bank.side; ++i)
                        for (int cc = 0; cc < bank.side; ++cc) {
                            const AxialPoint e{cc - ctr, i - ctr};
                            if (hex_distance({0, 0}, e) > bank.radius) continue;
                            const AxialPoint d = hinv.apply(e);
                            for (int k = 0; k < K; ++k)
                                for (int s = 0; s < h_in; ++s)
                                    acc += static_cast<double>(f.value(k, s, p + e)) *
                                           bank.at(c, k * h_in + src_orient[s], d.v + ctr,
                                                   d.u + ctr);
                        }
                    out[(static_cast<std::size_t>(c) * order + j) * f.plane_size() +
                        static_cast<std::size_t>(r) * f.cols + col] = acc;
                }
        }
    return out;
}

GFeatureMap transform_gmap(const GroupElement& g, const GFeatureMap& f) {
    if (g.h.flavor() != f.flavor)
        throw FlavorMismatch(std::string("transform_gmap: ") + flavor_name(g.h.flavor()) +
                             " element on a " + flavor_name(f.flavor) + " map");
    return {transform_feature_map(g, f.map), f.flavor};
}

GFeatureMap pool_orientations_spatial(const GFeatureMap& f, int window) {
    if (window < 0) throw ArgumentError("pool_orientations_spatial: window must be nonnegative");
    const HexImage& m = f.map;
    HexImage out(m.channels, m.orientations, m.rows, m.cols, m.anchor);
    out.mask = m.mask;
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            if (m.mask[static_cast<std::size_t>(r) * m.cols + c] == 0) continue;
            const AxialPoint p = m.point_of(r, c);
            for (int ch = 0; ch < m.channels; ++ch)
                for (int o = 0; o < m.orientations; ++o) {
                    float best = m.at(ch, o, r, c);
                    for (int dv = -window; dv <= window; ++dv)
                        for (int du = -window; du <= window; ++du) {
                            const AxialPoint d{du, dv};
                            if (hex_distance({0, 0}, d) > window) continue;
                            const AxialPoint q = p + d;
                            if (!m.valid(q)) continue;
                            best = std::max(best, m.value(ch, o, q));
                        }
                    out.at(ch, o, r, c) = best;
                }
        }
    return {std::move(out), f.flavor};
}

std::vector<float> pool_invariant(const GFeatureMap& f, PoolMode mode) {
    const HexImage& m = f.map;
    std::vector<float> out(m.channels, 0.0f);
    for (int ch = 0; ch < m.channels; ++ch) {
        double sum = 0.0;
        std::size_t count = 0;
        float best = 0.0f;
        bool seen = false;
        for (int o = 0; o < m.orientations; ++o)
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) {
                    if (m.mask[static_cast<std::size_t>(r) * m.cols + c] == 0) continue;
                    const float v = m.at(ch, o, r, c);
                    if (!seen) { best = v; seen = true; }
                    best = std::max(best, v);
                    sum += v;
                    ++count;
                }
        if (!seen) continue;
        out[ch] = mode == PoolMode::Max ? best
                                        : static_cast<float>(sum / static_cast<double>(count));
    }
    return out;
}

} // namespace hexa
