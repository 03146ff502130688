#include "hexa/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "hexa/errors.hpp"

namespace hexa {

HexImage::HexImage(int channels_, int orientations_, int rows_, int cols_, Cell anchor_)
    : channels(channels_), orientations(orientations_), rows(rows_), cols(cols_),
      anchor(anchor_) {
    if (channels < 1 || orientations < 1 || rows < 1 || cols < 1)
        throw ArgumentError("HexImage: all dimensions must be positive");
    data.assign(static_cast<std::size_t>(planes()) * plane_size(), 0.0f);
    mask.assign(plane_size(), 1);
}

HexImage HexImage::reshaped(int new_channels, int new_orientations) const {
    if (new_channels * new_orientations != planes())
        throw ShapeError("reshaped: channel*orientation count must be preserved");
    HexImage out = *this;
    out.channels = new_channels;
    out.orientations = new_orientations;
    return out;
}

HexFilter::HexFilter(int out_channels_, int in_channels_, int radius_, int side_)
    : out_channels(out_channels_), in_channels(in_channels_), side(side_), radius(radius_) {
    if (out_channels < 1 || in_channels < 1) throw ArgumentError("HexFilter: channels must be positive");
    if (radius < 0) throw ArgumentError("HexFilter: radius must be nonnegative");
    if (side < 0) side = 2 * radius + 1;
    if (side % 2 == 0) throw ArgumentError("HexFilter: side must be odd");
    if (side < 2 * radius + 1) throw ArgumentError("HexFilter: side too small for radius");
    data.assign(static_cast<std::size_t>(out_channels) * in_channels * side * side, 0.0f);
    mask = hex_disk_mask(radius, side);
}

std::vector<uint8_t> hex_disk_mask(int radius, int side) {
    if (radius < 0) throw ArgumentError("hex_disk_mask: radius must be nonnegative");
    if (side % 2 == 0 || side < 2 * radius + 1)
        throw ArgumentError("hex_disk_mask: side must be odd and at least 2*radius+1");
    const int ctr = (side - 1) / 2;
    std::vector<uint8_t> mask(static_cast<std::size_t>(side) * side, 0);
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            AxialPoint p{c - ctr, r - ctr};
            if (hex_distance({0, 0}, p) <= radius)
                mask[static_cast<std::size_t>(r) * side + c] = 1;
        }
    return mask;
}

HexImage make_hex_disk(int radius, int channels, int orientations) {
    if (radius < 0) throw ArgumentError("make_hex_disk: radius must be nonnegative");
    const int side = 2 * radius + 1;
    HexImage img(channels, orientations, side, side, Cell{radius, radius});
    img.mask = hex_disk_mask(radius, side);
    return img;
}

HexImage apply_mask(HexImage f) {
    const std::size_t n = f.plane_size();
    for (int pl = 0; pl < f.planes(); ++pl) {
        float* plane = f.data.data() + static_cast<std::size_t>(pl) * n;
        for (std::size_t i = 0; i < n; ++i)
            if (f.mask[i] == 0) plane[i] = 0.0f;
    }
    return f;
}

HexFilter apply_mask(HexFilter psi) {
    const std::size_t n = static_cast<std::size_t>(psi.side) * psi.side;
    const std::size_t planes = static_cast<std::size_t>(psi.out_channels) * psi.in_channels;
    for (std::size_t pl = 0; pl < planes; ++pl) {
        float* plane = psi.data.data() + pl * n;
        for (std::size_t i = 0; i < n; ++i)
            if (psi.mask[i] == 0) plane[i] = 0.0f;
    }
    return psi;
}

bool mask_is_clean(const HexImage& f) {
    const std::size_t n = f.plane_size();
    for (int pl = 0; pl < f.planes(); ++pl) {
        const float* plane = f.data.data() + static_cast<std::size_t>(pl) * n;
        for (std::size_t i = 0; i < n; ++i)
            if (f.mask[i] == 0 && plane[i] != 0.0f) return false;
    }
    return true;
}

bool mask_is_clean(const HexFilter& psi) {
    const std::size_t n = static_cast<std::size_t>(psi.side) * psi.side;
    const std::size_t planes = static_cast<std::size_t>(psi.out_channels) * psi.in_channels;
    for (std::size_t pl = 0; pl < planes; ++pl) {
        const float* plane = psi.data.data() + pl * n;
        for (std::size_t i = 0; i < n; ++i)
            if (psi.mask[i] == 0 && plane[i] != 0.0f) return false;
    }
    return true;
}

bool mask_closed_under(const HexImage& f, const PointGroupElement& h) {
    for (int r = 0; r < f.rows; ++r)
        for (int c = 0; c < f.cols; ++c) {
            if (f.mask[static_cast<std::size_t>(r) * f.cols + c] == 0) continue;
            if (!f.valid(h.apply(f.point_of(r, c)))) return false;
        }
    return true;
}

HexImage transform_feature_map(const GroupElement& g, const HexImage& f) {
    const Flavor flavor = g.h.flavor();
    const int order = point_group_order(flavor);
    if (f.orientations != 1 && f.orientations != order)
        throw ShapeError("transform_feature_map: orientation count " +
                         std::to_string(f.orientations) + " does not match group " +
                         flavor_name(flavor));
    if (!mask_closed_under(f, g.h))
        throw UnsupportedTransform("transform_feature_map: mask not closed under the point-group part");

    const GroupElement ginv = inverse(g);
    // Source orientation for target slot s is index(g.h^-1 H[s]).
    std::vector<int> src_orient(f.orientations, 0);
    if (f.orientations == order) {
        const auto& elems = enumerate_point_group(flavor);
        for (int s = 0; s < order; ++s)
            src_orient[s] = point_group_index(ginv.h.compose(elems[s]));
    }

    HexImage out(f.channels, f.orientations, f.rows, f.cols, f.anchor);
    out.mask = f.mask;
    for (int r = 0; r < f.rows; ++r)
        for (int c = 0; c < f.cols; ++c) {
            if (out.mask[static_cast<std::size_t>(r) * f.cols + c] == 0) continue;
            const AxialPoint q = act_on_point(ginv, f.point_of(r, c));
            if (!f.valid(q)) continue;
            for (int ch = 0; ch < f.channels; ++ch)
                for (int s = 0; s < f.orientations; ++s)
                    out.at(ch, s, r, c) = f.value(ch, src_orient[s], q);
        }
    return out;
}

HexImage resample_square_to_hex(const PlanarImage& src, double spacing) {
    if (src.rows < 2 || src.cols < 2)
        throw ArgumentError("resample_square_to_hex: source must be at least 2x2");
    if (!(spacing > 0.0)) throw ArgumentError("resample_square_to_hex: spacing must be positive");

    const double row_step = spacing * kHalfSqrt3;
    const int v1 = static_cast<int>(std::ceil((src.rows - 1) / row_step));
    const int u1 = static_cast<int>(std::ceil((src.cols - 1) / spacing));
    const int u0 = -(v1 / 2); // left padding floor((rows-1)/2)
    const int rows = v1 + 1;
    const int cols = u1 - u0 + 1;

    HexImage out(1, 1, rows, cols, Cell{0, -u0});
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const AxialPoint p = out.point_of(r, c);
            const CartesianPoint e = embed(p);
            const double x = spacing * e.px;
            const double y = -spacing * e.py; // rows grow downward, embed y points up
            if (x < 0.0 || x > src.cols - 1 || y < 0.0 || y > src.rows - 1) continue;
            const int x0 = std::min(static_cast<int>(std::floor(x)), src.cols - 2);
            const int y0 = std::min(static_cast<int>(std::floor(y)), src.rows - 2);
            const double tx = x - x0;
            const double ty = y - y0;
            // lerp form a + t*(b - a) reproduces constants exactly
            const double top = src.at(y0, x0) + tx * (src.at(y0, x0 + 1) - src.at(y0, x0));
            const double bot = src.at(y0 + 1, x0) + tx * (src.at(y0 + 1, x0 + 1) - src.at(y0 + 1, x0));
            out.at(0, 0, r, c) = static_cast<float>(top + ty * (bot - top));
        }
    return out;
}

PlanarImage render_plane(const HexImage& f, int channel, int orientation) {
    if (channel < 0 || channel >= f.channels)
        throw ArgumentError("render_plane: channel out of range [0, " +
                            std::to_string(f.channels - 1) + "]");
    if (orientation < 0 || orientation >= f.orientations)
        throw ArgumentError("render_plane: orientation out of range [0, " +
                            std::to_string(f.orientations - 1) + "]");

    float lo = 0.0f, hi = 0.0f;
    bool seen = false;
    for (int r = 0; r < f.rows; ++r)
        for (int c = 0; c < f.cols; ++c) {
            if (f.mask[static_cast<std::size_t>(r) * f.cols + c] == 0) continue;
            const float v = f.at(channel, orientation, r, c);
            if (!seen) { lo = hi = v; seen = true; }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }

    PlanarImage img;
    img.rows = f.rows;
    img.cols = f.cols;
    img.data.assign(f.plane_size(), 0.0f);
    if (!seen || hi == lo) return img; // empty value range renders all-zero
    for (int r = 0; r < f.rows; ++r)
        for (int c = 0; c < f.cols; ++c) {
            if (f.mask[static_cast<std::size_t>(r) * f.cols + c] == 0) continue;
            img.at(r, c) = (f.at(channel, orientation, r, c) - lo) / (hi - lo);
        }
    return img;
}

} // namespace hexa
