#include "hexa/conv.hpp"

#include <cstddef>

#include "hexa/errors.hpp"

namespace hexa {

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Axial: return "axial";
        case Backend::DoubleWidth: return "double-width";
        case Backend::Offset: return "offset";
    }
    throw ArgumentError("backend_name: unknown backend");
}

Backend backend_from_name(const std::string& name) {
    if (name == "axial") return Backend::Axial;
    if (name == "double-width" || name == "double_width") return Backend::DoubleWidth;
    if (name == "offset") return Backend::Offset;
    throw ArgumentError("unknown backend '" + name + "' (axial, double-width, offset)");
}

std::vector<float> rect_correlate(const std::vector<float>& f, int K, int H, int W,
                                  const std::vector<float>& psi, int C, int S) {
    if (S < 1 || S % 2 == 0) throw ArgumentError("rect_correlate: window side must be odd");
    if (f.size() != static_cast<std::size_t>(K) * H * W)
        throw ShapeError("rect_correlate: input size does not match K x H x W");
    if (psi.size() != static_cast<std::size_t>(C) * K * S * S)
        throw ShapeError("rect_correlate: filter size does not match C x K x S x S");

    const int R = (S - 1) / 2;
    std::vector<float> out(static_cast<std::size_t>(C) * H * W);
    for (int c = 0; c < C; ++c) {
        const float* bank = psi.data() + static_cast<std::size_t>(c) * K * S * S;
        for (int y = 0; y < H; ++y)
            for (int x = 0; x < W; ++x) {
                double acc = 0.0;
                for (int k = 0; k < K; ++k) {
                    const float* plane = f.data() + static_cast<std::size_t>(k) * H * W;
                    const float* win = bank + static_cast<std::size_t>(k) * S * S;
                    for (int i = 0; i < S; ++i) {
                        const int sy = y + i - R;
                        if (sy < 0 || sy >= H) continue;
                        for (int j = 0; j < S; ++j) {
                            const int sx = x + j - R;
                            if (sx < 0 || sx >= W) continue;
                            acc += static_cast<double>(plane[static_cast<std::size_t>(sy) * W + sx]) *
                                   win[static_cast<std::size_t>(i) * S + j];
                        }
                    }
                }
                out[(static_cast<std::size_t>(c) * H + y) * W + x] = static_cast<float>(acc);
            }
    }
    return out;
}

namespace {

void check_conv_inputs(const HexImage& f, const HexFilter& psi) {
    if (psi.in_channels != f.planes())
        throw ShapeError("hexconv: filter expects " + std::to_string(psi.in_channels) +
                         " input planes, image has " + std::to_string(f.planes()));
    if (!mask_is_clean(psi))
        throw MaskViolation("hexconv: filter has nonzero cells outside its hex-disk support");
    if (!mask_is_clean(f))
        throw MaskViolation("hexconv: image has nonzero cells outside its mask");
}

HexImage planar_output_like(const HexImage& f, int out_channels) {
    HexImage out(out_channels, 1, f.rows, f.cols, f.anchor);
    out.mask = f.mask;
    return out;
}

} // namespace

HexImage hexconv_axial(const HexImage& f, const HexFilter& psi) {
    check_conv_inputs(f, psi);
    HexImage out = planar_output_like(f, psi.out_channels);
    out.data = rect_correlate(f.data, f.planes(), f.rows, f.cols, psi.data, psi.out_channels,
                              psi.side);
    return apply_mask(std::move(out));
}

HexImage hexconv_double_width(const HexImage& f, const HexFilter& psi) {
    check_conv_inputs(f, psi);
    const int K = f.planes();
    const int H = f.rows;
    // Image cell (r, c) lands at double-width column 2c + r; holes stay zero.
    const int Wd = 2 * f.cols + f.rows - 2;
    std::vector<float> dwf(static_cast<std::size_t>(K) * H * Wd, 0.0f);
    for (int k = 0; k < K; ++k)
        for (int r = 0; r < H; ++r)
            for (int c = 0; c < f.cols; ++c)
                dwf[(static_cast<std::size_t>(k) * H + r) * Wd + 2 * c + r] =
                    f.data[(static_cast<std::size_t>(k) * H + r) * f.cols + c];

    // Filter offset (du, dv) lands at (dv, 2du + dv) in a side x (2 side - 1)
    // checkerboard layout; pad rows to make the window square for the shared
    // correlation primitive (the extra rows are zero).
    const int S = psi.side;
    const int Sd = 2 * S - 1;
    const int Cd = Sd / 2; // = 2R, the padded window center
    std::vector<float> dwpsi(static_cast<std::size_t>(psi.out_channels) * K * Sd * Sd, 0.0f);
    for (int c = 0; c < psi.out_channels; ++c)
        for (int k = 0; k < K; ++k)
            for (int i = 0; i < S; ++i)
                for (int j = 0; j < S; ++j) {
                    if (!psi.in_disk(i, j)) continue;
                    const AxialPoint d = psi.offset_of(i, j);
                    const int di = d.v + Cd;
                    const int dj = 2 * d.u + d.v + Cd;
                    dwpsi[((static_cast<std::size_t>(c) * K + k) * Sd + di) * Sd + dj] =
                        psi.at(c, k, i, j);
                }

    const std::vector<float> dwout =
        rect_correlate(dwf, K, H, Wd, dwpsi, psi.out_channels, Sd);

    HexImage out = planar_output_like(f, psi.out_channels);
    for (int c = 0; c < psi.out_channels; ++c)
        for (int r = 0; r < H; ++r)
            for (int col = 0; col < f.cols; ++col)
                out.data[(static_cast<std::size_t>(c) * H + r) * f.cols + col] =
                    dwout[(static_cast<std::size_t>(c) * H + r) * Wd + 2 * col + r];
    return apply_mask(std::move(out));
}

HexImage hexconv_offset(const HexImage& f, const HexFilter& psi) {
    check_conv_inputs(f, psi);
    const int K = f.planes();
    const int H = f.rows;
    const int ar = f.anchor.row;
    // Offset column of cell (r, c) is c + floor(v/2) shifted to start at 0,
    // where v = r - anchor.row is the absolute axial row.
    const int base = floor_div2(-ar);
    const int Wo = f.cols + floor_div2(H - 1 - ar) - base;
    auto ocol = [&](int r, int c) { return c + floor_div2(r - ar) - base; };

    std::vector<float> off(static_cast<std::size_t>(K) * H * Wo, 0.0f);
    for (int k = 0; k < K; ++k)
        for (int r = 0; r < H; ++r)
            for (int c = 0; c < f.cols; ++c)
                off[(static_cast<std::size_t>(k) * H + r) * Wo + ocol(r, c)] =
                    f.data[(static_cast<std::size_t>(k) * H + r) * f.cols + c];

    // Offset column displacement of a filter tap depends on the parity of the
    // target row: du + floor(dv/2) from even rows, du + floor((dv+1)/2) from
    // odd rows. Both variants fit the same S x S window.
    const int S = psi.side;
    const int R = psi.center();
    std::vector<float> even(static_cast<std::size_t>(psi.out_channels) * K * S * S, 0.0f);
    std::vector<float> odd(even.size(), 0.0f);
    for (int c = 0; c < psi.out_channels; ++c)
        for (int k = 0; k < K; ++k)
            for (int i = 0; i < S; ++i)
                for (int j = 0; j < S; ++j) {
                    if (!psi.in_disk(i, j)) continue;
                    const AxialPoint d = psi.offset_of(i, j);
                    const std::size_t plane = (static_cast<std::size_t>(c) * K + k) * S * S;
                    even[plane + static_cast<std::size_t>(i) * S + d.u + floor_div2(d.v) + R] =
                        psi.at(c, k, i, j);
                    odd[plane + static_cast<std::size_t>(i) * S + d.u + floor_div2(d.v + 1) + R] =
                        psi.at(c, k, i, j);
                }

    const std::vector<float> out_even = rect_correlate(off, K, H, Wo, even, psi.out_channels, S);
    const std::vector<float> out_odd = rect_correlate(off, K, H, Wo, odd, psi.out_channels, S);

    HexImage out = planar_output_like(f, psi.out_channels);
    for (int c = 0; c < psi.out_channels; ++c)
        for (int r = 0; r < H; ++r) {
            const bool even_row = ((r - ar) % 2) == 0;
            const std::vector<float>& pass = even_row ? out_even : out_odd;
            for (int col = 0; col < f.cols; ++col)
                out.data[(static_cast<std::size_t>(c) * H + r) * f.cols + col] =
                    pass[(static_cast<std::size_t>(c) * H + r) * Wo + ocol(r, col)];
        }
    return apply_mask(std::move(out));
}

HexImage hexconv(const HexImage& f, const HexFilter& psi, Backend backend) {
    switch (backend) {
        case Backend::Axial: return hexconv_axial(f, psi);
        case Backend::DoubleWidth: return hexconv_double_width(f, psi);
        case Backend::Offset: return hexconv_offset(f, psi);
    }
    throw ArgumentError("hexconv: unknown backend");
}

std::vector<double> hexconv_reference(const HexImage& f, const HexFilter& psi) {
    if (psi.in_channels != f.planes())
        throw ShapeError("hexconv_reference: filter expects " + std::to_string(psi.in_channels) +
                         " input planes, image has " + std::to_string(f.planes()));
    const int K = f.planes();
    const HexImage flat = f.reshaped(K, 1);
    std::vector<double> out(static_cast<std::size_t>(psi.out_channels) * f.plane_size(), 0.0);
    for (int c = 0; c < psi.out_channels; ++c)
        for (int r = 0; r < f.rows; ++r)
            for (int col = 0; col < f.cols; ++col) {
                if (f.mask[static_cast<std::size_t>(r) * f.cols + col] == 0) continue;
                const GroupElement shift =
                    GroupElement::translation(f.point_of(r, col), Flavor::C6);
                double acc = 0.0;
                for (int i = 0; i < psi.side; ++i)
                    for (int j = 0; j < psi.side; ++j) {
                        if (!psi.in_disk(i, j)) continue;
                        const AxialPoint q = act_on_point(shift, psi.offset_of(i, j));
                        for (int k = 0; k < K; ++k)
                            acc += static_cast<double>(flat.value(k, 0, q)) * psi.at(c, k, i, j);
                    }
                out[(static_cast<std::size_t>(c) * f.rows + r) * f.cols + col] = acc;
            }
    return out;
}

HexImage hexconv_oracle(const HexImage& f, const HexFilter& psi) {
    const std::vector<double> ref = hexconv_reference(f, psi);
    HexImage out = planar_output_like(f, psi.out_channels);
    for (std::size_t i = 0; i < ref.size(); ++i) out.data[i] = static_cast<float>(ref[i]);
    return apply_mask(std::move(out));
}

} // namespace hexa
