#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hexa/coords.hpp"
#include "hexa/group.hpp"

namespace hexa {

/// Buffer cell address: row then col, both zero-based.
struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
};

// A hexagonal image or feature map in axial layout: a rectangular buffer of
// shape channels x orientations x rows x cols plus a rows x cols validity
// mask. Buffer cell (row, col) holds the lattice site with axial coordinates
// u = col - anchor.col, v = row - anchor.row, so stepping (u+1, v) moves one
// column right and the axial origin sits at the anchor cell.
// Invariants: data is exactly 0.0 at every masked-out cell; the mask is
// shared by all channels and orientations.
struct HexImage {
    int channels = 1;
    int orientations = 1;
    int rows = 0;
    int cols = 0;
    Cell anchor;
    std::vector<float> data;   // channels * orientations * rows * cols
    std::vector<uint8_t> mask; // rows * cols, 1 = valid hexagonal site

    HexImage() = default;
    HexImage(int channels, int orientations, int rows, int cols, Cell anchor);

    int planes() const { return channels * orientations; }
    std::size_t plane_size() const { return static_cast<std::size_t>(rows) * cols; }
    std::size_t index(int c, int o, int row, int col) const {
        return ((static_cast<std::size_t>(c) * orientations + o) * rows + row) * cols + col;
    }
    float& at(int c, int o, int row, int col) { return data[index(c, o, row, col)]; }
    float at(int c, int o, int row, int col) const { return data[index(c, o, row, col)]; }

    /// The indexing map: axial point to buffer cell, empty outside the buffer.
    std::optional<Cell> cell_of(AxialPoint p) const {
        Cell cell{anchor.row + p.v, anchor.col + p.u};
        if (cell.row < 0 || cell.row >= rows || cell.col < 0 || cell.col >= cols) return {};
        return cell;
    }
    /// Inverse of cell_of on the buffer.
    AxialPoint point_of(int row, int col) const { return {col - anchor.col, row - anchor.row}; }

    bool valid(AxialPoint p) const {
        auto cell = cell_of(p);
        return cell && mask[static_cast<std::size_t>(cell->row) * cols + cell->col] != 0;
    }
    /// Reads the stored value; sites outside the buffer read as 0.
    float value(int c, int o, AxialPoint p) const {
        auto cell = cell_of(p);
        return cell ? at(c, o, cell->row, cell->col) : 0.0f;
    }

    /// Same buffer re-labeled with a new channels/orientations split.
    HexImage reshaped(int new_channels, int new_orientations) const;
};

/// A filter bank in axial layout: out_channels x in_channels x S x S with a
/// hex-disk support mask of the given radius centered at (radius_cell, radius_cell)
/// where radius_cell = (S-1)/2. in_channels is the flattened K*|H_in| dimension.
struct HexFilter {
    int out_channels = 1;
    int in_channels = 1;
    int side = 1; // S, odd
    int radius = 0;
    std::vector<float> data;   // out_channels * in_channels * side * side
    std::vector<uint8_t> mask; // side * side hex-disk

    HexFilter() = default;
    HexFilter(int out_channels, int in_channels, int radius, int side = -1);

    int center() const { return (side - 1) / 2; }
    std::size_t index(int c, int k, int row, int col) const {
        return ((static_cast<std::size_t>(c) * in_channels + k) * side + row) * side + col;
    }
    float& at(int c, int k, int row, int col) { return data[index(c, k, row, col)]; }
    float at(int c, int k, int row, int col) const { return data[index(c, k, row, col)]; }

    /// Filter cell (row, col) holds the axial offset (col - center, row - center).
    AxialPoint offset_of(int row, int col) const { return {col - center(), row - center()}; }
    bool in_disk(int row, int col) const {
        return mask[static_cast<std::size_t>(row) * side + col] != 0;
    }
};

/// A single-channel rectangular raster (source for resampling, PGM payload).
struct PlanarImage {
    int rows = 0;
    int cols = 0;
    std::vector<float> data; // rows * cols

    float at(int row, int col) const { return data[static_cast<std::size_t>(row) * cols + col]; }
    float& at(int row, int col) { return data[static_cast<std::size_t>(row) * cols + col]; }
};

/// Disk-masked image: every site with hex_distance to the origin <= radius is
/// valid, the buffer corners are masked out. Anchor at the buffer center.
HexImage make_hex_disk(int radius, int channels = 1, int orientations = 1);

/// Hex-disk mask plane of side S = 2*radius+1 (shared by filters and disks).
std::vector<uint8_t> hex_disk_mask(int radius, int side);

/// Zeroes every masked-out cell; valid cells unchanged. Idempotent.
HexImage apply_mask(HexImage f);
HexFilter apply_mask(HexFilter psi);

/// True when every masked-out cell already stores exactly 0.0.
bool mask_is_clean(const HexImage& f);
bool mask_is_clean(const HexFilter& psi);

/// True when the valid-cell set is mapped onto itself by h about the anchor.
bool mask_closed_under(const HexImage& f, const PointGroupElement& h);

// The lattice transformation operator L_g. Planar maps: out(p) = f(g^-1 p).
// Maps with orientations == |H|: additionally permutes orientation channels by
// left multiplication, out[s](p) = f[index(g.h^-1 H[s])](g^-1 p).
// The mask must be closed under the point-group part of g (disks are); the
// translation part zero-fills cells whose source leaves the buffer, so
// L_{g1} L_{g2} = L_{g1 g2} holds exactly wherever no source is truncated.
HexImage transform_feature_map(const GroupElement& g, const HexImage& f);

/// Square image to hexagonal lattice by bilinear interpolation. Site (u, v)
/// samples the source at Cartesian spacing*embed(u, v); the field of view is
/// the smallest parallelogram of sites covering the source rectangle, and
/// sites whose sample point falls outside the rectangle store 0.
HexImage resample_square_to_hex(const PlanarImage& src, double spacing);

/// Min-max normalizes one channel/orientation plane to bytes; masked cells
/// render as 0, and an empty value range renders all-zero.
PlanarImage render_plane(const HexImage& f, int channel, int orientation);

} // namespace hexa
