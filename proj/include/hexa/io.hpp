#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexa/image.hpp"

namespace hexa {

// HEXT tensor file: magic "HEXT", version byte 0x01, flag byte (bit0 = mask
// plane present), u8 rank, rank little-endian u32 dims, then the data as
// little-endian 32-bit floats in memory order. When the mask flag is set a
// u8 plane (0/1) covering the last two dims trails the data.
struct HextTensor {
    std::vector<uint32_t> dims;
    std::vector<float> data;
    bool has_mask = false;
    std::vector<uint8_t> mask; // product of the last two dims when present
};

void write_hext(const std::string& path, const HextTensor& t);
HextTensor read_hext(const std::string& path);

/// HexImage as rank-4 HEXT [channels, orientations, rows, cols] + mask plane.
/// Files carry no anchor; loaded images anchor at the buffer center cell.
void save_hext(const std::string& path, const HexImage& img);
HexImage load_hex_image(const std::string& path);

/// HexFilter as rank-4 HEXT [out, in, S, S] + disk mask plane; the disk radius
/// is recovered from the mask on load.
void save_hext(const std::string& path, const HexFilter& psi);
HexFilter load_hex_filter(const std::string& path);

/// PGM reader (P5 raw or P2 ascii, maxval up to 255); values scaled to [0,1].
PlanarImage read_pgm(const std::string& path);

/// PGM P5 writer; values clamped to [0,1] and quantized to bytes.
void write_pgm(const std::string& path, const PlanarImage& img);

/// render_plane followed by write_pgm.
void render_pgm(const HexImage& f, int channel, int orientation, const std::string& path);

} // namespace hexa
