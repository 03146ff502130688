#pragma once

#include <string>
#include <vector>

#include "hexa/image.hpp"

namespace hexa {

enum class Backend { Axial, DoubleWidth, Offset };

const char* backend_name(Backend b);
Backend backend_from_name(const std::string& name);

// Correlation is the primitive throughout (no filter flip):
//   out[c](x) = sum_k sum_d f[k](x + d) * psi[c][k](d)
// with d over the S x S window centered at 0 and zero padding outside borders.
// Accumulation is in double per output cell, stored as float.
std::vector<float> rect_correlate(const std::vector<float>& f, int K, int H, int W,
                                  const std::vector<float>& psi, int C, int S);

// Planar hexagonal convolution. Input planes (channels * orientations) must
// match psi.in_channels; the result has psi.out_channels channels, one
// orientation, and the input's buffer shape, mask and anchor, masked.
// All backends visit the summands of every output cell in the same order, so
// their results are bitwise identical.
HexImage hexconv(const HexImage& f, const HexFilter& psi, Backend backend = Backend::Axial);

/// Correlates the axial buffers directly.
HexImage hexconv_axial(const HexImage& f, const HexFilter& psi);

/// Converts to the double-width checkerboard layout, correlates, converts back.
HexImage hexconv_double_width(const HexImage& f, const HexFilter& psi);

/// Converts to the offset layout and runs separate even-row and odd-row
/// filter passes, interleaving the two outputs.
HexImage hexconv_offset(const HexImage& f, const HexFilter& psi);

/// Direct summation over sites, disk offsets and channels; the ground truth
/// for the backends. No layout tricks, no mask preconditions.
HexImage hexconv_oracle(const HexImage& f, const HexFilter& psi);

/// The oracle's sums before rounding to float, laid out C x rows x cols.
std::vector<double> hexconv_reference(const HexImage& f, const HexFilter& psi);

} // namespace hexa
