#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexa/conv.hpp"
#include "hexa/group.hpp"
#include "hexa/image.hpp"

namespace hexa {

/// First layer lifts planar maps (H_in = {e}); full layers map G to G (H_in = H).
enum class GLayer { First, Full };

const char* layer_name(GLayer layer);
GLayer layer_from_name(const std::string& name);

/// Source address of one transformed-filter cell; orientation -1 marks cells
/// outside the hex disk, which gather an exact 0.
struct IndexEntry {
    int32_t orientation = -1;
    int32_t row = 0;
    int32_t col = 0;
    bool operator==(const IndexEntry&) const = default;
};

// Precomputed filter-transformation table. For each target point-group
// element h (canonical order), input orientation o and filter cell i, the
// entry holds the source cell of the gather: spatially the cell of h^-1
// applied to i's axial offset, and in the orientation dimension the index of
// h^-1 composed with the o-th element (left multiplication).
struct IndexArray {
    Flavor flavor = Flavor::C6;
    GLayer layer = GLayer::First;
    int side = 1;
    int radius = 0;
    int h_out = 1;
    int h_in = 1;
    std::vector<IndexEntry> table; // h_out * h_in * side * side

    const IndexEntry& at(int j, int o, int row, int col) const {
        return table[((static_cast<std::size_t>(j) * h_in + o) * side + row) * side + col];
    }
};

/// radius -1 means the full window disk, (side-1)/2.
IndexArray build_index_array(Flavor flavor, GLayer layer, int side, int radius = -1);

// Pure gather: output channel c*h_out + j holds bank channel c rearranged by
// slice j; no arithmetic on values, and the result stays hex-disk masked.
HexFilter transform_filters(const HexFilter& bank, const IndexArray& I);

/// A feature map on the group: orientation channel j holds the component for
/// the j-th canonical point-group element.
struct GFeatureMap {
    HexImage map;
    Flavor flavor = Flavor::C6;

    GFeatureMap() = default;
    GFeatureMap(HexImage m, Flavor f);
};

/// Planar image to G-map: transform_filters then planar hexconv. Output
/// orientation j corresponds to the j-th canonical point-group element.
GFeatureMap gconv_first(const HexImage& f, const HexFilter& bank, Flavor flavor,
                        Backend backend = Backend::Axial);

/// G-map to G-map: as gconv_first with orientation cycling on the filter's
/// K * |H| input channels.
GFeatureMap gconv_full(const GFeatureMap& f, const HexFilter& bank,
                       Backend backend = Backend::Axial);

/// Direct summation of the group convolution in double precision, laid out
/// (c * |H_out| + j) x rows x cols. The ground truth for both layer kinds.
std::vector<double> gconv_reference(const HexImage& f, const HexFilter& bank, Flavor flavor,
                                    GLayer layer);

/// The operator L_g on G-maps: spatial action plus orientation cycling.
GFeatureMap transform_gmap(const GroupElement& g, const GFeatureMap& f);

/// Max over the hex disk of the given radius around each site, per channel
/// and per orientation; orientation channels stay intact. window 0 is the
/// identity. Invalid neighbor sites do not participate in the max.
GFeatureMap pool_orientations_spatial(const GFeatureMap& f, int window);

enum class PoolMode { Max, Mean };

/// Pools each channel over all orientations and all valid sites.
std::vector<float> pool_invariant(const GFeatureMap& f, PoolMode mode = PoolMode::Max);

} // namespace hexa
