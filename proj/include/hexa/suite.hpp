#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexa/gconv.hpp"
#include "hexa/image.hpp"
#include "hexa/rng.hpp"

namespace hexa {

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0; // 0 means the property is exact
    std::string detail;     // failure note, dumped reproduction files
};

struct SuiteOptions {
    uint64_t seed = 1;
    // Applied to approximate (floating-point) properties; exact properties
    // always use tolerance 0.
    double tolerance = 1e-5;
    std::string dump_dir = ".";
    bool dump_on_failure = true;
};

std::vector<PropertyResult> run_suite_coords(const SuiteOptions& opt);
std::vector<PropertyResult> run_suite_groups(const SuiteOptions& opt);
std::vector<PropertyResult> run_suite_conv(const SuiteOptions& opt);
std::vector<PropertyResult> run_suite_gconv(const SuiteOptions& opt);

/// name is one of coords, groups, conv, gconv, all.
std::vector<PropertyResult> run_suite(const std::string& name, const SuiteOptions& opt);

/// Disk image with valid cells uniform in [-1, 1).
HexImage random_disk_image(SplitMix64& rng, int radius, int channels, int orientations = 1);

/// Filter bank with disk cells uniform in [-1, 1); corners zero.
HexFilter random_filter_bank(SplitMix64& rng, int out_channels, int in_channels, int radius);

/// The filter operator L_{r^steps}: each plane spatially rotated, no
/// orientation cycling (planar filters).
HexFilter rotate_filter(const HexFilter& psi, int steps);

} // namespace hexa
