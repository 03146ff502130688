#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hexa/conv.hpp"
#include "hexa/errors.hpp"
#include "hexa/gconv.hpp"
#include "hexa/image.hpp"
#include "hexa/io.hpp"
#include "hexa/suite.hpp"

namespace {

hexa::Flavor flavor_from_group(const std::string& group) {
    return group == "p6" ? hexa::Flavor::C6 : hexa::Flavor::D6;
}

int cmd_resample(const std::string& src_path, const std::string& out_path, double spacing) {
    const hexa::PlanarImage src = hexa::read_pgm(src_path);
    const hexa::HexImage hex = hexa::resample_square_to_hex(src, spacing);
    hexa::save_hext(out_path, hex);
    long valid = 0;
    for (uint8_t m : hex.mask) valid += m;
    std::printf("rows=%d cols=%d valid=%ld\n", hex.rows, hex.cols, valid);
    return 0;
}

int cmd_convolve(const std::string& in_path, const std::string& filter_path,
                 const std::string& out_path, const std::string& backend) {
    const hexa::HexImage f = hexa::load_hex_image(in_path);
    const hexa::HexFilter psi = hexa::load_hex_filter(filter_path);
    const hexa::HexImage out = hexa::hexconv(f, psi, hexa::backend_from_name(backend));
    hexa::save_hext(out_path, out);
    return 0;
}

int cmd_gconv(const std::string& in_path, const std::string& filter_path,
              const std::string& out_path, const std::string& group, const std::string& layer,
              const std::string& backend) {
    const hexa::Flavor flavor = flavor_from_group(group);
    const hexa::GLayer glayer = hexa::layer_from_name(layer);
    const hexa::HexImage f = hexa::load_hex_image(in_path);
    const hexa::HexFilter bank = hexa::load_hex_filter(filter_path);
    const hexa::Backend bk = hexa::backend_from_name(backend);

    const hexa::IndexArray I = hexa::build_index_array(flavor, glayer, bank.side, bank.radius);
    const hexa::HexFilter tb = hexa::transform_filters(bank, I);
    std::printf("transformed bank %dx%dx%dx%d\n", tb.out_channels, tb.in_channels, tb.side,
                tb.side);

    const hexa::GFeatureMap out = glayer == hexa::GLayer::First
                                      ? hexa::gconv_first(f, bank, flavor, bk)
                                      : hexa::gconv_full({f, flavor}, bank, bk);
    hexa::save_hext(out_path, out.map);
    return 0;
}

int cmd_check(const std::string& suite, uint64_t seed, double tolerance,
              const std::string& dump_dir) {
    hexa::SuiteOptions opt;
    opt.seed = seed;
    opt.tolerance = tolerance;
    opt.dump_dir = dump_dir;
    const std::vector<hexa::PropertyResult> results = hexa::run_suite(suite, opt);

    int failed = 0;
    for (const hexa::PropertyResult& r : results) {
        std::string tol = r.tolerance == 0.0 ? "exact" : "tol=" + std::to_string(r.tolerance);
        std::printf("%s  %s/%s  max_err=%.3e  %s%s%s\n", r.passed ? "PASS" : "FAIL",
                    r.suite.c_str(), r.name.c_str(), r.max_error, tol.c_str(),
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
        failed += r.passed ? 0 : 1;
    }
    std::printf("%zu/%zu properties passed (seed %llu)\n",
                results.size() - static_cast<std::size_t>(failed), results.size(),
                static_cast<unsigned long long>(seed));
    return failed == 0 ? 0 : 1;
}

int cmd_render(const std::string& in_path, const std::string& out_path, int channel,
               int orientation, bool orientation_given) {
    const hexa::HexImage f = hexa::load_hex_image(in_path);
    if (f.orientations == 1 && orientation_given)
        throw hexa::ArgumentError("--orientation is not applicable to a planar map");
    hexa::render_pgm(f, channel, orientation, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signal processing on hexagonal lattices (p6/p6m group convolution)"};
    app.require_subcommand(1);

    std::string src_path, in_path, filter_path, out_path;
    double spacing = 1.0;
    std::string backend = "axial", group = "p6", layer = "first", suite = "all",
                dump_dir = ".";
    uint64_t seed = 1;
    double tolerance = 1e-5;
    int channel = 0, orientation = 0;

    CLI::App* resample = app.add_subcommand("resample", "square PGM to hexagonal lattice");
    resample->add_option("src", src_path, "input PGM (P5 or P2)")->required();
    resample->add_option("out", out_path, "output HEXT image")->required();
    resample->add_option("--spacing", spacing, "hex lattice spacing in source pixels");

    CLI::App* convolve = app.add_subcommand("convolve", "planar hexagonal convolution");
    convolve->add_option("input", in_path, "input HEXT image")->required();
    convolve->add_option("filter", filter_path, "filter bank HEXT")->required();
    convolve->add_option("out", out_path, "output HEXT image")->required();
    convolve->add_option("--backend", backend, "axial, double-width or offset")
        ->check(CLI::IsMember({"axial", "double-width", "offset"}));

    CLI::App* gconv = app.add_subcommand("gconv", "group convolution (filter transform + conv)");
    gconv->add_option("input", in_path, "input HEXT image or G-map")->required();
    gconv->add_option("filters", filter_path, "filter bank HEXT")->required();
    gconv->add_option("out", out_path, "output HEXT G-map")->required();
    gconv->add_option("--group", group, "p6 or p6m")->check(CLI::IsMember({"p6", "p6m"}));
    gconv->add_option("--layer", layer, "first (planar input) or full (G-map input)")
        ->check(CLI::IsMember({"first", "full"}));
    gconv->add_option("--backend", backend, "axial, double-width or offset")
        ->check(CLI::IsMember({"axial", "double-width", "offset"}));

    CLI::App* check = app.add_subcommand("check", "run property suites");
    check->add_option("--suite", suite, "coords, groups, conv, gconv or all")
        ->check(CLI::IsMember({"coords", "groups", "conv", "gconv", "all"}));
    check->add_option("--seed", seed, "seed for all randomized instances");
    check->add_option("--tolerance", tolerance, "tolerance for approximate properties");
    check->add_option("--dump-dir", dump_dir, "directory for failing-instance dumps");

    CLI::App* render = app.add_subcommand("render", "HEXT plane to PGM");
    render->add_option("input", in_path, "input HEXT image")->required();
    render->add_option("out", out_path, "output PGM")->required();
    render->add_option("--channel", channel, "channel to render");
    CLI::Option* orient_opt = render->add_option("--orientation", orientation,
                                                 "orientation to render (G-maps only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (resample->parsed()) return cmd_resample(src_path, out_path, spacing);
        if (convolve->parsed()) return cmd_convolve(in_path, filter_path, out_path, backend);
        if (gconv->parsed())
            return cmd_gconv(in_path, filter_path, out_path, group, layer, backend);
        if (check->parsed()) return cmd_check(suite, seed, tolerance, dump_dir);
        if (render->parsed())
            return cmd_render(in_path, out_path, channel, orientation, orient_opt->count() > 0);
    } catch (const hexa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
