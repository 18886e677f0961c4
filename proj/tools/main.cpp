// saltpepper: inject salt-and-pepper noise, run impulse filters, score the
// results, and reproduce the full density-sweep benchmark tables as CSV.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "saltpepper/errors.hpp"
#include "saltpepper/filters.hpp"
#include "saltpepper/metrics.hpp"
#include "saltpepper/noise.hpp"
#include "saltpepper/pgm.hpp"
#include "saltpepper/sweep.hpp"

namespace {

using namespace saltpepper;

std::string format_value(double v) {
    if (std::isinf(v)) {
        return "inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void print_row(const MetricsRow& row) {
    std::cout << to_csv({row});
}

int run(int argc, char** argv) {
    CLI::App app{"salt-and-pepper noise injection, removal, and benchmarking"};
    app.require_subcommand(1);

    const std::map<std::string, PgmFormat> format_names{{"p5", PgmFormat::kBinary},
                                                        {"p2", PgmFormat::kAscii}};
    const std::map<std::string, MdbptgmfExtremeRule> rule_names{
        {"paper", MdbptgmfExtremeRule::kPaper}, {"mean", MdbptgmfExtremeRule::kMean}};

    std::string image_path;
    std::string out_path;
    std::string filter_id = "pa2";
    double density = 0.0;
    double salt_fraction = 0.5;
    std::uint64_t seed = kDefaultSeed;
    PgmFormat format = PgmFormat::kBinary;
    MdbptgmfExtremeRule extreme_rule = MdbptgmfExtremeRule::kPaper;

    auto* inject_cmd = app.add_subcommand("inject", "corrupt an image with salt-and-pepper noise");
    inject_cmd->add_option("--image", image_path, "input PGM image")->required();
    inject_cmd->add_option("--density", density, "fraction of pixels to corrupt, in [0,1]")->required();
    inject_cmd->add_option("--seed", seed, "RNG seed");
    inject_cmd->add_option("--salt-fraction", salt_fraction, "share of corrupted pixels set to 255");
    inject_cmd->add_option("--out", out_path, "output PGM path")->required();
    inject_cmd->add_option("--format", format, "output format (p5 binary, p2 ascii)")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

    auto* filter_cmd = app.add_subcommand(
        "filter", "corrupt an image, restore it with one filter, report quality");
    filter_cmd->add_option("--image", image_path, "clean PGM image")->required();
    filter_cmd->add_option("--filter", filter_id, "filter identifier")->required();
    filter_cmd->add_option("--density", density, "noise density, 0 runs the filter on the clean image");
    filter_cmd->add_option("--seed", seed, "RNG seed");
    filter_cmd->add_option("--out", out_path, "restored PGM path")->required();
    filter_cmd->add_option("--format", format, "output format (p5 binary, p2 ascii)")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    filter_cmd->add_option("--mdbptgmf-case12", extreme_rule,
                           "uniform all-0/all-255 window rule for mdbptgmf and pa1")
        ->transform(CLI::CheckedTransformer(rule_names, CLI::ignore_case));

    std::string restored_path;
    std::string noisy_path;
    auto* metrics_cmd = app.add_subcommand("metrics", "score a restored image against a reference");
    metrics_cmd->add_option("--image", image_path, "reference PGM image")->required();
    metrics_cmd->add_option("--restored", restored_path, "restored PGM image")->required();
    metrics_cmd->add_option("--noisy", noisy_path, "noisy PGM image (enables ief)");

    SweepConfig sweep_cfg;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "full density x filter benchmark grid, written as CSV");
    sweep_cmd->add_option("--image", sweep_cfg.image_path, "clean PGM image")->required();
    sweep_cmd->add_option("--densities", sweep_cfg.densities, "comma-separated densities in (0,1]")
        ->delimiter(',');
    sweep_cmd->add_option("--filters", sweep_cfg.filter_ids,
                          "comma-separated filter identifiers (default: all registered)")
        ->delimiter(',');
    sweep_cmd->add_option("--seed", sweep_cfg.seed, "base RNG seed");
    sweep_cmd->add_option("--out", sweep_cfg.output_path, "CSV output path")->required();

    auto* list_cmd = app.add_subcommand("list-filters", "print the registered filter identifiers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (inject_cmd->parsed()) {
        const GrayImage clean = read_pgm(image_path);
        const CorruptionRecord record = inject(clean, NoiseSpec{density, seed, salt_fraction});
        write_pgm(record.noisy, out_path, format);
    } else if (filter_cmd->parsed()) {
        const GrayImage clean = read_pgm(image_path);
        const GrayImage noisy = inject(clean, NoiseSpec{density, seed}).noisy;
        GrayImage restored(1, 1);
        if (filter_id == "mdbptgmf") {
            restored = mdbptgmf(noisy, extreme_rule);
        } else if (filter_id == "pa1") {
            restored = pa1(noisy, extreme_rule);
        } else {
            restored = apply_filter(noisy, filter_id);
        }
        write_pgm(restored, out_path, format);
        print_row(MetricsRow{density, filter_id, mae(clean, restored), psnr(clean, restored),
                             ief(clean, noisy, restored)});
    } else if (metrics_cmd->parsed()) {
        const GrayImage reference = read_pgm(image_path);
        const GrayImage restored = read_pgm(restored_path);
        std::cout << "mae=" << format_value(mae(reference, restored)) << "\n";
        std::cout << "psnr_db=" << format_value(psnr(reference, restored)) << "\n";
        if (!noisy_path.empty()) {
            const GrayImage noisy = read_pgm(noisy_path);
            std::cout << "ief=" << format_value(ief(reference, noisy, restored)) << "\n";
        }
    } else if (sweep_cmd->parsed()) {
        run_sweep(sweep_cfg);
    } else if (list_cmd->parsed()) {
        for (const std::string& id : registered_filter_ids()) {
            std::cout << id << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
