#include "saltpepper/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "saltpepper/errors.hpp"
#include "saltpepper/filters.hpp"
#include "saltpepper/noise.hpp"

namespace saltpepper {

std::vector<std::string> table_filter_ids() {
    return {"amf", "dbutmf", "mdbutmf", "dbptgmf", "dmf+utmf", "dmf+utmp", "pa1", "pa2"};
}

std::vector<double> default_densities() {
    return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
}

std::uint64_t density_seed(std::uint64_t base_seed, std::size_t density_index) noexcept {
    return base_seed ^ splitmix64(static_cast<std::uint64_t>(density_index));
}

MetricsRow evaluate_cell(const GrayImage& clean, const GrayImage& noisy,
                         double density, const std::string& filter_id) {
    const GrayImage restored = apply_filter(noisy, filter_id);
    return MetricsRow{density, filter_id, mae(clean, restored), psnr(clean, restored),
                      ief(clean, noisy, restored)};
}

std::vector<MetricsRow> sweep_rows(const GrayImage& clean,
                                   const std::vector<double>& densities,
                                   const std::vector<std::string>& filter_ids,
                                   std::uint64_t seed, unsigned threads) {
    if (densities.empty()) {
        throw ConfigError("sweep needs at least one density");
    }
    for (double d : densities) {
        if (!(d > 0.0 && d <= 1.0)) {
            throw ConfigError("sweep density " + std::to_string(d) + " outside (0, 1]");
        }
    }
    const std::vector<std::string> filters =
        filter_ids.empty() ? registered_filter_ids() : filter_ids;
    for (const std::string& id : filters) {
        find_filter(id);  // fail before any work
    }

    // One noisy image per density, shared by every filter at that density.
    std::vector<GrayImage> noisy;
    noisy.reserve(densities.size());
    for (std::size_t i = 0; i < densities.size(); ++i) {
        noisy.push_back(inject(clean, NoiseSpec{densities[i], density_seed(seed, i)}).noisy);
    }

    const std::size_t cells = densities.size() * filters.size();
    std::vector<MetricsRow> rows(cells);
    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells)));

    auto work = [&](std::size_t cell) {
        const std::size_t di = cell / filters.size();
        const std::size_t fi = cell % filters.size();
        rows[cell] = evaluate_cell(clean, noisy[di], densities[di], filters[fi]);
    };

    if (workers == 1) {
        for (std::size_t cell = 0; cell < cells; ++cell) {
            work(cell);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t cell = next.fetch_add(1);
                    if (cell >= cells) {
                        return;
                    }
                    work(cell);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return rows;
}

namespace {

std::string format_metric(double v) {
    if (std::isinf(v)) {
        return "inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace

std::string to_csv(const std::vector<MetricsRow>& rows) {
    std::string csv = "density,filter,mae,psnr_db,ief\n";
    for (const MetricsRow& row : rows) {
        csv += format_metric(row.density);
        csv += ',';
        csv += row.filter_id;
        csv += ',';
        csv += format_metric(row.mae);
        csv += ',';
        csv += format_metric(row.psnr_db);
        csv += ',';
        csv += format_metric(row.ief);
        csv += '\n';
    }
    return csv;
}

MetricsRow run_single(const std::string& image_path, const std::string& filter_id,
                      double density, std::uint64_t seed,
                      const std::string& restored_path, PgmFormat format) {
    const GrayImage clean = read_pgm(image_path);
    const GrayImage noisy = inject(clean, NoiseSpec{density, seed}).noisy;
    const GrayImage restored = apply_filter(noisy, filter_id);
    write_pgm(restored, restored_path, format);
    return MetricsRow{density, filter_id, mae(clean, restored), psnr(clean, restored),
                      ief(clean, noisy, restored)};
}

void run_sweep(const SweepConfig& cfg) {
    if (cfg.output_path.empty()) {
        throw ConfigError("sweep needs an output path");
    }
    const GrayImage clean = read_pgm(cfg.image_path);
    const std::vector<MetricsRow> rows =
        sweep_rows(clean, cfg.densities, cfg.filter_ids, cfg.seed, resolve_thread_count());
    const std::string csv = to_csv(rows);

    // The CSV is built fully in memory first, so a failed write never leaves
    // a partial file behind.
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + cfg.output_path + "' for writing");
    }
    out.write(csv.data(), static_cast<std::streamsize>(csv.size()));
    out.close();
    if (!out) {
        std::remove(cfg.output_path.c_str());
        throw IoError("failed writing '" + cfg.output_path + "'");
    }
}

unsigned resolve_thread_count() {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("SALTPEPPER_THREADS")) {
        const long parsed = std::strtol(cap, nullptr, 10);
        if (parsed >= 1) {
            threads = std::min<unsigned>(threads, static_cast<unsigned>(parsed));
        }
    }
    return threads;
}

} // namespace saltpepper
