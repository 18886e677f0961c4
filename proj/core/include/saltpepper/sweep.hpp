#ifndef SALTPEPPER_SWEEP_HPP
#define SALTPEPPER_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "saltpepper/image.hpp"
#include "saltpepper/metrics.hpp"
#include "saltpepper/pgm.hpp"

namespace saltpepper {

/// Default seed used by the CLI and the shipped benchmark tables.
inline constexpr std::uint64_t kDefaultSeed = 1;

/// The eight filters benchmarked against each other in the reference tables.
std::vector<std::string> table_filter_ids();

/// {0.1, 0.2, ..., 0.9}
std::vector<double> default_densities();

struct SweepConfig {
    std::string image_path;
    std::vector<double> densities = default_densities();  // each in (0, 1]
    std::vector<std::string> filter_ids;  // empty means all registered
    std::uint64_t seed = kDefaultSeed;
    std::string output_path;
};

/// Seed for the i-th density of a sweep: base_seed ^ splitmix64(i). Derived
/// per density, not per filter, so every filter at one density consumes a
/// bit-identical noisy image.
std::uint64_t density_seed(std::uint64_t base_seed, std::size_t density_index) noexcept;

/// Applies one filter to an already-noisy image and scores it against the
/// clean original.
MetricsRow evaluate_cell(const GrayImage& clean, const GrayImage& noisy,
                         double density, const std::string& filter_id);

/// Runs the density x filter grid. Cells may be evaluated on up to `threads`
/// workers; the row order (density-major, then configured filter order) and
/// every byte of the result are independent of the thread count.
std::vector<MetricsRow> sweep_rows(const GrayImage& clean,
                                   const std::vector<double>& densities,
                                   const std::vector<std::string>& filter_ids,
                                   std::uint64_t seed, unsigned threads = 1);

/// Header "density,filter,mae,psnr_db,ief"; all floats with 4 decimal
/// places; infinities as "inf".
std::string to_csv(const std::vector<MetricsRow>& rows);

/// Loads the image, corrupts it at `density`, applies one filter, writes the
/// restored image to `restored_path`, and returns the scores against the
/// clean original.
MetricsRow run_single(const std::string& image_path, const std::string& filter_id,
                      double density, std::uint64_t seed,
                      const std::string& restored_path,
                      PgmFormat format = PgmFormat::kBinary);

/// Full sweep to a CSV file. No partial file is left behind on failure.
void run_sweep(const SweepConfig& cfg);

/// Worker count for run_sweep: hardware concurrency, capped by the
/// SALTPEPPER_THREADS environment variable when set.
unsigned resolve_thread_count();

} // namespace saltpepper

#endif
