#include "saltpepper/noise.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "saltpepper/errors.hpp"

namespace saltpepper {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace {

// Unbiased draw from [0, bound) via rejection sampling. mt19937_64 output is
// fully specified by the standard, so the whole injection is portable;
// std::uniform_int_distribution is not and must stay out of this path.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

} // namespace

CorruptionRecord inject(const GrayImage& img, const NoiseSpec& spec) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
        throw ConfigError("noise density " + std::to_string(spec.density) +
                          " outside [0, 1]");
    }
    if (!(spec.salt_fraction >= 0.0 && spec.salt_fraction <= 1.0)) {
        throw ConfigError("salt fraction " + std::to_string(spec.salt_fraction) +
                          " outside [0, 1]");
    }

    const std::size_t total = img.pixel_count();
    const auto corrupt_count =
        static_cast<std::size_t>(std::floor(spec.density * static_cast<double>(total)));
    const auto salt_count =
        static_cast<std::size_t>(std::floor(spec.salt_fraction * static_cast<double>(corrupt_count)));

    CorruptionRecord record{img, std::vector<std::uint8_t>(total, 0)};
    if (corrupt_count == 0) {
        return record;
    }

    std::vector<std::uint32_t> positions(total);
    std::iota(positions.begin(), positions.end(), 0);

    // Partial Fisher-Yates: after i steps the prefix positions[0..i) is a
    // uniform sample without replacement, in draw order.
    std::mt19937_64 rng(spec.seed);
    for (std::size_t i = 0; i < corrupt_count; ++i) {
        const std::size_t j = i + bounded_draw(rng, total - i);
        std::swap(positions[i], positions[j]);
    }

    auto noisy = record.noisy.pixels();
    for (std::size_t i = 0; i < corrupt_count; ++i) {
        const std::uint32_t p = positions[i];
        noisy[p] = i < salt_count ? 255 : 0;
        record.mask[p] = 1;
    }
    return record;
}

} // namespace saltpepper
