#ifndef SALTPEPPER_NOISE_HPP
#define SALTPEPPER_NOISE_HPP

#include <cstdint>
#include <vector>

#include "saltpepper/image.hpp"

namespace saltpepper {

/// Salt-and-pepper corruption parameters. Injection is fully determined by
/// (image, spec): the generator is std::mt19937_64 seeded with `seed`,
/// positions come from a partial Fisher-Yates shuffle, and bounded draws use
/// rejection sampling, so results are reproducible across platforms.
struct NoiseSpec {
    double density = 0.0;        // fraction of pixels corrupted, in [0, 1]
    std::uint64_t seed = 0;
    double salt_fraction = 0.5;  // share of corrupted pixels set to 255
};

/// A corrupted image plus the ground-truth mask of which pixels were hit.
/// mask[i] != 0 implies noisy pixel i is 0 or 255; mask[i] == 0 implies the
/// pixel is byte-identical to the original.
struct CorruptionRecord {
    GrayImage noisy;
    std::vector<std::uint8_t> mask;
};

/// Corrupts exactly floor(density * pixel_count) distinct pixels, chosen
/// uniformly without replacement; floor(salt_fraction * count) of them become
/// 255 and the remainder 0. Throws ConfigError when the spec is out of range.
CorruptionRecord inject(const GrayImage& img, const NoiseSpec& spec);

/// SplitMix64 mixer; used to derive per-density seeds in sweeps.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

} // namespace saltpepper

#endif
