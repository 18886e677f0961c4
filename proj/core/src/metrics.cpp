#include "saltpepper/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "saltpepper/errors.hpp"

namespace saltpepper {

namespace {

constexpr double kPeakSquared = 255.0 * 255.0;

void check_same_shape(const GrayImage& a, const GrayImage& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw ShapeError("image dimensions differ: " + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                         "x" + std::to_string(b.height()));
    }
}

std::uint64_t absolute_error_sum(const GrayImage& a, const GrayImage& b) {
    std::uint64_t sum = 0;
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        sum += static_cast<std::uint64_t>(std::abs(int(pa[i]) - int(pb[i])));
    }
    return sum;
}

std::uint64_t squared_error_sum(const GrayImage& a, const GrayImage& b) {
    std::uint64_t sum = 0;
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const int d = int(pa[i]) - int(pb[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return sum;
}

} // namespace

double mae(const GrayImage& reference, const GrayImage& test) {
    check_same_shape(reference, test);
    return static_cast<double>(absolute_error_sum(reference, test)) /
           static_cast<double>(reference.pixel_count());
}

double mse(const GrayImage& reference, const GrayImage& test) {
    check_same_shape(reference, test);
    return static_cast<double>(squared_error_sum(reference, test)) /
           static_cast<double>(reference.pixel_count());
}

double psnr(const GrayImage& reference, const GrayImage& test) {
    const double err = mse(reference, test);
    if (err == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(kPeakSquared / err);
}

double ief(const GrayImage& reference, const GrayImage& noisy, const GrayImage& restored) {
    check_same_shape(reference, noisy);
    check_same_shape(reference, restored);
    const std::uint64_t noise_energy = squared_error_sum(noisy, reference);
    const std::uint64_t residual_energy = squared_error_sum(restored, reference);
    if (residual_energy == 0) {
        return noise_energy == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(noise_energy) / static_cast<double>(residual_energy);
}

} // namespace saltpepper
