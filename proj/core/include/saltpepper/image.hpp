#ifndef SALTPEPPER_IMAGE_HPP
#define SALTPEPPER_IMAGE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace saltpepper {

/// 8-bit single-channel raster, stored row-major. The shared currency of
/// every filter and metric in this library.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height, std::uint8_t fill = 0);
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }

    // Unchecked access; callers guarantee 0 <= row < height, 0 <= col < width.
    std::uint8_t operator()(int row, int col) const noexcept {
        return pixels_[static_cast<std::size_t>(row) * width_ + col];
    }
    std::uint8_t& operator()(int row, int col) noexcept {
        return pixels_[static_cast<std::size_t>(row) * width_ + col];
    }

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<std::uint8_t> pixels() noexcept { return pixels_; }

    bool operator==(const GrayImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

/// The nine values of a replicate-padded 3x3 neighborhood, row-major.
struct Window3 {
    std::array<std::uint8_t, 9> values{};

    /// The processing pixel, always values[4].
    std::uint8_t center() const noexcept { return values[4]; }
};

/// Neighborhood of (row, col) with clamp-to-edge padding: out-of-bounds
/// coordinates are replaced by the nearest valid pixel, so the window never
/// contains a value absent from the image.
/// Throws std::out_of_range when (row, col) is not inside the image.
Window3 extract_window3(const GrayImage& img, int row, int col);

/// True iff the value is one of the impulse extremes 0 or 255.
inline bool pixel_is_noisy(std::uint8_t value) noexcept {
    return value == 0 || value == 255;
}

/// Median with a fixed even-count rule: mean of the two middle values,
/// rounded half up. Sorts the given span in place.
/// Throws std::domain_error on an empty span.
std::uint8_t median_in_place(std::span<std::uint8_t> values);

/// As median_in_place but leaves the input untouched.
std::uint8_t median_of(std::span<const std::uint8_t> values);

/// Arithmetic mean rounded half up.
/// Throws std::domain_error on an empty span.
std::uint8_t mean_of(std::span<const std::uint8_t> values);

} // namespace saltpepper

#endif
