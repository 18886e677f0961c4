#include "saltpepper/image.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace saltpepper {

namespace {

void check_dimensions(int width, int height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("GrayImage dimensions must be >= 1, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
}

} // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height),
      pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
    check_dimensions(width, height);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dimensions(width, height);
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("GrayImage pixel buffer has " +
                                    std::to_string(pixels_.size()) + " entries, expected " +
                                    std::to_string(static_cast<std::size_t>(width) * height));
    }
}

Window3 extract_window3(const GrayImage& img, int row, int col) {
    if (row < 0 || row >= img.height() || col < 0 || col >= img.width()) {
        throw std::out_of_range("window coordinate (" + std::to_string(row) + ", " +
                                std::to_string(col) + ") outside " +
                                std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                                " image");
    }
    const int up = row > 0 ? row - 1 : 0;
    const int down = row < img.height() - 1 ? row + 1 : img.height() - 1;
    const int left = col > 0 ? col - 1 : 0;
    const int right = col < img.width() - 1 ? col + 1 : img.width() - 1;
    return Window3{{img(up, left),   img(up, col),   img(up, right),
                    img(row, left),  img(row, col),  img(row, right),
                    img(down, left), img(down, col), img(down, right)}};
}

std::uint8_t median_in_place(std::span<std::uint8_t> values) {
    if (values.empty()) {
        throw std::domain_error("median of an empty value list");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    // Even count: mean of the two middle values, .5 rounding up.
    const int lo = values[n / 2 - 1];
    const int hi = values[n / 2];
    return static_cast<std::uint8_t>((lo + hi + 1) / 2);
}

std::uint8_t median_of(std::span<const std::uint8_t> values) {
    if (values.size() <= 16) {
        std::array<std::uint8_t, 16> buf;
        std::copy(values.begin(), values.end(), buf.begin());
        return median_in_place(std::span(buf.data(), values.size()));
    }
    std::vector<std::uint8_t> buf(values.begin(), values.end());
    return median_in_place(buf);
}

std::uint8_t mean_of(std::span<const std::uint8_t> values) {
    if (values.empty()) {
        throw std::domain_error("mean of an empty value list");
    }
    long long sum = 0;
    for (std::uint8_t v : values) {
        sum += v;
    }
    const long long n = static_cast<long long>(values.size());
    // floor(sum/n + 1/2) in integers: round half up.
    return static_cast<std::uint8_t>((2 * sum + n) / (2 * n));
}

} // namespace saltpepper
