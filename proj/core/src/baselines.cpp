#include "saltpepper/baselines.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "saltpepper/errors.hpp"
#include "saltpepper/filters.hpp"

namespace saltpepper {

namespace {

void check_window_side(int k, const char* what) {
    if (k < 3 || k % 2 == 0) {
        throw ConfigError(std::string(what) + " must be odd and >= 3, got " +
                          std::to_string(k));
    }
}

// k x k replicate-padded gather into a reusable buffer.
void gather_window(const GrayImage& in, int row, int col, int k,
                   std::vector<std::uint8_t>& buf) {
    buf.clear();
    const int r = k / 2;
    for (int dr = -r; dr <= r; ++dr) {
        const int rr = std::clamp(row + dr, 0, in.height() - 1);
        for (int dc = -r; dc <= r; ++dc) {
            const int cc = std::clamp(col + dc, 0, in.width() - 1);
            buf.push_back(in(rr, cc));
        }
    }
}

inline std::array<std::uint8_t, 9> gather3(const GrayImage& in, int row, int col) noexcept {
    const int up = row > 0 ? row - 1 : 0;
    const int down = row < in.height() - 1 ? row + 1 : in.height() - 1;
    const int left = col > 0 ? col - 1 : 0;
    const int right = col < in.width() - 1 ? col + 1 : in.width() - 1;
    return {in(up, left),   in(up, col),   in(up, right),
            in(row, left),  in(row, col),  in(row, right),
            in(down, left), in(down, col), in(down, right)};
}

template <typename Restore>
GrayImage decision_pass(const GrayImage& in, Restore&& restore) {
    GrayImage out = in;
    for (int row = 0; row < in.height(); ++row) {
        for (int col = 0; col < in.width(); ++col) {
            if (!pixel_is_noisy(in(row, col))) {
                continue;
            }
            out(row, col) = restore(gather3(in, row, col));
        }
    }
    return out;
}

struct Trimmed {
    std::array<std::uint8_t, 9> values;
    std::size_t count = 0;
};

inline Trimmed trim_extremes(const std::array<std::uint8_t, 9>& window) noexcept {
    Trimmed t;
    for (std::uint8_t v : window) {
        if (!pixel_is_noisy(v)) {
            t.values[t.count++] = v;
        }
    }
    return t;
}

} // namespace

GrayImage median_filter(const GrayImage& img, int k) {
    check_window_side(k, "median filter window");
    GrayImage out(img.width(), img.height());
    std::vector<std::uint8_t> buf;
    buf.reserve(static_cast<std::size_t>(k) * k);
    for (int row = 0; row < img.height(); ++row) {
        for (int col = 0; col < img.width(); ++col) {
            gather_window(img, row, col, k, buf);
            out(row, col) = median_in_place(buf);
        }
    }
    return out;
}

GrayImage amf(const GrayImage& img, AmfConfig cfg) {
    check_window_side(cfg.max_window, "amf max window");
    GrayImage out(img.width(), img.height());
    std::vector<std::uint8_t> buf;
    buf.reserve(static_cast<std::size_t>(cfg.max_window) * cfg.max_window);
    for (int row = 0; row < img.height(); ++row) {
        for (int col = 0; col < img.width(); ++col) {
            const std::uint8_t center = img(row, col);
            std::uint8_t result = 0;
            for (int k = 3;; k += 2) {
                gather_window(img, row, col, k, buf);
                const std::size_t n = buf.size();
                // n is odd, so nth_element yields the same median as the
                // sort-based rule.
                std::nth_element(buf.begin(), buf.begin() + n / 2, buf.end());
                const std::uint8_t med = buf[n / 2];
                const auto [lo, hi] = std::minmax_element(buf.begin(), buf.end());
                if (*lo < med && med < *hi) {
                    result = (*lo < center && center < *hi) ? center : med;
                    break;
                }
                if (k + 2 > cfg.max_window) {
                    result = med;  // largest window examined
                    break;
                }
            }
            out(row, col) = result;
        }
    }
    return out;
}

GrayImage dbutmf(const GrayImage& img) {
    return decision_pass(img, [](const std::array<std::uint8_t, 9>& w) -> std::uint8_t {
        Trimmed t = trim_extremes(w);
        if (t.count == 0) {
            std::array<std::uint8_t, 9> copy = w;
            return median_in_place(copy);
        }
        return median_in_place(std::span(t.values.data(), t.count));
    });
}

GrayImage dbptgmf(const GrayImage& img) {
    return decision_pass(img, [](const std::array<std::uint8_t, 9>& w) -> std::uint8_t {
        Trimmed t = trim_extremes(w);
        if (t.count > 0) {
            return median_in_place(std::span(t.values.data(), t.count));
        }
        const bool any_salt = std::find(w.begin(), w.end(), 255) != w.end();
        const bool any_pepper = std::find(w.begin(), w.end(), 0) != w.end();
        if (any_salt && any_pepper) {
            // The documented drawback: the untrimmed median of a mixed
            // all-extreme window is itself 0 or 255.
            std::array<std::uint8_t, 9> copy = w;
            return median_in_place(copy);
        }
        return any_pepper ? 255 : 0;
    });
}

GrayImage utmf(const GrayImage& img) {
    return decision_pass(img, [](const std::array<std::uint8_t, 9>& w) -> std::uint8_t {
        Trimmed t = trim_extremes(w);
        if (t.count == 0) {
            return mean_of(w);
        }
        return mean_of(std::span(t.values.data(), t.count));
    });
}

GrayImage utmp(const GrayImage& img) {
    return decision_pass(img, [](const std::array<std::uint8_t, 9>& w) -> std::uint8_t {
        Trimmed t = trim_extremes(w);
        std::span<const std::uint8_t> pool =
            t.count > 0 ? std::span<const std::uint8_t>(t.values.data(), t.count)
                        : std::span<const std::uint8_t>(w.data(), w.size());
        const auto [lo, hi] = std::minmax_element(pool.begin(), pool.end());
        return static_cast<std::uint8_t>((*lo + *hi + 1) / 2);
    });
}

GrayImage dmf_utmf(const GrayImage& img) {
    return utmf(dmf(img));
}

GrayImage dmf_utmp(const GrayImage& img) {
    return utmp(dmf(img));
}

} // namespace saltpepper
