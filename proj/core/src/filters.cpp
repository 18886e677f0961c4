#include "saltpepper/filters.hpp"

#include <algorithm>
#include <array>

#include "saltpepper/baselines.hpp"
#include "saltpepper/errors.hpp"

namespace saltpepper {

namespace {

// Replicate-padded 3x3 gather, the hot path shared by every decision filter.
inline std::array<std::uint8_t, 9> gather3(const GrayImage& in, int row, int col) noexcept {
    const int up = row > 0 ? row - 1 : 0;
    const int down = row < in.height() - 1 ? row + 1 : in.height() - 1;
    const int left = col > 0 ? col - 1 : 0;
    const int right = col < in.width() - 1 ? col + 1 : in.width() - 1;
    return {in(up, left),   in(up, col),   in(up, right),
            in(row, left),  in(row, col),  in(row, right),
            in(down, left), in(down, col), in(down, right)};
}

// Applies `restore(window) -> value` to every pixel valued 0 or 255 and
// copies the rest, reading only from the input buffer.
template <typename Restore>
GrayImage decision_pass(const GrayImage& in, Restore&& restore) {
    GrayImage out = in;
    for (int row = 0; row < in.height(); ++row) {
        for (int col = 0; col < in.width(); ++col) {
            const std::uint8_t center = in(row, col);
            if (!pixel_is_noisy(center)) {
                continue;
            }
            out(row, col) = restore(gather3(in, row, col));
        }
    }
    return out;
}

// The window with all 0s and 255s removed; count may be 0..9.
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

inline std::uint8_t untrimmed_median(std::array<std::uint8_t, 9> window) {
    return median_in_place(window);
}

} // namespace

GrayImage dmf(const GrayImage& img) {
    return decision_pass(img, [](const std::array<std::uint8_t, 9>& w) {
        return untrimmed_median(w);
    });
}

GrayImage mdbptgmf(const GrayImage& img, MdbptgmfExtremeRule rule) {
    return decision_pass(img, [rule](const std::array<std::uint8_t, 9>& w) -> std::uint8_t {
        Trimmed t = trim_extremes(w);
        if (t.count > 0) {
            return median_in_place(std::span(t.values.data(), t.count));
        }
        const bool any_salt = std::find(w.begin(), w.end(), 255) != w.end();
        const bool any_pepper = std::find(w.begin(), w.end(), 0) != w.end();
        if (any_salt && any_pepper) {
            return mean_of(w);
        }
        if (rule == MdbptgmfExtremeRule::kMean) {
            return mean_of(w);  // collapses to 0 or 255
        }
        return any_pepper ? 255 : 0;  // swap the uniform extreme
    });
}

GrayImage mdbutmf(const GrayImage& img) {
    return decision_pass(img, [](const std::array<std::uint8_t, 9>& w) -> std::uint8_t {
        Trimmed t = trim_extremes(w);
        if (t.count == 0) {
            return mean_of(w);
        }
        return median_in_place(std::span(t.values.data(), t.count));
    });
}

GrayImage cascade(const GrayImage& img, const FilterPipeline& pipeline) {
    if (pipeline.stages.empty()) {
        throw ConfigError("filter pipeline has no stages");
    }
    GrayImage out = img;
    for (const std::string& id : pipeline.stages) {
        out = find_filter(id)(out);
    }
    return out;
}

GrayImage pa1(const GrayImage& img, MdbptgmfExtremeRule rule) {
    return mdbptgmf(dmf(img), rule);
}

GrayImage pa2(const GrayImage& img) {
    return mdbutmf(dmf(img));
}

const std::vector<std::pair<std::string, FilterFn>>& filter_registry() {
    static const std::vector<std::pair<std::string, FilterFn>> registry = {
        {"identity", [](const GrayImage& img) { return img; }},
        {"mf", [](const GrayImage& img) { return median_filter(img, 3); }},
        {"amf", [](const GrayImage& img) { return amf(img); }},
        {"dmf", [](const GrayImage& img) { return dmf(img); }},
        {"dbutmf", [](const GrayImage& img) { return dbutmf(img); }},
        {"mdbutmf", [](const GrayImage& img) { return mdbutmf(img); }},
        {"dbptgmf", [](const GrayImage& img) { return dbptgmf(img); }},
        {"mdbptgmf", [](const GrayImage& img) { return mdbptgmf(img); }},
        {"utmf", [](const GrayImage& img) { return utmf(img); }},
        {"utmp", [](const GrayImage& img) { return utmp(img); }},
        {"dmf+utmf", [](const GrayImage& img) { return dmf_utmf(img); }},
        {"dmf+utmp", [](const GrayImage& img) { return dmf_utmp(img); }},
        {"pa1", [](const GrayImage& img) { return pa1(img); }},
        {"pa2", [](const GrayImage& img) { return pa2(img); }},
    };
    return registry;
}

std::vector<std::string> registered_filter_ids() {
    std::vector<std::string> ids;
    ids.reserve(filter_registry().size());
    for (const auto& [id, fn] : filter_registry()) {
        ids.push_back(id);
    }
    return ids;
}

const FilterFn& find_filter(const std::string& id) {
    for (const auto& [name, fn] : filter_registry()) {
        if (name == id) {
            return fn;
        }
    }
    throw ConfigError("unknown filter '" + id + "'");
}

GrayImage apply_filter(const GrayImage& img, const std::string& id) {
    return find_filter(id)(img);
}

} // namespace saltpepper
