#ifndef SALTPEPPER_FILTERS_HPP
#define SALTPEPPER_FILTERS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "saltpepper/image.hpp"

namespace saltpepper {

// All filters here are single-pass and non-recursive: every window reads the
// stage's input buffer only, never previously restored outputs of the same
// pass. Pixels strictly inside (0, 255) are never modified.

/// Decision-based median filter, stage 1 of both cascades. Extreme-valued
/// pixels are replaced by the median of the untrimmed 3x3 window; that median
/// can itself be 0 or 255 at high density, which is what stage 2 cleans up.
GrayImage dmf(const GrayImage& img);

/// How mdbptgmf handles the all-0 and all-255 windows. kPaper swaps the
/// extremes (all-0 -> 255, all-255 -> 0); kMean substitutes the window mean,
/// which collapses to 0 and 255 respectively.
enum class MdbptgmfExtremeRule { kPaper, kMean };

/// Modified decision-based partial trimmed global mean filter, one of the two
/// stage-2 options. Four window cases for an extreme center:
///   all 0          -> 255 (or mean under kMean)
///   all 255        -> 0   (or mean under kMean)
///   only 0s + 255s -> window mean
///   otherwise      -> median of the window with all 0s and 255s removed
GrayImage mdbptgmf(const GrayImage& img,
                   MdbptgmfExtremeRule rule = MdbptgmfExtremeRule::kPaper);

/// Modified decision-based unsymmetric trimmed median filter, the other
/// stage-2 option. Two window cases for an extreme center:
///   only 0s and 255s -> window mean
///   otherwise        -> median of the window with all 0s and 255s removed
GrayImage mdbutmf(const GrayImage& img);

/// An ordered list of registered filter identifiers applied left to right.
struct FilterPipeline {
    std::vector<std::string> stages;
};

/// Runs each stage on the previous stage's full output image.
/// Throws ConfigError on an empty pipeline or an unknown stage identifier.
GrayImage cascade(const GrayImage& img, const FilterPipeline& pipeline);

/// Cascade dmf -> mdbptgmf.
GrayImage pa1(const GrayImage& img,
              MdbptgmfExtremeRule rule = MdbptgmfExtremeRule::kPaper);

/// Cascade dmf -> mdbutmf.
GrayImage pa2(const GrayImage& img);

using FilterFn = std::function<GrayImage(const GrayImage&)>;

/// All filters addressable by stable string identifiers, in registration
/// order: identity, mf, amf, dmf, dbutmf, mdbutmf, dbptgmf, mdbptgmf, utmf,
/// utmp, dmf+utmf, dmf+utmp, pa1, pa2.
const std::vector<std::pair<std::string, FilterFn>>& filter_registry();

std::vector<std::string> registered_filter_ids();

/// Throws ConfigError when the identifier is not registered.
const FilterFn& find_filter(const std::string& id);

GrayImage apply_filter(const GrayImage& img, const std::string& id);

} // namespace saltpepper

#endif
