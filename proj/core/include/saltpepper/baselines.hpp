#ifndef SALTPEPPER_BASELINES_HPP
#define SALTPEPPER_BASELINES_HPP

#include "saltpepper/image.hpp"

namespace saltpepper {

// Comparison filters. The decision-based ones (dbutmf, dbptgmf, utmf, utmp)
// share the same contract as the stage filters in filters.hpp: only pixels
// valued 0 or 255 may change, and every pass is non-recursive.

struct AmfConfig {
    int max_window = 11;  // odd, >= 3
};

/// Plain median filter: every pixel unconditionally becomes the median of its
/// k x k replicate-padded window. Throws ConfigError unless k is odd and >= 3.
GrayImage median_filter(const GrayImage& img, int k);

/// Two-level adaptive median filter. Starting at 3x3: when the window median
/// lies strictly between the window min and max, output the center if it is
/// strictly between them as well, else the median; otherwise grow the window
/// by 2 and repeat, falling back to the median of the largest window.
GrayImage amf(const GrayImage& img, AmfConfig cfg = {});

/// Decision-based unsymmetric trimmed median filter. Extreme pixels take the
/// median of the 0/255-trimmed 3x3 window; when the trimmed set is empty the
/// untrimmed window median is used, which reproduces the method's documented
/// failure at high density.
GrayImage dbutmf(const GrayImage& img);

/// Like mdbptgmf except the mixed all-extreme window keeps the untrimmed
/// window median (necessarily 0 or 255), the drawback mdbptgmf fixes.
GrayImage dbptgmf(const GrayImage& img);

/// Unsymmetric trimmed mean: extreme pixels take the mean of the trimmed
/// window, falling back to the untrimmed window mean.
GrayImage utmf(const GrayImage& img);

/// Unsymmetric trimmed midpoint: extreme pixels take round((min + max) / 2)
/// of the trimmed window, falling back to the untrimmed window midpoint.
GrayImage utmp(const GrayImage& img);

/// Cascade dmf -> utmf.
GrayImage dmf_utmf(const GrayImage& img);

/// Cascade dmf -> utmp.
GrayImage dmf_utmp(const GrayImage& img);

} // namespace saltpepper

#endif
