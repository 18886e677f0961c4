#ifndef SALTPEPPER_METRICS_HPP
#define SALTPEPPER_METRICS_HPP

#include <string>

#include "saltpepper/image.hpp"

namespace saltpepper {

// All four measures accumulate in exact 64-bit integers and divide once, so
// results are bit-reproducible. Perfect-restoration cases that would divide
// by zero return +infinity, serialized as "inf" in CSV output.
// Every function throws ShapeError when the images' dimensions differ.

/// One line of a benchmark table: quality of `filter_id` at `density`.
struct MetricsRow {
    double density = 0.0;
    std::string filter_id;
    double mae = 0.0;
    double psnr_db = 0.0;  // +infinity iff mse == 0
    double ief = 0.0;      // +infinity on perfect restoration of a noisy image
};

/// Mean absolute error: sum |reference - test| / (width * height).
double mae(const GrayImage& reference, const GrayImage& test);

/// Mean squared error: sum (reference - test)^2 / (width * height).
double mse(const GrayImage& reference, const GrayImage& test);

/// Peak signal-to-noise ratio, 10 * log10(255^2 / mse), in dB.
double psnr(const GrayImage& reference, const GrayImage& test);

/// Image enhancement factor: squared error of the noisy image over squared
/// error of the restored image. Returns 1 when both are zero.
double ief(const GrayImage& reference, const GrayImage& noisy,
           const GrayImage& restored);

} // namespace saltpepper

#endif
