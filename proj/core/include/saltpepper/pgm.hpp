#ifndef SALTPEPPER_PGM_HPP
#define SALTPEPPER_PGM_HPP

#include <filesystem>

#include "saltpepper/image.hpp"

namespace saltpepper {

enum class PgmFormat {
    kBinary,  // P5
    kAscii,   // P2
};

/// Parses binary (P5) and ASCII (P2) PGM with maxval 255. '#' comments and
/// arbitrary whitespace between header tokens are accepted.
/// Throws IoError when the file cannot be opened and FormatError for a
/// malformed header, an unsupported maxval, or truncated pixel data.
GrayImage read_pgm(const std::filesystem::path& path);

/// Writes the image so that read_pgm(write_pgm(img)) == img bit-exactly for
/// both formats. Throws IoError when the path is unwritable.
void write_pgm(const GrayImage& img, const std::filesystem::path& path,
               PgmFormat format = PgmFormat::kBinary);

} // namespace saltpepper

#endif
