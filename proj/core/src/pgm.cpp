#include "saltpepper/pgm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <string>

#include "saltpepper/errors.hpp"

namespace saltpepper {

namespace {

// Reads the next header/ASCII-raster token, skipping whitespace and '#'
// comments that run to end of line. Empty result means end of file.
std::string next_token(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == EOF) {
            return {};
        }
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        if (c == '#') {
            in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
            continue;
        }
        break;
    }
    std::string token;
    while (in.peek() != EOF && !std::isspace(in.peek()) && in.peek() != '#') {
        token.push_back(static_cast<char>(in.get()));
    }
    return token;
}

int parse_header_int(std::istream& in, const std::string& path, const char* field,
                     int min_value, int max_value) {
    const std::string token = next_token(in);
    if (token.empty()) {
        throw FormatError(path + ": malformed PGM header, missing " + field);
    }
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(token, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != token.size()) {
        throw FormatError(path + ": malformed PGM header, bad " + std::string(field) +
                          " '" + token + "'");
    }
    if (value < min_value || value > max_value) {
        if (std::string(field) == "maxval") {
            throw FormatError(path + ": unsupported maxval " + token +
                              " (only 8-bit images with maxval 255 are handled)");
        }
        throw FormatError(path + ": " + field + " " + token + " out of range");
    }
    return static_cast<int>(value);
}

} // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    const std::string pathstr = path.string();

    const std::string magic = next_token(in);
    if (magic != "P2" && magic != "P5") {
        throw FormatError(pathstr + ": not a PGM file (magic '" + magic +
                          "', expected P2 or P5)");
    }
    const int width = parse_header_int(in, pathstr, "width", 1,
                                       std::numeric_limits<int>::max());
    const int height = parse_header_int(in, pathstr, "height", 1,
                                        std::numeric_limits<int>::max());
    parse_header_int(in, pathstr, "maxval", 255, 255);

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<std::uint8_t> pixels(count);

    if (magic == "P5") {
        // Exactly one whitespace byte separates the header from the raster.
        const int sep = in.get();
        if (sep == EOF || !std::isspace(sep)) {
            throw FormatError(pathstr + ": malformed PGM header, expected whitespace "
                              "before binary raster");
        }
        in.read(reinterpret_cast<char*>(pixels.data()),
                static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count) {
            throw FormatError(pathstr + ": truncated pixel data, expected " +
                              std::to_string(count) + " bytes, got " +
                              std::to_string(in.gcount()));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::string token = next_token(in);
            if (token.empty()) {
                throw FormatError(pathstr + ": truncated pixel data, expected " +
                                  std::to_string(count) + " values, got " +
                                  std::to_string(i));
            }
            std::size_t pos = 0;
            long value = 0;
            try {
                value = std::stol(token, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != token.size() || value < 0 || value > 255) {
                throw FormatError(pathstr + ": bad pixel value '" + token + "'");
            }
            pixels[i] = static_cast<std::uint8_t>(value);
        }
    }
    return GrayImage(width, height, std::move(pixels));
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path, PgmFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    const char* magic = format == PgmFormat::kBinary ? "P5" : "P2";
    out << magic << "\n" << img.width() << " " << img.height() << "\n255\n";

    if (format == PgmFormat::kBinary) {
        out.write(reinterpret_cast<const char*>(img.pixels().data()),
                  static_cast<std::streamsize>(img.pixel_count()));
    } else {
        // Keep lines under the conventional 70-character limit.
        std::size_t line_len = 0;
        for (std::size_t i = 0; i < img.pixel_count(); ++i) {
            const std::string value = std::to_string(int(img.pixels()[i]));
            if (line_len == 0) {
                out << value;
                line_len = value.size();
            } else if (line_len + 1 + value.size() > 69) {
                out << "\n" << value;
                line_len = value.size();
            } else {
                out << " " << value;
                line_len += 1 + value.size();
            }
        }
        out << "\n";
    }
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

} // namespace saltpepper
