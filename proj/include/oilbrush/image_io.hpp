#pragma once

#include <stdexcept>
#include <string>

#include "oilbrush/raster.hpp"

namespace oilbrush {

struct IoError : std::runtime_error {
    enum class Kind { Unreadable, UnsupportedFormat, WriteFailure };
    IoError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

// 8-bit RGB from a PNG or JPEG file; alpha is dropped if present.
Raster<Rgb8> load_rgb(const std::string& path);

// Grayscale + alpha pair (texture, mask source) from a PNG.
void load_gray_alpha(const std::string& path, Raster<std::uint8_t>& gray,
                     Raster<std::uint8_t>& alpha);

void save_png(const std::string& path, const Raster<Rgb8>& img);
void save_gray_png(const std::string& path, const Raster<std::uint8_t>& img);
void save_gray_alpha_png(const std::string& path, const Raster<std::uint8_t>& gray,
                         const Raster<std::uint8_t>& alpha);

}  // namespace oilbrush
