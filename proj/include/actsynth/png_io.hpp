#pragma once

#include <filesystem>
#include <string>

#include "actsynth/raster.hpp"

namespace actsynth {

// RGB8, compression level 6, filter NONE, no ancillary chunks: output bytes
// are reproducible for a given pixel buffer and zlib build.
void write_png(const std::filesystem::path& path, const Image& img);

// Single-channel read for masks; RGB/RGBA/palette inputs are converted to
// luminance. Values are raw 0..255 bytes.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;
};
GrayImage read_png_gray(const std::filesystem::path& path);

// Content hash of the raw pixel buffer (not the encoded file), so image
// identity is independent of the PNG encoder build.
std::string image_content_hash(const Image& img);

}  // namespace actsynth
