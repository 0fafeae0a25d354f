#include "actsynth/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <stdexcept>

#include "actsynth/hashing.hpp"

namespace actsynth {

namespace {

struct FileCloser {
    FILE* f;
    ~FileCloser() {
        if (f) fclose(f);
    }
};

}  // namespace

void write_png(const std::filesystem::path& path, const Image& img) {
    FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open for write: " + path.string());
    FileCloser closer{f};

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw std::runtime_error("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("png write failed: " + path.string());
    }
    png_init_io(png, f);
    png_set_compression_level(png, 6);
    png_set_filter(png, 0, PNG_FILTER_NONE);
    png_set_IHDR(png, info, png_uint_32(img.width), png_uint_32(img.height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height; ++y) {
        png_write_row(png, const_cast<png_bytep>(img.pixels.data() + size_t(y) * img.width * 3));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

GrayImage read_png_gray(const std::filesystem::path& path) {
    FILE* f = std::fopen(path.string().c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open: " + path.string());
    FileCloser closer{f};

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw std::runtime_error("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("png read failed: " + path.string());
    }
    png_init_io(png, f);
    png_read_info(png, info);
    png_set_strip_16(png);
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    png_set_strip_alpha(png);
    int color_type = png_get_color_type(png, info);
    if (color_type & PNG_COLOR_MASK_COLOR) png_set_rgb_to_gray_fixed(png, 1, -1, -1);
    png_read_update_info(png, info);

    GrayImage out;
    out.width = int(png_get_image_width(png, info));
    out.height = int(png_get_image_height(png, info));
    out.pixels.resize(size_t(out.width) * out.height);
    size_t rowbytes = png_get_rowbytes(png, info);
    std::vector<uint8_t> row(rowbytes);
    for (int y = 0; y < out.height; ++y) {
        png_read_row(png, row.data(), nullptr);
        std::memcpy(out.pixels.data() + size_t(y) * out.width, row.data(), size_t(out.width));
    }
    png_destroy_read_struct(&png, &info, nullptr);
    return out;
}

std::string image_content_hash(const Image& img) {
    std::string head = std::to_string(img.width) + "x" + std::to_string(img.height) + ":";
    std::vector<uint8_t> buf;
    buf.reserve(head.size() + img.pixels.size());
    buf.insert(buf.end(), head.begin(), head.end());
    buf.insert(buf.end(), img.pixels.begin(), img.pixels.end());
    return sha256_hex(buf);
}

}  // namespace actsynth
