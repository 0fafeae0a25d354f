#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "actsynth/raster.hpp"

namespace actsynth {

// Fixed-cell bitmap font (16 rows, up to 16 columns per glyph). Rendering is
// integer math only, so glyph boxes and pixels are platform-independent.
class BitmapFont {
public:
    struct Glyph {
        int advance = 8;                   // base-size advance in px
        std::array<uint16_t, 16> rows{};   // bit i = pixel column i
    };

    static BitmapFont load_json_file(const std::filesystem::path& path);
    static BitmapFont load_json_string(const std::string& json_text);

    // Embedded faces (monospace and proportional), used when no font
    // directory is supplied.
    static const BitmapFont& builtin_mono();
    static const BitmapFont& builtin_sans();

    const std::string& name() const { return name_; }
    int cell_height() const { return cell_height_; }
    int baseline() const { return baseline_; }
    const Glyph* glyph(uint32_t codepoint) const;
    int advance(uint32_t codepoint) const;  // falls back to '?' width

private:
    std::string name_;
    int cell_height_ = 16;
    int baseline_ = 13;
    std::map<uint32_t, Glyph> glyphs_;
};

struct FontSpec {
    const BitmapFont* font = nullptr;
    int scale = 1;       // integer pixel scale of the 16px cell
    bool bold = false;   // synthetic bold (1px horizontal dilation)
    Rgb color{0, 0, 0};
    int tracking = 0;    // extra px between glyphs, post-scale
};

// Width in px of `text` at the given scale/tracking (bold does not change
// advances).
int text_advance(const BitmapFont& font, int scale, int tracking, const std::string& text);

// Draws at top-left `origin`; returns the advance consumed.
int draw_text(Image& img, const FontSpec& spec, Point origin, const std::string& text);

}  // namespace actsynth
