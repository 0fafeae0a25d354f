#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "actsynth/geometry.hpp"

namespace actsynth {

struct CanvasScene;  // canvas.hpp

struct PaletteEntry {
    std::string name;
    Rgb rgb;
};

// 44 named colors; nearest-neighbor source for color words. The builtin
// palette matches data/palette.json byte for byte.
class Palette {
public:
    static const Palette& builtin();
    static Palette load(const std::filesystem::path& path);

    const std::vector<PaletteEntry>& entries() const { return entries_; }

private:
    std::vector<PaletteEntry> entries_;
};

// Argmin by redmean distance; ties break toward the earlier palette entry.
std::string nearest_color_name(const Rgb& c, const Palette& palette = Palette::builtin());

enum class GridGranularity { G3 = 3, G5 = 5 };

// Cell phrase for a point on a canvas, e.g. "upper-left area of the canvas"
// (3x3) or "top far-left area of the canvas" (5x5). Grid-boundary points
// fall into the lower-index cell.
std::string region_phrase(const Point& center, double canvas_w, double canvas_h,
                          GridGranularity grid);

// "<fill>-filled <shape> with <outline> outline in the <region>"; line-like
// shapes use "<outline> <shape> in the <region>".
std::string base_reference(int kind_index, const Rgb& fill, const Rgb& outline,
                           const Point& center, double canvas_w, double canvas_h,
                           const Palette& palette = Palette::builtin());

// Assigns pairwise-distinct references to every element via the
// disambiguation cascade: relative size, solid/dashed qualifier, 5x5 region
// re-phrase, reading-order ordinal prefix.
void assign_references(CanvasScene& scene, const Palette& palette = Palette::builtin());

}  // namespace actsynth
