#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "actsynth/raster.hpp"

namespace actsynth {

enum class ShapeCategory {
    Rectangles,
    Ellipses,
    Triangles,
    Quadrilaterals,
    Polygons,
    Stars,
    Arrows,
    Lines,
    Callouts,
    Special,
    TextBoxes
};

struct ShapeKindInfo {
    std::string_view symbolic;  // annotation name, e.g. "rounded_square"
    std::string_view display;   // reference-expression name, e.g. "rounded square"
    ShapeCategory category;
    bool square_aspect = false;  // placement forces width == height
    bool line_like = false;      // stroke-only; endpoints instead of box points
    bool dense_curve = false;    // outline is a dense curve; no vertex markers
    bool common = false;         // importance-weighted 2x at sampling
};

// Number of registered primitives. The registry below is the library's full
// shape inventory; the constant is exported so suites can audit the count.
constexpr int kShapeKindCount = 73;

const std::array<ShapeKindInfo, kShapeKindCount>& shape_registry();
int shape_kind_index(std::string_view symbolic);  // -1 when unknown

struct Style {
    Rgb fill{};
    Rgb outline{};
    int stroke_width = 1;  // px in [1,5]
    bool dashed = false;
};

struct ShapeResult {
    Rect bbox;      // tight bounds of the generated geometry
    Point center;   // bbox midpoint
    std::vector<std::pair<std::string, Point>> vertices;   // named control vertices
    std::vector<std::pair<std::string, Point>> endpoints;  // line-like shapes only
};

// Geometry without pixels; used by placement/invariant sweeps.
ShapeResult shape_geometry(int kind_index, const Rect& box);

// Draws the shape and returns its geometry. Throws std::invalid_argument on
// an unknown kind index.
ShapeResult rasterize_shape(Image& img, int kind_index, const Rect& box, const Style& style);

}  // namespace actsynth
