#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "actsynth/geometry.hpp"

namespace actsynth {

// Binary mask; nonzero is foreground. Foreground connectivity is 8.
struct Mask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;  // row-major, 0 or 1

    bool at(int x, int y) const {
        if (x < 0 || y < 0 || x >= width || y >= height) return false;
        return data[size_t(y) * width + x] != 0;
    }
    void set(int x, int y, bool v) { data[size_t(y) * width + x] = v ? 1 : 0; }
    size_t count() const;
};

Mask load_mask_png(const std::filesystem::path& path);  // 0/255 PNG, 1 channel
// {"width", "height", "rle": [...]}: row-major run lengths, zeros first.
Mask mask_from_rle_json(const nlohmann::json& j);
nlohmann::ordered_json mask_to_rle_json(const Mask& m);

using ContourLoop = std::vector<std::pair<int, int>>;  // (x, y) pixel coordinates

// Border following over the outer border of each 8-connected component,
// largest component first. Loops start at the component's topmost-leftmost
// pixel and run clockwise. Throws std::invalid_argument on an empty mask.
std::vector<ContourLoop> extract_outer_contours(const Mask& mask);

struct BoundarySample {
    Polygon poly;
    bool flagged = false;  // k exceeded the loop length; full loop returned
};

// K points at approximately equal arc length along the loop, preserving
// trace order.
BoundarySample sample_boundary(const ContourLoop& loop, int k);

// Head/tail interleave: p1, p2, pN, p3, pN-1, p4, ... A permutation of the
// input; the first two elements stay in place.
std::vector<Point> zigzag_trail(const std::vector<Point>& poly);

struct RegionAnnotation {
    std::string id;
    std::string caption;  // externally supplied
    Rect bbox;            // tight mask bounds
    Point center;         // bbox midpoint
    Polygon boundary;     // K-point outer boundary (default K = 20)
    bool boundary_flagged = false;
};

RegionAnnotation build_region(const Mask& mask, const std::string& caption, const std::string& id,
                              int k = 20);

nlohmann::ordered_json region_annotation_json(const RegionAnnotation& region);
RegionAnnotation region_annotation_from_json(const nlohmann::json& j);

}  // namespace actsynth
