#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "actsynth/rng.hpp"
#include "actsynth/shapes.hpp"

namespace actsynth {

struct SceneParams {
    int width = 0;      // [800, 2560]
    int height = 0;     // [600, 1440]
    Rgb background{};   // HSV-sampled
    int element_count = 0;  // [3, 8]
    uint64_t seed = 0;
};

struct ChromeAnnotation {
    // 8 named corner/edge-midpoint control points for area shapes, or the 2
    // endpoint control points for line-like shapes.
    std::vector<std::pair<std::string, Point>> box_points;
    std::vector<Point> vertex_markers;
    Point rotation_handle_center{};
    std::string rotation_anchor;  // top_center / right_center / bottom_center / left_center
};

struct CanvasElement {
    std::string id;  // "shape_NNNN"
    int kind_index = 0;
    Style style{};
    bool style_flagged = false;  // color sampler fell back
    ShapeResult shape{};
    ChromeAnnotation chrome{};
    std::string reference;
    Rect placed_box{};           // the box handed to the rasterizer
    bool placement_flagged = false;
    double achieved_overlap = 0.0;  // max pairwise overlap at placement time
};

struct CanvasScene {
    SceneParams params{};
    std::vector<CanvasElement> elements;
};

struct SceneLimits {
    int width_min = 800, width_max = 2560;
    int height_min = 600, height_max = 1440;
    int elements_min = 3, elements_max = 8;
};

SceneParams sample_scene(Rng& rng, const SceneLimits& limits = {});

// Importance-weighted kind sampling (common primitives get 2x weight).
std::vector<int> sample_kinds(int count, Rng& rng);

struct Placement {
    int kind_index = 0;
    Rect box{};
    bool flagged = false;           // no candidate under the overlap threshold
    double achieved_overlap = 0.0;  // max pairwise ratio of the kept candidate
};

// Sequential placement with up to 50 trials per element; a candidate is
// accepted when its max pairwise overlap_ratio with the placed boxes is
// below 0.25, otherwise the lowest-overlap candidate is kept and flagged.
// Element i draws from Rng(seed_mix(placement_seed, "place", i)).
std::vector<Placement> place_elements(const SceneParams& params, const std::vector<int>& kinds,
                                      uint64_t placement_seed);

ChromeAnnotation make_chrome(const ShapeResult& shape, int kind_index, int canvas_w,
                             int canvas_h, Rng& rng);

// Full deterministic scene build: (global_seed, scene_index) -> scene,
// including styles, chrome and unique references.
CanvasScene build_scene(uint64_t global_seed, uint64_t scene_index,
                        const SceneLimits& limits = {});

Image render_scene(const CanvasScene& scene);

nlohmann::ordered_json scene_annotation(const CanvasScene& scene, const std::string& image_ref);

// Parses an annotation document back into a scene skeleton (annotation
// fields only). Throws std::runtime_error on missing fields.
CanvasScene scene_from_annotation(const nlohmann::ordered_json& doc);

}  // namespace actsynth
