#include "actsynth/canvas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "actsynth/refexpr.hpp"

namespace actsynth {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kOverlapThreshold = 0.25;
constexpr int kPlacementTrials = 50;
constexpr double kDashProbability = 0.2;

// Rotation handle dimensions (px): connector from the anchored edge
// midpoint, then a 300-degree circular arrow with a small arrowhead.
constexpr double kHandleConnector = 20.0;
constexpr double kHandleArcRadius = 9.0;
constexpr double kHandleArrowhead = 4.0;

}  // namespace

SceneParams sample_scene(Rng& rng, const SceneLimits& limits) {
    SceneParams p;
    p.seed = rng.seed();
    p.width = int(rng.uniform_int(limits.width_min, limits.width_max));
    p.height = int(rng.uniform_int(limits.height_min, limits.height_max));
    p.element_count = int(rng.uniform_int(limits.elements_min, limits.elements_max));
    p.background = sample_color_hsv(rng, {}).color;
    return p;
}

std::vector<int> sample_kinds(int count, Rng& rng) {
    const auto& reg = shape_registry();
    std::vector<int> bag;
    for (int i = 0; i < kShapeKindCount; ++i) {
        bag.push_back(i);
        if (reg[size_t(i)].common) bag.push_back(i);  // 2x weight
    }
    std::vector<int> out;
    out.reserve(size_t(count));
    for (int i = 0; i < count; ++i) out.push_back(rng.pick(bag));
    return out;
}

std::vector<Placement> place_elements(const SceneParams& params, const std::vector<int>& kinds,
                                      uint64_t placement_seed) {
    const auto& reg = shape_registry();
    double m = std::min(params.width, params.height);
    std::vector<Placement> placed;
    placed.reserve(kinds.size());

    for (size_t i = 0; i < kinds.size(); ++i) {
        const ShapeKindInfo& info = reg[size_t(kinds[i])];
        Rng rng(seed_mix(placement_seed, "place", i));
        double max_frac = info.line_like ? 0.60 : 0.40;

        Placement best;
        best.kind_index = kinds[i];
        best.achieved_overlap = 2.0;
        bool accepted = false;
        for (int trial = 0; trial < kPlacementTrials && !accepted; ++trial) {
            // even integer sizes keep bbox midpoints on integer coordinates
            auto even_size = [&](double frac) {
                int v = int(std::lround(frac * m));
                return std::max(8, v - v % 2);
            };
            int w = even_size(rng.uniform(0.08, max_frac));
            int h = info.square_aspect ? w : even_size(rng.uniform(0.08, max_frac));
            if (w >= params.width || h >= params.height) continue;
            int x = int(rng.uniform_int(0, params.width - w));
            int y = int(rng.uniform_int(0, params.height - h));
            Rect box{double(x), double(y), double(x + w), double(y + h)};
            double worst = 0.0;
            for (const Placement& q : placed)
                worst = std::max(worst, overlap_ratio(box, q.box));
            if (worst < best.achieved_overlap) {
                best.box = box;
                best.achieved_overlap = worst;
            }
            if (worst < kOverlapThreshold) accepted = true;
        }
        best.flagged = !accepted;
        placed.push_back(best);
    }
    return placed;
}

ChromeAnnotation make_chrome(const ShapeResult& shape, int kind_index, int canvas_w,
                             int canvas_h, Rng& rng) {
    const ShapeKindInfo& info = shape_registry()[size_t(kind_index)];
    ChromeAnnotation chrome;
    const Rect& b = shape.bbox;
    Point c = shape.center;

    if (info.line_like) {
        chrome.box_points = shape.endpoints;
    } else {
        chrome.box_points = {
            {"top_left", {b.x1, b.y1}},     {"top_center", {c.x, b.y1}},
            {"top_right", {b.x2, b.y1}},    {"right_center", {b.x2, c.y}},
            {"bottom_right", {b.x2, b.y2}}, {"bottom_center", {c.x, b.y2}},
            {"bottom_left", {b.x1, b.y2}},  {"left_center", {b.x1, c.y}},
        };
    }

    if (!info.dense_curve) {
        for (const auto& [name, p] : shape.vertices) chrome.vertex_markers.push_back(p);
    }

    struct Anchor {
        const char* name;
        Point at;
        Point dir;
    };
    std::vector<Anchor> anchors = {
        {"top_center", {c.x, b.y1}, {0, -1}},
        {"right_center", {b.x2, c.y}, {1, 0}},
        {"bottom_center", {c.x, b.y2}, {0, 1}},
        {"left_center", {b.x1, c.y}, {-1, 0}},
    };
    rng.shuffle(anchors);
    double reach = kHandleConnector + kHandleArcRadius;
    double extent = kHandleArcRadius + kHandleArrowhead;
    for (const Anchor& a : anchors) {
        Point center{a.at.x + a.dir.x * reach, a.at.y + a.dir.y * reach};
        if (center.x - extent >= 0 && center.y - extent >= 0 && center.x + extent <= canvas_w &&
            center.y + extent <= canvas_h) {
            chrome.rotation_anchor = a.name;
            chrome.rotation_handle_center = center;
            break;
        }
    }
    if (chrome.rotation_anchor.empty()) {
        const Anchor& a = anchors[0];
        chrome.rotation_anchor = a.name;
        chrome.rotation_handle_center = {
            std::clamp(a.at.x + a.dir.x * reach, extent, canvas_w - extent),
            std::clamp(a.at.y + a.dir.y * reach, extent, canvas_h - extent)};
    }
    return chrome;
}

CanvasScene build_scene(uint64_t global_seed, uint64_t scene_index, const SceneLimits& limits) {
    uint64_t scene_seed = seed_mix(global_seed, "scene", scene_index);
    CanvasScene scene;
    Rng scene_rng(scene_seed);
    scene.params = sample_scene(scene_rng, limits);

    Rng kind_rng = scene_rng.fork("kinds");
    std::vector<int> kinds = sample_kinds(scene.params.element_count, kind_rng);
    std::vector<Placement> placements = place_elements(scene.params, kinds, scene_seed);

    char idbuf[16];
    for (size_t i = 0; i < placements.size(); ++i) {
        CanvasElement el;
        std::snprintf(idbuf, sizeof idbuf, "shape_%04zu", i + 1);
        el.id = idbuf;
        el.kind_index = placements[i].kind_index;
        el.placed_box = placements[i].box;
        el.placement_flagged = placements[i].flagged;
        el.achieved_overlap = placements[i].achieved_overlap;

        Rng style_rng = scene_rng.fork("style", i);
        ColorSample fill = sample_color_hsv(style_rng, {{scene.params.background, 100.0}});
        ColorSample outline = sample_color_hsv(
            style_rng, {{fill.color, 60.0}, {scene.params.background, 100.0}});
        el.style.fill = fill.color;
        el.style.outline = outline.color;
        el.style_flagged = fill.flagged || outline.flagged;
        el.style.stroke_width = int(style_rng.uniform_int(1, 5));
        el.style.dashed = style_rng.bernoulli(kDashProbability);

        el.shape = shape_geometry(el.kind_index, el.placed_box);
        Rng chrome_rng = scene_rng.fork("chrome", i);
        el.chrome = make_chrome(el.shape, el.kind_index, scene.params.width,
                                scene.params.height, chrome_rng);
        scene.elements.push_back(std::move(el));
    }
    assign_references(scene);
    return scene;
}

namespace {

const Rgb kChromeBoxGray{120, 120, 120};
const Rgb kControlRed{220, 40, 40};
const Rgb kVertexBlue{40, 80, 230};
const Rgb kHandleGray{90, 90, 90};

void draw_chrome_overlay(Image& img, const CanvasElement& el) {
    const ShapeKindInfo& info = shape_registry()[size_t(el.kind_index)];
    const Rect& b = el.shape.bbox;
    if (!info.line_like) draw_rect_outline(img, b, kChromeBoxGray);

    // blue diamond vertex markers
    for (const Point& p : el.chrome.vertex_markers) {
        fill_polygon(img, std::vector<Point>{{p.x, p.y - 4}, {p.x + 4, p.y}, {p.x, p.y + 4},
                                             {p.x - 4, p.y}},
                     kVertexBlue);
    }
    // red control points
    for (const auto& [name, p] : el.chrome.box_points) fill_disc(img, p, 3.5, kControlRed);

    // rotation handle: connector + 300-degree arc + arrowhead
    const Point& hc = el.chrome.rotation_handle_center;
    Point anchor{el.shape.center.x, b.y1};
    if (el.chrome.rotation_anchor == "bottom_center") anchor = {el.shape.center.x, b.y2};
    else if (el.chrome.rotation_anchor == "left_center") anchor = {b.x1, el.shape.center.y};
    else if (el.chrome.rotation_anchor == "right_center") anchor = {b.x2, el.shape.center.y};
    stroke_polyline(img, {anchor, hc}, kHandleGray, 1.0);
    auto arc = arc_points(hc, kHandleArcRadius, kHandleArcRadius, -60, 240, 24);
    stroke_polyline(img, arc, kHandleGray, 1.5);
    Point tip = arc.back();
    // arrowhead tangent to the arc end
    double a = 240 * 3.14159265358979323846 / 180.0;
    fill_polygon(img,
                 std::vector<Point>{tip,
                                    {tip.x - std::sin(a) * kHandleArrowhead * 1.8 +
                                         std::cos(a) * kHandleArrowhead,
                                     tip.y + std::cos(a) * kHandleArrowhead * 1.8 +
                                         std::sin(a) * kHandleArrowhead},
                                    {tip.x - std::sin(a) * kHandleArrowhead * 1.8 -
                                         std::cos(a) * kHandleArrowhead,
                                     tip.y + std::cos(a) * kHandleArrowhead * 1.8 -
                                         std::sin(a) * kHandleArrowhead}},
                 kHandleGray);
}

}  // namespace

Image render_scene(const CanvasScene& scene) {
    Image img(scene.params.width, scene.params.height, scene.params.background);
    for (const CanvasElement& el : scene.elements) {
        rasterize_shape(img, el.kind_index, el.placed_box, el.style);
        draw_chrome_overlay(img, el);
    }
    return img;
}

namespace {

ordered_json point_json(const Point& p) { return ordered_json::array({p.x, p.y}); }

ordered_json named_points_json(const std::vector<std::pair<std::string, Point>>& pts) {
    ordered_json j = ordered_json::object();
    for (const auto& [name, p] : pts) j[name] = point_json(p);
    return j;
}

Point parse_point(const ordered_json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

ordered_json scene_annotation(const CanvasScene& scene, const std::string& image_ref) {
    ordered_json doc;
    doc["canvas"] = {{"width", scene.params.width},
                     {"height", scene.params.height},
                     {"background", {scene.params.background.r, scene.params.background.g,
                                     scene.params.background.b}}};
    if (!image_ref.empty()) doc["canvas"]["image"] = image_ref;
    ordered_json elements = ordered_json::array();
    for (const CanvasElement& el : scene.elements) {
        if (el.reference.empty())
            throw std::runtime_error("element " + el.id + " has no reference assigned");
        const ShapeKindInfo& info = shape_registry()[size_t(el.kind_index)];
        ordered_json je;
        je["id"] = el.id;
        je["shape_type"] = std::string(info.symbolic);
        je["reference"] = el.reference;
        je["bbox"] = {el.shape.bbox.x1, el.shape.bbox.y1, el.shape.bbox.x2, el.shape.bbox.y2};
        je["center_point"] = point_json(el.shape.center);
        je["box_points"] = named_points_json(el.chrome.box_points);
        je["rotation_handle_center"] = point_json(el.chrome.rotation_handle_center);
        je["styling"] = {{"fill", {el.style.fill.r, el.style.fill.g, el.style.fill.b}},
                         {"outline", {el.style.outline.r, el.style.outline.g, el.style.outline.b}},
                         {"stroke_width", el.style.stroke_width},
                         {"line_style", el.style.dashed ? "dashed" : "solid"}};
        if (!el.shape.vertices.empty()) je["vertices"] = named_points_json(el.shape.vertices);
        if (!el.shape.endpoints.empty()) je["endpoints"] = named_points_json(el.shape.endpoints);
        elements.push_back(std::move(je));
    }
    doc["elements"] = std::move(elements);
    return doc;
}

CanvasScene scene_from_annotation(const ordered_json& doc) {
    CanvasScene scene;
    const auto& jc = doc.at("canvas");
    scene.params.width = jc.at("width").get<int>();
    scene.params.height = jc.at("height").get<int>();
    scene.params.background = {jc.at("background").at(0).get<int>(),
                               jc.at("background").at(1).get<int>(),
                               jc.at("background").at(2).get<int>()};
    for (const auto& je : doc.at("elements")) {
        CanvasElement el;
        el.id = je.at("id").get<std::string>();
        el.kind_index = shape_kind_index(je.at("shape_type").get<std::string>());
        if (el.kind_index < 0)
            throw std::runtime_error("unknown shape_type: " + je.at("shape_type").get<std::string>());
        el.reference = je.at("reference").get<std::string>();
        el.shape.bbox = {je.at("bbox").at(0).get<double>(), je.at("bbox").at(1).get<double>(),
                         je.at("bbox").at(2).get<double>(), je.at("bbox").at(3).get<double>()};
        el.shape.center = parse_point(je.at("center_point"));
        for (const auto& [name, jp] : je.at("box_points").items())
            el.chrome.box_points.emplace_back(name, parse_point(jp));
        el.chrome.rotation_handle_center = parse_point(je.at("rotation_handle_center"));
        const auto& js = je.at("styling");
        el.style.fill = {js.at("fill").at(0).get<int>(), js.at("fill").at(1).get<int>(),
                         js.at("fill").at(2).get<int>()};
        el.style.outline = {js.at("outline").at(0).get<int>(), js.at("outline").at(1).get<int>(),
                            js.at("outline").at(2).get<int>()};
        el.style.stroke_width = js.at("stroke_width").get<int>();
        el.style.dashed = js.at("line_style").get<std::string>() == "dashed";
        if (je.contains("vertices"))
            for (const auto& [name, jp] : je.at("vertices").items())
                el.shape.vertices.emplace_back(name, parse_point(jp));
        if (je.contains("endpoints"))
            for (const auto& [name, jp] : je.at("endpoints").items())
                el.shape.endpoints.emplace_back(name, parse_point(jp));
        scene.elements.push_back(std::move(el));
    }
    return scene;
}

}  // namespace actsynth
