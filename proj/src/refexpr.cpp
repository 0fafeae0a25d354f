#include "actsynth/refexpr.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "actsynth/canvas.hpp"

namespace actsynth {

namespace {

const std::vector<PaletteEntry>& builtin_entries() {
    static const std::vector<PaletteEntry> kEntries = {
        {"black", {0, 0, 0}},          {"white", {255, 255, 255}},
        {"red", {255, 0, 0}},          {"green", {0, 255, 0}},
        {"blue", {0, 0, 255}},         {"yellow", {255, 255, 0}},
        {"cyan", {0, 255, 255}},       {"magenta", {255, 0, 255}},
        {"gray", {128, 128, 128}},     {"dark gray", {64, 64, 64}},
        {"light gray", {211, 211, 211}}, {"silver", {192, 192, 192}},
        {"maroon", {128, 0, 0}},       {"dark red", {139, 0, 0}},
        {"crimson", {220, 20, 60}},    {"tomato", {255, 99, 71}},
        {"coral", {255, 127, 80}},     {"salmon", {250, 128, 114}},
        {"orange", {255, 165, 0}},     {"dark orange", {255, 140, 0}},
        {"gold", {255, 215, 0}},       {"khaki", {240, 230, 140}},
        {"tan", {210, 180, 140}},      {"beige", {245, 245, 220}},
        {"brown", {165, 42, 42}},      {"chocolate", {210, 105, 30}},
        {"saddle brown", {139, 69, 19}}, {"olive", {128, 128, 0}},
        {"dark green", {0, 100, 0}},   {"forest green", {34, 139, 34}},
        {"sea green", {46, 139, 87}},  {"spring green", {0, 255, 127}},
        {"teal", {0, 128, 128}},       {"turquoise", {64, 224, 208}},
        {"sky blue", {135, 206, 235}}, {"steel blue", {70, 130, 180}},
        {"royal blue", {65, 105, 225}}, {"navy", {0, 0, 128}},
        {"indigo", {75, 0, 130}},      {"purple", {128, 0, 128}},
        {"violet", {238, 130, 238}},   {"orchid", {218, 112, 214}},
        {"pink", {255, 192, 203}},     {"hot pink", {255, 105, 180}},
    };
    return kEntries;
}

}  // namespace

const Palette& Palette::builtin() {
    static const Palette p = [] {
        Palette pal;
        pal.entries_ = builtin_entries();
        return pal;
    }();
    return p;
}

Palette Palette::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open palette: " + path.string());
    nlohmann::json j;
    in >> j;
    Palette pal;
    for (const auto& je : j) {
        PaletteEntry e;
        e.name = je.at("name").get<std::string>();
        e.rgb = {je.at("rgb").at(0).get<int>(), je.at("rgb").at(1).get<int>(),
                 je.at("rgb").at(2).get<int>()};
        pal.entries_.push_back(std::move(e));
    }
    if (pal.entries_.size() != 44)
        throw std::runtime_error("palette must have 44 entries, got " +
                                 std::to_string(pal.entries_.size()));
    return pal;
}

std::string nearest_color_name(const Rgb& c, const Palette& palette) {
    const auto& entries = palette.entries();
    size_t best = 0;
    double best_d = redmean_distance(c, entries[0].rgb);
    for (size_t i = 1; i < entries.size(); ++i) {
        double d = redmean_distance(c, entries[i].rgb);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return entries[best].name;
}

namespace {

const char* k3Rows[] = {"upper", "center", "lower"};
const char* k3Cols[] = {"left", "center", "right"};
const char* k5Rows[] = {"top", "upper", "middle", "lower", "bottom"};
const char* k5Cols[] = {"far-left", "left", "center", "right", "far-right"};

int grid_cell(double v, double extent, int n) {
    int c = int(std::floor(v / extent * n));
    return std::clamp(c, 0, n - 1);
}

}  // namespace

std::string region_phrase(const Point& center, double canvas_w, double canvas_h,
                          GridGranularity grid) {
    int n = int(grid);
    int col = grid_cell(center.x, canvas_w, n);
    int row = grid_cell(center.y, canvas_h, n);
    std::string cell;
    if (n == 3) {
        if (row == 1 && col == 1)
            cell = "center";
        else
            cell = std::string(k3Rows[row]) + "-" + k3Cols[col];
    } else {
        cell = std::string(k5Rows[row]) + " " + k5Cols[col];
    }
    return cell + " area of the canvas";
}

std::string base_reference(int kind_index, const Rgb& fill, const Rgb& outline,
                           const Point& center, double canvas_w, double canvas_h,
                           const Palette& palette) {
    const ShapeKindInfo& info = shape_registry()[size_t(kind_index)];
    std::string region = region_phrase(center, canvas_w, canvas_h, GridGranularity::G3);
    if (info.line_like) {
        return nearest_color_name(outline, palette) + " " + std::string(info.display) +
               " in the " + region;
    }
    return nearest_color_name(fill, palette) + "-filled " + std::string(info.display) + " with " +
           nearest_color_name(outline, palette) + " outline in the " + region;
}

namespace {

// A reference is realized from parts so cascade stages can rewrite a single
// component without string surgery.
struct RefParts {
    std::string prefix;      // size descriptor or reading-order ordinal
    std::string dash_word;   // "solid" / "dashed" once stage 2 runs
    std::string fill_name;
    std::string outline_name;
    std::string shape_name;
    bool line_like = false;
    std::string region;      // current grid phrase
};

std::string realize(const RefParts& p) {
    std::string s = p.prefix;
    if (p.line_like) {
        if (!p.dash_word.empty()) s += p.dash_word + " ";
        s += p.outline_name + " " + p.shape_name + " in the " + p.region;
    } else {
        s += p.fill_name + "-filled " + p.shape_name + " with ";
        if (!p.dash_word.empty()) s += p.dash_word + " ";
        s += p.outline_name + " outline in the " + p.region;
    }
    return s;
}

std::string ordinal_prefix(size_t pos, size_t count) {
    if (pos == 0) return "the upper ";
    if (pos + 1 == count) return "the lower ";
    static const char* kOrdinals[] = {"the second ", "the third ", "the fourth ",
                                      "the fifth ",  "the sixth ", "the seventh "};
    return pos - 1 < 6 ? kOrdinals[pos - 1] : "the " + std::to_string(pos + 1) + "th ";
}

}  // namespace

void assign_references(CanvasScene& scene, const Palette& palette) {
    const double W = scene.params.width, H = scene.params.height;
    size_t n = scene.elements.size();
    std::vector<RefParts> parts(n);
    for (size_t i = 0; i < n; ++i) {
        const CanvasElement& el = scene.elements[i];
        const ShapeKindInfo& info = shape_registry()[size_t(el.kind_index)];
        RefParts& p = parts[i];
        p.line_like = info.line_like;
        p.shape_name = std::string(info.display);
        p.fill_name = nearest_color_name(el.style.fill, palette);
        p.outline_name = nearest_color_name(el.style.outline, palette);
        p.region = region_phrase(el.shape.center, W, H, GridGranularity::G3);
    }

    auto realize_all = [&](std::vector<std::string>& refs) {
        for (size_t i = 0; i < n; ++i) refs[i] = realize(parts[i]);
    };
    std::vector<std::string> refs(n);
    realize_all(refs);

    auto colliding_groups = [&]() {
        std::map<std::string, std::vector<size_t>> groups;
        for (size_t i = 0; i < n; ++i) groups[refs[i]].push_back(i);
        std::vector<std::vector<size_t>> out;
        for (auto& [ref, members] : groups)
            if (members.size() > 1) out.push_back(members);
        return out;
    };

    // Stage 1: relative-size descriptors, >=5% bbox-area difference required.
    for (const auto& group : colliding_groups()) {
        std::vector<std::pair<double, size_t>> by_area;
        for (size_t i : group) by_area.emplace_back(scene.elements[i].shape.bbox.area(), i);
        std::sort(by_area.begin(), by_area.end());
        double amin = by_area.front().first, amax = by_area.back().first;
        if (group.size() == 2) {
            if (amax > 0 && (amax - amin) / amax >= 0.05) {
                parts[by_area.back().second].prefix = "a larger ";
                parts[by_area.front().second].prefix = "a smaller ";
            }
        } else {
            double second_max = by_area[by_area.size() - 2].first;
            double second_min = by_area[1].first;
            if (amax > 0 && (amax - second_max) / amax >= 0.05)
                parts[by_area.back().second].prefix = "the largest ";
            if (second_min > 0 && (second_min - amin) / second_min >= 0.05)
                parts[by_area.front().second].prefix = "the smallest ";
        }
    }
    realize_all(refs);

    // Stage 2: solid/dashed outline qualifier.
    for (const auto& group : colliding_groups()) {
        for (size_t i : group)
            parts[i].dash_word = scene.elements[i].style.dashed ? "dashed" : "solid";
    }
    realize_all(refs);

    // Stage 3: finer 5x5 region grid.
    for (const auto& group : colliding_groups()) {
        for (size_t i : group)
            parts[i].region =
                region_phrase(scene.elements[i].shape.center, W, H, GridGranularity::G5);
    }
    realize_all(refs);

    // Stage 4: reading-order ordinal prefix by (center.y, center.x).
    for (const auto& group : colliding_groups()) {
        std::vector<size_t> order = group;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            const Point& pa = scene.elements[a].shape.center;
            const Point& pb = scene.elements[b].shape.center;
            return pa.y != pb.y ? pa.y < pb.y : pa.x < pb.x;
        });
        for (size_t pos = 0; pos < order.size(); ++pos)
            parts[order[pos]].prefix = ordinal_prefix(pos, order.size()) + parts[order[pos]].prefix;
    }
    realize_all(refs);

    if (!colliding_groups().empty())
        throw std::runtime_error("reference disambiguation failed to reach uniqueness");
    for (size_t i = 0; i < n; ++i) scene.elements[i].reference = refs[i];
}

}  // namespace actsynth
