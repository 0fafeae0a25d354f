#include "actsynth/image_annot.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "actsynth/png_io.hpp"

namespace actsynth {

using ordered_json = nlohmann::ordered_json;

size_t Mask::count() const {
    size_t n = 0;
    for (uint8_t v : data) n += v != 0;
    return n;
}

Mask load_mask_png(const std::filesystem::path& path) {
    GrayImage g = read_png_gray(path);
    Mask m;
    m.width = g.width;
    m.height = g.height;
    m.data.resize(g.pixels.size());
    for (size_t i = 0; i < g.pixels.size(); ++i) m.data[i] = g.pixels[i] > 127 ? 1 : 0;
    return m;
}

Mask mask_from_rle_json(const nlohmann::json& j) {
    Mask m;
    m.width = j.at("width").get<int>();
    m.height = j.at("height").get<int>();
    if (m.width <= 0 || m.height <= 0) throw std::invalid_argument("bad mask size");
    m.data.assign(size_t(m.width) * m.height, 0);
    size_t pos = 0;
    uint8_t value = 0;  // runs alternate starting with zeros
    for (const auto& jr : j.at("rle")) {
        size_t run = jr.get<size_t>();
        if (pos + run > m.data.size()) throw std::invalid_argument("rle overruns mask");
        if (value) std::fill_n(m.data.begin() + long(pos), run, uint8_t(1));
        pos += run;
        value ^= 1;
    }
    if (pos != m.data.size()) throw std::invalid_argument("rle does not cover mask");
    return m;
}

ordered_json mask_to_rle_json(const Mask& m) {
    ordered_json j;
    j["width"] = m.width;
    j["height"] = m.height;
    ordered_json rle = ordered_json::array();
    size_t i = 0, n = m.data.size();
    uint8_t value = 0;
    while (i < n) {
        size_t run = 0;
        while (i < n && (m.data[i] != 0) == (value != 0)) {
            ++run;
            ++i;
        }
        rle.push_back(run);
        value ^= 1;
    }
    j["rle"] = std::move(rle);
    return j;
}

namespace {

// clockwise 8-neighborhood starting east
constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

int dir_between(int from_x, int from_y, int to_x, int to_y) {
    for (int d = 0; d < 8; ++d)
        if (from_x + kDx[d] == to_x && from_y + kDy[d] == to_y) return d;
    return -1;
}

// Border following, outer-border case: starting at the component's
// topmost-leftmost pixel (whose west neighbor is guaranteed background),
// scan clockwise from west for the first neighbor, then repeatedly scan
// counterclockwise from just past the previous pixel. Terminates when the
// walk re-enters the start pixel from its natural predecessor.
ContourLoop follow_border(const Mask& mask, int sx, int sy) {
    ContourLoop loop;
    loop.push_back({sx, sy});

    int d1 = -1;
    for (int i = 0; i < 8; ++i) {
        int d = (4 + i) % 8;  // clockwise from west
        if (mask.at(sx + kDx[d], sy + kDy[d])) {
            d1 = d;
            break;
        }
    }
    if (d1 < 0) return loop;  // isolated pixel

    int i1x = sx + kDx[d1], i1y = sy + kDy[d1];
    int i2x = i1x, i2y = i1y;
    int i3x = sx, i3y = sy;
    size_t guard = mask.data.size() * 4 + 16;
    while (guard--) {
        int s = dir_between(i3x, i3y, i2x, i2y);
        int found = -1;
        for (int i = 1; i <= 8; ++i) {
            int d = (s - i + 16) % 8;  // counterclockwise, exclusive of s
            if (mask.at(i3x + kDx[d], i3y + kDy[d])) {
                found = d;
                break;
            }
        }
        int i4x = i3x + kDx[found], i4y = i3y + kDy[found];
        if (i4x == sx && i4y == sy && i3x == i1x && i3y == i1y) break;
        i2x = i3x;
        i2y = i3y;
        i3x = i4x;
        i3y = i4y;
        loop.push_back({i3x, i3y});
    }
    return loop;
}

}  // namespace

std::vector<ContourLoop> extract_outer_contours(const Mask& mask) {
    if (mask.count() == 0) throw std::invalid_argument("empty mask");

    // 8-connected component labels
    std::vector<int> label(mask.data.size(), 0);
    struct Component {
        int id;
        size_t size;
        int min_y, min_x;  // topmost-leftmost pixel
    };
    std::vector<Component> comps;
    int next = 1;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.at(x, y) || label[size_t(y) * mask.width + x]) continue;
            Component comp{next, 0, y, x};
            std::deque<std::pair<int, int>> queue{{x, y}};
            label[size_t(y) * mask.width + x] = next;
            while (!queue.empty()) {
                auto [cx, cy] = queue.front();
                queue.pop_front();
                comp.size++;
                for (int d = 0; d < 8; ++d) {
                    int nx = cx + kDx[d], ny = cy + kDy[d];
                    if (!mask.at(nx, ny)) continue;
                    int& l = label[size_t(ny) * mask.width + nx];
                    if (!l) {
                        l = next;
                        queue.push_back({nx, ny});
                    }
                }
            }
            comps.push_back(comp);
            next++;
        }
    }
    std::stable_sort(comps.begin(), comps.end(),
                     [](const Component& a, const Component& b) { return a.size > b.size; });

    std::vector<ContourLoop> out;
    out.reserve(comps.size());
    for (const Component& c : comps) out.push_back(follow_border(mask, c.min_x, c.min_y));
    return out;
}

BoundarySample sample_boundary(const ContourLoop& loop, int k) {
    if (loop.empty()) throw std::invalid_argument("empty loop");
    if (k < 3) throw std::invalid_argument("k must be >= 3");

    BoundarySample out;
    if (size_t(k) > loop.size()) {
        out.flagged = true;
        for (const auto& [x, y] : loop) out.poly.vertices.push_back({double(x), double(y)});
        return out;
    }

    // rotate so the loop starts at the topmost-then-leftmost point
    size_t start = 0;
    for (size_t i = 1; i < loop.size(); ++i) {
        if (loop[i].second < loop[start].second ||
            (loop[i].second == loop[start].second && loop[i].first < loop[start].first))
            start = i;
    }
    size_t n = loop.size();
    auto at = [&](size_t i) { return loop[(start + i) % n]; };

    // cumulative arc length over the closed loop
    std::vector<double> cum(n + 1, 0.0);
    for (size_t i = 0; i < n; ++i) {
        auto [x0, y0] = at(i);
        auto [x1, y1] = at((i + 1) % n);
        cum[i + 1] = cum[i] + std::hypot(double(x1 - x0), double(y1 - y0));
    }
    double total = cum[n];
    size_t cursor = 0;
    for (int j = 0; j < k; ++j) {
        double target = total * j / k;
        while (cursor + 1 < n && cum[cursor + 1] <= target) ++cursor;
        auto [x, y] = at(cursor);
        out.poly.vertices.push_back({double(x), double(y)});
        // ensure strictly advancing picks so points stay distinct
        ++cursor;
        if (cursor >= n) cursor = n - 1;
    }
    return out;
}

std::vector<Point> zigzag_trail(const std::vector<Point>& poly) {
    size_t n = poly.size();
    std::vector<Point> out;
    out.reserve(n);
    if (n == 0) return out;
    size_t head = 0, tail = n;  // next head index / one-past next tail index
    out.push_back(poly[head++]);
    if (n == 1) return out;
    out.push_back(poly[head++]);
    bool take_tail = true;
    while (out.size() < n) {
        if (take_tail)
            out.push_back(poly[--tail]);
        else
            out.push_back(poly[head++]);
        take_tail = !take_tail;
    }
    return out;
}

RegionAnnotation build_region(const Mask& mask, const std::string& caption, const std::string& id,
                              int k) {
    RegionAnnotation region;
    region.id = id;
    region.caption = caption;

    int x1 = mask.width, y1 = mask.height, x2 = -1, y2 = -1;
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            if (mask.at(x, y)) {
                x1 = std::min(x1, x);
                y1 = std::min(y1, y);
                x2 = std::max(x2, x);
                y2 = std::max(y2, y);
            }
    if (x2 < 0) throw std::invalid_argument("empty mask");
    region.bbox = {double(x1), double(y1), double(x2), double(y2)};
    region.center = region.bbox.center();

    std::vector<ContourLoop> contours = extract_outer_contours(mask);
    BoundarySample sample = sample_boundary(contours.front(), k);
    region.boundary = sample.poly;
    region.boundary_flagged = sample.flagged;
    return region;
}

ordered_json region_annotation_json(const RegionAnnotation& region) {
    ordered_json j;
    j["id"] = region.id;
    j["caption"] = region.caption;
    j["bbox"] = {region.bbox.x1, region.bbox.y1, region.bbox.x2, region.bbox.y2};
    j["center"] = {region.center.x, region.center.y};
    ordered_json boundary = ordered_json::array();
    for (const Point& p : region.boundary.vertices) boundary.push_back({p.x, p.y});
    j["boundary"] = std::move(boundary);
    if (region.boundary_flagged) j["boundary_flagged"] = true;
    return j;
}

RegionAnnotation region_annotation_from_json(const nlohmann::json& j) {
    RegionAnnotation r;
    r.id = j.at("id").is_string() ? j.at("id").get<std::string>()
                                  : std::to_string(j.at("id").get<int>());
    r.caption = j.at("caption").get<std::string>();
    r.bbox = {j.at("bbox").at(0).get<double>(), j.at("bbox").at(1).get<double>(),
              j.at("bbox").at(2).get<double>(), j.at("bbox").at(3).get<double>()};
    r.center = {j.at("center").at(0).get<double>(), j.at("center").at(1).get<double>()};
    for (const auto& jp : j.at("boundary"))
        r.boundary.vertices.push_back({jp.at(0).get<double>(), jp.at(1).get<double>()});
    r.boundary_flagged = j.value("boundary_flagged", false);
    return r;
}

}  // namespace actsynth
