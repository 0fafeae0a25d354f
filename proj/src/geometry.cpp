#include "actsynth/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace actsynth {

Polygon make_polygon(std::vector<Point> vertices) {
    std::vector<Point> out;
    out.reserve(vertices.size());
    for (const Point& p : vertices) {
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    if (out.size() < 3) throw std::invalid_argument("polygon needs at least 3 distinct vertices");
    return Polygon{std::move(out)};
}

double polygon_area(const Polygon& poly) {
    double s = 0.0;
    size_t n = poly.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return std::abs(s) / 2.0;
}

Polygon rect_as_polygon(const Rect& r) {
    return Polygon{{{r.x1, r.y1}, {r.x2, r.y1}, {r.x2, r.y2}, {r.x1, r.y2}}};
}

bool point_in_rect(const Point& p, const Rect& r) {
    return p.x >= r.x1 && p.x <= r.x2 && p.y >= r.y1 && p.y <= r.y2;
}

namespace {

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross != 0.0) return false;
    return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
           p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool point_in_polygon(const Point& p, const Polygon& poly) {
    const auto& v = poly.vertices;
    size_t n = v.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, v[i], v[(i + 1) % n])) return true;
    }
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        if ((v[i].y > p.y) != (v[j].y > p.y)) {
            double t = (p.y - v[i].y) / (v[j].y - v[i].y);
            double xint = v[i].x + t * (v[j].x - v[i].x);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

double overlap_ratio(const Rect& a, const Rect& b) {
    if (!a.valid() || !b.valid() || a.area() <= 0.0 || b.area() <= 0.0)
        throw std::invalid_argument("overlap_ratio requires rects with positive area");
    double ix = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
    double iy = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
    if (ix <= 0.0 || iy <= 0.0) return 0.0;
    return (ix * iy) / std::min(a.area(), b.area());
}

double redmean_distance(const Rgb& c1, const Rgb& c2) {
    double rbar = (c1.r + c2.r) / 2.0;
    double dr = c1.r - c2.r;
    double dg = c1.g - c2.g;
    double db = c1.b - c2.b;
    return std::sqrt((2.0 + rbar / 256.0) * dr * dr + 4.0 * dg * dg +
                     (2.0 + (255.0 - rbar) / 256.0) * db * db);
}

Rgb hsv_to_rgb(double h, double s, double v) {
    double c = v * s;
    double hp = h / 60.0;
    double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1)      { r = c; g = x; }
    else if (hp < 2) { r = x; g = c; }
    else if (hp < 3) { g = c; b = x; }
    else if (hp < 4) { g = x; b = c; }
    else if (hp < 5) { r = x; b = c; }
    else             { r = c; b = x; }
    double m = v - c;
    auto ch = [&](double t) { return int(std::lround((t + m) * 255.0)); };
    return Rgb{ch(r), ch(g), ch(b)};
}

ColorSample sample_color_hsv(Rng& rng, const std::vector<ColorConstraint>& constraints,
                             const HsvRange& range) {
    Rgb best{};
    double best_margin = -1e300;
    for (int trial = 0; trial < 1000; ++trial) {
        double h = rng.uniform(0.0, 360.0);
        double s = rng.uniform(range.s_min, range.s_max);
        double v = rng.uniform(range.v_min, range.v_max);
        Rgb c = hsv_to_rgb(h, s, v);
        double margin = 1e300;
        for (const auto& k : constraints) {
            margin = std::min(margin, redmean_distance(c, k.against) - k.min_dist);
        }
        if (constraints.empty() || margin >= 0.0) return {c, false};
        if (margin > best_margin) {
            best_margin = margin;
            best = c;
        }
    }
    return {best, true};
}

}  // namespace actsynth
