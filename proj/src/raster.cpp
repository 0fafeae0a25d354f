#include "actsynth/raster.hpp"

#include <algorithm>
#include <cmath>

namespace actsynth {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Image::Image(int w, int h, Rgb fill) : width(w), height(h), pixels(size_t(w) * h * 3) {
    for (size_t i = 0; i < pixels.size(); i += 3) {
        pixels[i] = uint8_t(fill.r);
        pixels[i + 1] = uint8_t(fill.g);
        pixels[i + 2] = uint8_t(fill.b);
    }
}

void fill_polygon(Image& img, const std::vector<std::vector<Point>>& rings, Rgb color) {
    double ymin = 1e300, ymax = -1e300;
    for (const auto& r : rings)
        for (const auto& p : r) {
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    if (ymin > ymax) return;
    int y0 = std::max(0, int(std::floor(ymin - 0.5)));
    int y1 = std::min(img.height - 1, int(std::ceil(ymax + 0.5)));
    std::vector<double> xs;
    for (int y = y0; y <= y1; ++y) {
        double yc = y + 0.5;
        xs.clear();
        for (const auto& ring : rings) {
            size_t n = ring.size();
            for (size_t i = 0, j = n - 1; i < n; j = i++) {
                const Point& a = ring[j];
                const Point& b = ring[i];
                if ((a.y <= yc) != (b.y <= yc)) {
                    double t = (yc - a.y) / (b.y - a.y);
                    xs.push_back(a.x + t * (b.x - a.x));
                }
            }
        }
        std::sort(xs.begin(), xs.end());
        for (size_t k = 0; k + 1 < xs.size(); k += 2) {
            int xa = int(std::ceil(xs[k] - 0.5));
            int xb = int(std::ceil(xs[k + 1] - 0.5)) - 1;
            xa = std::max(xa, 0);
            xb = std::min(xb, img.width - 1);
            for (int x = xa; x <= xb; ++x) img.set(x, y, color);
        }
    }
}

void fill_polygon(Image& img, const std::vector<Point>& ring, Rgb color) {
    fill_polygon(img, std::vector<std::vector<Point>>{ring}, color);
}

void fill_ellipse(Image& img, const Rect& box, Rgb color) {
    double cx = (box.x1 + box.x2) / 2.0, cy = (box.y1 + box.y2) / 2.0;
    double rx = box.width() / 2.0, ry = box.height() / 2.0;
    if (rx <= 0 || ry <= 0) return;
    int y0 = std::max(0, int(std::floor(box.y1 - 0.5)));
    int y1 = std::min(img.height - 1, int(std::ceil(box.y2 + 0.5)));
    for (int y = y0; y <= y1; ++y) {
        double dy = (y + 0.5 - cy) / ry;
        double t = 1.0 - dy * dy;
        if (t < 0) continue;
        double dx = rx * std::sqrt(t);
        int xa = std::max(0, int(std::ceil(cx - dx - 0.5)));
        int xb = std::min(img.width - 1, int(std::ceil(cx + dx - 0.5)) - 1);
        for (int x = xa; x <= xb; ++x) img.set(x, y, color);
    }
}

void fill_disc(Image& img, const Point& c, double radius, Rgb color) {
    fill_ellipse(img, Rect{c.x - radius, c.y - radius, c.x + radius, c.y + radius}, color);
}

namespace {

void draw_line_1px(Image& img, Point a, Point b, Rgb color) {
    double dx = b.x - a.x, dy = b.y - a.y;
    int steps = int(std::ceil(std::max(std::abs(dx), std::abs(dy)))) + 1;
    for (int i = 0; i <= steps; ++i) {
        double t = steps ? double(i) / steps : 0.0;
        img.set(int(std::floor(a.x + dx * t)), int(std::floor(a.y + dy * t)), color);
    }
}

void stroke_segment(Image& img, const Point& a, const Point& b, Rgb color, double width) {
    if (width < 1.5) {
        draw_line_1px(img, a, b, color);
        return;
    }
    double dx = b.x - a.x, dy = b.y - a.y;
    double len = std::hypot(dx, dy);
    double hw = width / 2.0;
    if (len < 1e-9) {
        fill_disc(img, a, hw, color);
        return;
    }
    double nx = -dy / len * hw, ny = dx / len * hw;
    fill_polygon(img,
                 std::vector<Point>{{a.x + nx, a.y + ny},
                                    {b.x + nx, b.y + ny},
                                    {b.x - nx, b.y - ny},
                                    {a.x - nx, a.y - ny}},
                 color);
    fill_disc(img, a, hw, color);
    fill_disc(img, b, hw, color);
}

}  // namespace

void stroke_polyline(Image& img, const std::vector<Point>& pts, Rgb color, double width,
                     bool closed) {
    if (pts.empty()) return;
    if (pts.size() == 1) {
        fill_disc(img, pts[0], std::max(0.5, width / 2.0), color);
        return;
    }
    for (size_t i = 0; i + 1 < pts.size(); ++i) stroke_segment(img, pts[i], pts[i + 1], color, width);
    if (closed) stroke_segment(img, pts.back(), pts.front(), color, width);
}

void stroke_polyline_dashed(Image& img, const std::vector<Point>& pts, Rgb color, double width,
                            bool closed, double dash_on, double dash_off) {
    if (pts.size() < 2) {
        stroke_polyline(img, pts, color, width, closed);
        return;
    }
    std::vector<Point> path = pts;
    if (closed) path.push_back(pts.front());
    double period = dash_on + dash_off;
    double pos = 0.0;  // arc length consumed
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        Point a = path[i], b = path[i + 1];
        double seg = std::hypot(b.x - a.x, b.y - a.y);
        if (seg < 1e-9) continue;
        double t = 0.0;
        while (t < seg) {
            double phase = std::fmod(pos + t, period);
            bool on = phase < dash_on;
            double run = on ? dash_on - phase : period - phase;
            double t2 = std::min(seg, t + run);
            if (on) {
                Point p{a.x + (b.x - a.x) * (t / seg), a.y + (b.y - a.y) * (t / seg)};
                Point q{a.x + (b.x - a.x) * (t2 / seg), a.y + (b.y - a.y) * (t2 / seg)};
                stroke_segment(img, p, q, color, width);
            }
            t = t2;
        }
        pos += seg;
    }
}

void draw_rect_outline(Image& img, const Rect& r, Rgb color) {
    int x1 = int(std::lround(r.x1)), y1 = int(std::lround(r.y1));
    int x2 = int(std::lround(r.x2)), y2 = int(std::lround(r.y2));
    for (int x = x1; x <= x2; ++x) {
        img.set(x, y1, color);
        img.set(x, y2, color);
    }
    for (int y = y1; y <= y2; ++y) {
        img.set(x1, y, color);
        img.set(x2, y, color);
    }
}

std::vector<Point> ellipse_outline(const Rect& box, int segments) {
    std::vector<Point> out;
    out.reserve(size_t(segments));
    double cx = (box.x1 + box.x2) / 2.0, cy = (box.y1 + box.y2) / 2.0;
    double rx = box.width() / 2.0, ry = box.height() / 2.0;
    for (int i = 0; i < segments; ++i) {
        double a = 2.0 * kPi * i / segments;
        out.push_back({cx + rx * std::cos(a), cy + ry * std::sin(a)});
    }
    return out;
}

std::vector<Point> arc_points(const Point& c, double rx, double ry, double a0_deg, double a1_deg,
                              int segments) {
    std::vector<Point> out;
    out.reserve(size_t(segments) + 1);
    for (int i = 0; i <= segments; ++i) {
        double a = (a0_deg + (a1_deg - a0_deg) * i / segments) * kPi / 180.0;
        out.push_back({c.x + rx * std::cos(a), c.y + ry * std::sin(a)});
    }
    return out;
}

}  // namespace actsynth
