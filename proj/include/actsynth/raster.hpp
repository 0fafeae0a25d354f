#pragma once

#include <cstdint>
#include <vector>

#include "actsynth/geometry.hpp"

namespace actsynth {

// 8-bit RGB raster, row-major. Drawing is unantialiased and purely
// arithmetic so output bytes are a function of inputs only.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;  // 3 bytes per pixel

    Image() = default;
    Image(int w, int h, Rgb fill = {255, 255, 255});

    void set(int x, int y, Rgb c) {
        if (x < 0 || y < 0 || x >= width || y >= height) return;
        size_t i = (size_t(y) * width + x) * 3;
        pixels[i] = uint8_t(c.r);
        pixels[i + 1] = uint8_t(c.g);
        pixels[i + 2] = uint8_t(c.b);
    }
    Rgb get(int x, int y) const {
        size_t i = (size_t(y) * width + x) * 3;
        return {pixels[i], pixels[i + 1], pixels[i + 2]};
    }
};

// Even-odd scanline fill over one or more rings (pixel-center sampling).
void fill_polygon(Image& img, const std::vector<std::vector<Point>>& rings, Rgb color);
void fill_polygon(Image& img, const std::vector<Point>& ring, Rgb color);

void fill_ellipse(Image& img, const Rect& box, Rgb color);
void fill_disc(Image& img, const Point& c, double radius, Rgb color);

// Stroked path with round joins/caps. width < 1.5 degrades to a 1px line.
void stroke_polyline(Image& img, const std::vector<Point>& pts, Rgb color, double width,
                     bool closed = false);

// Dash pattern is on/off run lengths in pixels along the path arc length.
void stroke_polyline_dashed(Image& img, const std::vector<Point>& pts, Rgb color, double width,
                            bool closed, double dash_on = 10.0, double dash_off = 6.0);

// 1px axis-aligned rectangle outline.
void draw_rect_outline(Image& img, const Rect& r, Rgb color);

// Sampled outlines for curve primitives.
std::vector<Point> ellipse_outline(const Rect& box, int segments);
std::vector<Point> arc_points(const Point& c, double rx, double ry, double a0_deg,
                              double a1_deg, int segments);

}  // namespace actsynth
