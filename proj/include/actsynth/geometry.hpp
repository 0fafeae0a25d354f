#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "actsynth/rng.hpp"

namespace actsynth {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

// Axis-aligned rectangle, x1 <= x2 and y1 <= y2.
struct Rect {
    double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;

    double width() const { return x2 - x1; }
    double height() const { return y2 - y1; }
    double area() const { return width() * height(); }
    Point center() const { return {(x1 + x2) / 2.0, (y1 + y2) / 2.0}; }
    bool valid() const { return x1 <= x2 && y1 <= y2; }
};

inline bool operator==(const Rect& a, const Rect& b) {
    return a.x1 == b.x1 && a.y1 == b.y1 && a.x2 == b.x2 && a.y2 == b.y2;
}

// Simple polygon as an ordered vertex list (>= 3 vertices after cleanup).
struct Polygon {
    std::vector<Point> vertices;
};

// Removes consecutive duplicate vertices (including a repeated closing
// vertex). Does not check area; degenerate polygons are rejected by loaders.
Polygon make_polygon(std::vector<Point> vertices);

double polygon_area(const Polygon& poly);  // absolute shoelace area

Polygon rect_as_polygon(const Rect& r);

struct Rgb {
    int r = 0, g = 0, b = 0;
};

inline bool operator==(const Rgb& a, const Rgb& b) { return a.r == b.r && a.g == b.g && a.b == b.b; }

// Boundary-inclusive point-in-rectangle test.
bool point_in_rect(const Point& p, const Rect& r);

// Even-odd rule; points exactly on an edge count as inside.
bool point_in_polygon(const Point& p, const Polygon& poly);

// intersection_area / min(area(a), area(b)); 0 when disjoint.
// Throws std::invalid_argument on zero-area input.
double overlap_ratio(const Rect& a, const Rect& b);

// Redmean-weighted Euclidean color distance:
//   rbar = (r1+r2)/2
//   sqrt((2 + rbar/256)*dR^2 + 4*dG^2 + (2 + (255-rbar)/256)*dB^2)
double redmean_distance(const Rgb& c1, const Rgb& c2);

// h in degrees [0,360), s and v in [0,1].
Rgb hsv_to_rgb(double h, double s, double v);

struct ColorConstraint {
    Rgb against;
    double min_dist = 0.0;
};

struct HsvRange {
    double s_min = 0.25, s_max = 1.0;
    double v_min = 0.25, v_max = 1.0;
};

struct ColorSample {
    Rgb color;
    bool flagged = false;  // true when no candidate satisfied all constraints
};

// Uniform hue, S/V in range, rejection-sampled against the redmean
// constraints. Gives up after 1,000 trials and returns the best candidate
// (largest worst-case margin) with the flag set.
ColorSample sample_color_hsv(Rng& rng, const std::vector<ColorConstraint>& constraints,
                             const HsvRange& range = {});

}  // namespace actsynth
