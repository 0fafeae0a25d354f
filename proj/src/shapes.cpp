#include "actsynth/shapes.hpp"

#include <cmath>
#include <stdexcept>

namespace actsynth {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const std::array<ShapeKindInfo, kShapeKindCount>& shape_registry() {
    using C = ShapeCategory;
    static const std::array<ShapeKindInfo, kShapeKindCount> kRegistry = {{
        // rectangles
        {"rectangle", "rectangle", C::Rectangles, false, false, false, true},
        {"rounded_rectangle", "rounded rectangle", C::Rectangles},
        {"square", "square", C::Rectangles, true},
        {"rounded_square", "rounded square", C::Rectangles, true},
        {"cross", "cross", C::Rectangles},
        {"plus", "plus sign", C::Rectangles},
        // ellipses
        {"ellipse", "ellipse", C::Ellipses},
        {"circle", "circle", C::Ellipses, true, false, false, true},
        // triangles
        {"triangle_scalene", "scalene triangle", C::Triangles, false, false, false, true},
        {"triangle_right", "right triangle", C::Triangles, false, false, false, true},
        {"triangle_isosceles", "isosceles triangle", C::Triangles, false, false, false, true},
        {"triangle_equilateral", "equilateral triangle", C::Triangles, false, false, false, true},
        {"triangle_obtuse", "obtuse triangle", C::Triangles, false, false, false, true},
        // quadrilaterals
        {"diamond", "diamond", C::Quadrilaterals, false, false, false, true},
        {"parallelogram", "parallelogram", C::Quadrilaterals},
        {"trapezoid", "trapezoid", C::Quadrilaterals},
        {"right_trapezoid", "right trapezoid", C::Quadrilaterals},
        {"kite", "kite", C::Quadrilaterals},
        // regular polygons
        {"pentagon", "pentagon", C::Polygons},
        {"hexagon", "hexagon", C::Polygons},
        {"heptagon", "heptagon", C::Polygons},
        {"octagon", "octagon", C::Polygons},
        {"nonagon", "nonagon", C::Polygons},
        {"decagon", "decagon", C::Polygons},
        // stars
        {"star4", "4-point star", C::Stars},
        {"star5", "5-point star", C::Stars, false, false, false, true},
        {"star6", "6-point star", C::Stars},
        {"star8", "8-point star", C::Stars},
        {"star10", "10-point star", C::Stars},
        {"star12", "12-point star", C::Stars},
        // arrows
        {"arrow_right", "right arrow", C::Arrows, false, false, false, true},
        {"arrow_left", "left arrow", C::Arrows, false, false, false, true},
        {"arrow_up", "up arrow", C::Arrows, false, false, false, true},
        {"arrow_down", "down arrow", C::Arrows, false, false, false, true},
        {"arrow_double", "double-headed arrow", C::Arrows},
        {"chevron", "chevron", C::Arrows},
        {"arrow_notched", "notched arrow", C::Arrows},
        {"arrow_bent", "bent arrow", C::Arrows},
        {"arrow_uturn", "U-turn arrow", C::Arrows},
        {"arrow_circular", "circular arrow", C::Arrows},
        // lines and connectors
        {"line_straight", "straight line", C::Lines, false, true},
        {"line_arrow", "single-arrow line", C::Lines, false, true},
        {"line_double_arrow", "double-arrow line", C::Lines, false, true},
        {"line_curved", "curved line", C::Lines, false, true},
        {"elbow_connector", "elbow connector", C::Lines, false, true},
        // callouts and decorations
        {"callout_rect", "rectangular callout", C::Callouts},
        {"callout_rounded", "rounded callout", C::Callouts},
        {"callout_cloud", "cloud callout", C::Callouts},
        {"ribbon", "ribbon", C::Callouts},
        {"banner", "banner", C::Callouts},
        // special / decorative
        {"heart", "heart", C::Special, false, false, true},
        {"cloud", "cloud", C::Special, false, false, true},
        {"crescent_moon", "crescent moon", C::Special, false, false, true},
        {"sun", "sun", C::Special},
        {"frame", "frame", C::Special},
        {"donut", "donut", C::Special, true},
        {"ring", "ring", C::Special, true},
        {"lightning_bolt", "lightning bolt", C::Special},
        {"wave", "wave", C::Special, false, false, true},
        {"arc", "arc", C::Special, false, true},
        {"pie", "pie", C::Special},
        {"sector", "sector", C::Special},
        {"drop", "drop", C::Special},
        {"explosion", "explosion", C::Special},
        {"semicircle", "semicircle", C::Special},
        {"quarter_circle", "quarter circle", C::Special},
        {"teardrop", "teardrop", C::Special},
        {"shield", "shield", C::Special},
        {"l_shape", "L-shape", C::Special},
        {"t_shape", "T-shape", C::Special},
        // text boxes
        {"text_box", "text box", C::TextBoxes},
        {"text_box_rounded", "rounded text box", C::TextBoxes},
        {"text_box_borderless", "borderless text box", C::TextBoxes},
    }};
    return kRegistry;
}

int shape_kind_index(std::string_view symbolic) {
    const auto& reg = shape_registry();
    for (int i = 0; i < kShapeKindCount; ++i)
        if (reg[i].symbolic == symbolic) return i;
    return -1;
}

namespace {

// Full geometric build of one shape instance.
struct ShapeBuild {
    std::vector<std::vector<Point>> fill_rings;    // even-odd
    std::vector<std::vector<Point>> stroke_paths;  // outline paths
    std::vector<bool> stroke_closed;
    std::vector<std::pair<std::string, Point>> vertices;
    std::vector<std::pair<std::string, Point>> endpoints;
    bool fill_with_outline_color = false;  // arrowheads on line-like shapes
};

void add_ring(ShapeBuild& b, std::vector<Point> ring, bool also_stroke = true) {
    if (also_stroke) {
        b.stroke_paths.push_back(ring);
        b.stroke_closed.push_back(true);
    }
    b.fill_rings.push_back(std::move(ring));
}

void add_open_path(ShapeBuild& b, std::vector<Point> path) {
    b.stroke_paths.push_back(std::move(path));
    b.stroke_closed.push_back(false);
}

void name_vertices(ShapeBuild& b, const std::vector<Point>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
        b.vertices.emplace_back("v" + std::to_string(i + 1), pts[i]);
}

std::vector<Point> rounded_rect_ring(const Rect& r, double rad, int seg = 6) {
    rad = std::min({rad, r.width() / 2.0, r.height() / 2.0});
    std::vector<Point> out;
    auto corner = [&](Point c, double a0, double a1) {
        for (int i = 0; i <= seg; ++i) {
            double a = (a0 + (a1 - a0) * i / seg) * kPi / 180.0;
            out.push_back({c.x + rad * std::cos(a), c.y + rad * std::sin(a)});
        }
    };
    corner({r.x1 + rad, r.y1 + rad}, 180, 270);
    corner({r.x2 - rad, r.y1 + rad}, 270, 360);
    corner({r.x2 - rad, r.y2 - rad}, 0, 90);
    corner({r.x1 + rad, r.y2 - rad}, 90, 180);
    return out;
}

std::vector<Point> regular_ngon(const Rect& box, int n, double start_deg = -90.0) {
    std::vector<Point> out;
    Point c = box.center();
    double rx = box.width() / 2.0, ry = box.height() / 2.0;
    for (int i = 0; i < n; ++i) {
        double a = (start_deg + 360.0 * i / n) * kPi / 180.0;
        out.push_back({c.x + rx * std::cos(a), c.y + ry * std::sin(a)});
    }
    return out;
}

std::vector<Point> star_ring(const Rect& box, int points, double inner_ratio) {
    std::vector<Point> out;
    Point c = box.center();
    double rx = box.width() / 2.0, ry = box.height() / 2.0;
    for (int i = 0; i < points * 2; ++i) {
        double a = (-90.0 + 180.0 * i / points) * kPi / 180.0;
        double f = (i % 2 == 0) ? 1.0 : inner_ratio;
        out.push_back({c.x + rx * f * std::cos(a), c.y + ry * f * std::sin(a)});
    }
    return out;
}

std::vector<Point> quad_bezier(Point a, Point ctrl, Point b, int seg) {
    std::vector<Point> out;
    for (int i = 0; i <= seg; ++i) {
        double t = double(i) / seg;
        double u = 1.0 - t;
        out.push_back({u * u * a.x + 2 * u * t * ctrl.x + t * t * b.x,
                       u * u * a.y + 2 * u * t * ctrl.y + t * t * b.y});
    }
    return out;
}

// Arrowhead as a filled triangle; tip at `tip`, pointing along (dx,dy).
std::vector<Point> arrowhead(Point tip, double dx, double dy, double size) {
    double len = std::hypot(dx, dy);
    if (len < 1e-9) len = 1.0;
    double ux = dx / len, uy = dy / len;
    double px = -uy, py = ux;
    return {tip,
            {tip.x - ux * size + px * size * 0.5, tip.y - uy * size + py * size * 0.5},
            {tip.x - ux * size - px * size * 0.5, tip.y - uy * size - py * size * 0.5}};
}

// Right-pointing block arrow; mirrored/rotated for the other directions.
std::vector<Point> block_arrow_right(const Rect& b) {
    double cy = (b.y1 + b.y2) / 2.0;
    double shaft = b.height() * 0.25;
    double neck = b.x1 + b.width() * 0.60;
    return {{b.x1, cy - shaft}, {neck, cy - shaft}, {neck, b.y1}, {b.x2, cy},
            {neck, b.y2},       {neck, cy + shaft}, {b.x1, cy + shaft}};
}

std::vector<Point> map_points(const std::vector<Point>& pts, auto f) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back(f(p));
    return out;
}

// Star-shaped silhouette of a union of circles, sampled around `center`.
std::vector<Point> circle_union_silhouette(Point center,
                                           const std::vector<std::pair<Point, double>>& circles,
                                           int samples) {
    std::vector<Point> out;
    out.reserve(size_t(samples));
    for (int i = 0; i < samples; ++i) {
        double a = 2.0 * kPi * i / samples;
        double ux = std::cos(a), uy = std::sin(a);
        double best = 0.0;
        for (const auto& [c, r] : circles) {
            double ox = c.x - center.x, oy = c.y - center.y;
            double proj = ox * ux + oy * uy;
            double perp2 = ox * ox + oy * oy - proj * proj;
            double disc = r * r - perp2;
            if (disc < 0) continue;
            best = std::max(best, proj + std::sqrt(disc));
        }
        out.push_back({center.x + ux * best, center.y + uy * best});
    }
    return out;
}

std::vector<std::pair<Point, double>> cloud_circles(const Rect& b) {
    Point c = b.center();
    double rx = b.width() / 2.0, ry = b.height() / 2.0;
    std::vector<std::pair<Point, double>> circles;
    // lobes around an inner ellipse ring
    static const double kLobes[][3] = {{-0.55, 0.10, 0.42}, {-0.20, -0.35, 0.50},
                                       {0.25, -0.30, 0.46}, {0.60, 0.05, 0.40},
                                       {0.25, 0.35, 0.45},  {-0.25, 0.38, 0.44}};
    for (const auto& l : kLobes) {
        circles.push_back({{c.x + l[0] * rx, c.y + l[1] * ry}, l[2] * std::min(rx, ry)});
    }
    return circles;
}

ShapeBuild build_shape(int kind_index, const Rect& b) {
    if (kind_index < 0 || kind_index >= kShapeKindCount)
        throw std::invalid_argument("unknown shape kind index " + std::to_string(kind_index));
    const ShapeKindInfo& info = shape_registry()[kind_index];
    const std::string_view k = info.symbolic;
    ShapeBuild out;
    Point c = b.center();
    double w = b.width(), h = b.height();
    double m = std::min(w, h);

    auto simple_polygon = [&](std::vector<Point> pts) {
        name_vertices(out, pts);
        add_ring(out, std::move(pts));
    };

    if (k == "rectangle" || k == "square" || k == "text_box" || k == "text_box_borderless") {
        std::vector<Point> pts{{b.x1, b.y1}, {b.x2, b.y1}, {b.x2, b.y2}, {b.x1, b.y2}};
        if (k == "rectangle" || k == "square") name_vertices(out, pts);
        bool stroked = k != "text_box_borderless";
        add_ring(out, std::move(pts), stroked);
    } else if (k == "rounded_rectangle" || k == "rounded_square" || k == "text_box_rounded") {
        add_ring(out, rounded_rect_ring(b, m * 0.2));
    } else if (k == "plus" || k == "cross") {
        double t = m * 0.3 / 2.0;  // half arm thickness
        std::vector<Point> pts{{c.x - t, b.y1}, {c.x + t, b.y1}, {c.x + t, c.y - t},
                               {b.x2, c.y - t}, {b.x2, c.y + t}, {c.x + t, c.y + t},
                               {c.x + t, b.y2}, {c.x - t, b.y2}, {c.x - t, c.y + t},
                               {b.x1, c.y + t}, {b.x1, c.y - t}, {c.x - t, c.y - t}};
        if (k == "cross") {
            // X orientation: rotate the plus 45 degrees about the center,
            // then rescale into the box
            double s = 1.0 / std::sqrt(2.0);
            pts = map_points(pts, [&](Point p) {
                double dx = p.x - c.x, dy = p.y - c.y;
                return Point{c.x + (dx - dy) * s, c.y + (dx + dy) * s};
            });
            double ex = 0, ey = 0;
            for (const Point& p : pts) {
                ex = std::max(ex, std::abs(p.x - c.x));
                ey = std::max(ey, std::abs(p.y - c.y));
            }
            pts = map_points(pts, [&](Point p) {
                return Point{c.x + (p.x - c.x) * (w / 2.0) / ex,
                             c.y + (p.y - c.y) * (h / 2.0) / ey};
            });
        }
        simple_polygon(std::move(pts));
    } else if (k == "ellipse" || k == "circle") {
        add_ring(out, ellipse_outline(b, 64));
    } else if (k == "triangle_scalene") {
        simple_polygon({{b.x1, b.y2}, {b.x1 + 0.38 * w, b.y1}, {b.x2, b.y1 + 0.25 * h}});
    } else if (k == "triangle_right") {
        simple_polygon({{b.x1, b.y1}, {b.x2, b.y2}, {b.x1, b.y2}});
    } else if (k == "triangle_isosceles") {
        simple_polygon({{c.x, b.y1}, {b.x2, b.y2}, {b.x1, b.y2}});
    } else if (k == "triangle_equilateral") {
        double side = std::min(w, h * 2.0 / std::sqrt(3.0));
        double th = side * std::sqrt(3.0) / 2.0;
        simple_polygon({{c.x, c.y - th / 2.0},
                        {c.x + side / 2.0, c.y + th / 2.0},
                        {c.x - side / 2.0, c.y + th / 2.0}});
    } else if (k == "triangle_obtuse") {
        simple_polygon({{b.x1, b.y2}, {b.x1 + 0.55 * w, b.y2}, {b.x2, b.y1}});
    } else if (k == "diamond") {
        simple_polygon({{c.x, b.y1}, {b.x2, c.y}, {c.x, b.y2}, {b.x1, c.y}});
    } else if (k == "parallelogram") {
        simple_polygon({{b.x1 + 0.25 * w, b.y1}, {b.x2, b.y1}, {b.x2 - 0.25 * w, b.y2}, {b.x1, b.y2}});
    } else if (k == "trapezoid") {
        simple_polygon({{b.x1 + 0.22 * w, b.y1}, {b.x2 - 0.22 * w, b.y1}, {b.x2, b.y2}, {b.x1, b.y2}});
    } else if (k == "right_trapezoid") {
        simple_polygon({{b.x1, b.y1}, {b.x2 - 0.35 * w, b.y1}, {b.x2, b.y2}, {b.x1, b.y2}});
    } else if (k == "kite") {
        simple_polygon({{c.x, b.y1}, {b.x2, b.y1 + 0.38 * h}, {c.x, b.y2}, {b.x1, b.y1 + 0.38 * h}});
    } else if (k == "pentagon" || k == "hexagon" || k == "heptagon" || k == "octagon" ||
               k == "nonagon" || k == "decagon") {
        int n = 5 + int(k == "hexagon") + 2 * int(k == "heptagon") + 3 * int(k == "octagon") +
                4 * int(k == "nonagon") + 5 * int(k == "decagon");
        simple_polygon(regular_ngon(b, n));
    } else if (k.substr(0, 4) == "star") {
        int n = std::stoi(std::string(k.substr(4)));
        double inner = n <= 4 ? 0.38 : n <= 5 ? 0.45 : n <= 6 ? 0.55 : n <= 8 ? 0.62 : 0.70;
        std::vector<Point> ring = star_ring(b, n, inner);
        for (int i = 0; i < n; ++i)
            out.vertices.emplace_back("v" + std::to_string(i + 1), ring[size_t(i) * 2]);
        add_ring(out, std::move(ring));
    } else if (k == "arrow_right" || k == "arrow_left" || k == "arrow_up" || k == "arrow_down") {
        Rect base = (k == "arrow_up" || k == "arrow_down") ? Rect{b.y1, b.x1, b.y2, b.x2} : b;
        std::vector<Point> pts = block_arrow_right(base);
        if (k == "arrow_left")
            pts = map_points(pts, [&](Point p) { return Point{b.x1 + b.x2 - p.x, p.y}; });
        else if (k == "arrow_up")
            pts = map_points(pts, [&](Point p) { return Point{p.y, b.y1 + b.y2 - p.x}; });
        else if (k == "arrow_down")
            pts = map_points(pts, [&](Point p) { return Point{p.y, p.x}; });
        name_vertices(out, pts);
        out.vertices[3].first = "tip";  // block_arrow_right index 3 is the point
        add_ring(out, std::move(pts));
    } else if (k == "arrow_double") {
        double cy = c.y, sh = h * 0.25, neck = w * 0.30;
        std::vector<Point> pts{{b.x1, cy},           {b.x1 + neck, b.y1}, {b.x1 + neck, cy - sh},
                               {b.x2 - neck, cy - sh}, {b.x2 - neck, b.y1}, {b.x2, cy},
                               {b.x2 - neck, b.y2},  {b.x2 - neck, cy + sh}, {b.x1 + neck, cy + sh},
                               {b.x1 + neck, b.y2}};
        name_vertices(out, pts);
        out.vertices[0].first = "tip_left";
        out.vertices[5].first = "tip_right";
        add_ring(out, std::move(pts));
    } else if (k == "chevron") {
        double d = w * 0.35;
        std::vector<Point> pts{{b.x1, b.y1}, {b.x2 - d, b.y1}, {b.x2, c.y},
                               {b.x2 - d, b.y2}, {b.x1, b.y2}, {b.x1 + d, c.y}};
        name_vertices(out, pts);
        out.vertices[2].first = "tip";
        add_ring(out, std::move(pts));
    } else if (k == "arrow_notched") {
        std::vector<Point> pts = block_arrow_right(b);
        pts.push_back({b.x1 + 0.2 * w, c.y});  // tail notch
        name_vertices(out, pts);
        out.vertices[3].first = "tip";
        add_ring(out, std::move(pts));
    } else if (k == "arrow_bent") {
        double t = 0.25 * m;
        double xh = b.x2 - t;  // vertical shaft center
        std::vector<Point> pts{{b.x1, b.y2},          {b.x1, b.y2 - t},
                               {xh - t / 2, b.y2 - t}, {xh - t / 2, b.y1 + 1.5 * t},
                               {xh - t, b.y1 + 1.5 * t}, {xh, b.y1},
                               {xh + t, b.y1 + 1.5 * t}, {xh + t / 2, b.y1 + 1.5 * t},
                               {xh + t / 2, b.y2}};
        name_vertices(out, pts);
        out.vertices[5].first = "tip";
        add_ring(out, std::move(pts));
    } else if (k == "arrow_uturn") {
        double t = 0.22 * m;
        double ro = std::min(w / 2.0, h * 0.45);
        double yc = b.y1 + ro;
        Point tip{c.x + ro - t / 2.0, b.y2};
        std::vector<Point> pts;
        pts.push_back({c.x - ro, b.y2});
        for (const Point& p : arc_points({c.x, yc}, ro, ro, 180, 360, 12)) pts.push_back(p);
        pts.push_back({c.x + ro, b.y2 - 1.5 * t});
        pts.push_back({c.x + ro + t / 2.0, b.y2 - 1.5 * t});
        pts.push_back(tip);
        pts.push_back({c.x + ro - 1.5 * t, b.y2 - 1.5 * t});
        pts.push_back({c.x + ro - t, b.y2 - 1.5 * t});
        for (const Point& p : arc_points({c.x, yc}, ro - t, ro - t, 360, 180, 12)) pts.push_back(p);
        pts.push_back({c.x - ro + t, b.y2});
        out.vertices.emplace_back("tip", tip);
        add_ring(out, std::move(pts));
    } else if (k == "arrow_circular") {
        double rox = w / 2.0, roy = h / 2.0;
        double rix = rox * 0.62, riy = roy * 0.62;
        double head = 0.19 * m;
        std::vector<Point> pts;
        for (const Point& p : arc_points(c, rox, roy, -90, 170, 24)) pts.push_back(p);
        // head at the 170-degree end, pointing along the tangent
        double a = 170 * kPi / 180.0;
        Point mid{c.x + (rox + rix) / 2.0 * std::cos(a), c.y + (roy + riy) / 2.0 * std::sin(a)};
        Point tip{mid.x - std::sin(a) * head, mid.y + std::cos(a) * head};
        pts.push_back({c.x + (rox + head * 0.4) * std::cos(a), c.y + (roy + head * 0.4) * std::sin(a)});
        pts.push_back(tip);
        pts.push_back({c.x + (rix - head * 0.4) * std::cos(a), c.y + (riy - head * 0.4) * std::sin(a)});
        for (const Point& p : arc_points(c, rix, riy, 170, -90, 24)) pts.push_back(p);
        out.vertices.emplace_back("tip", tip);
        add_ring(out, std::move(pts));
    } else if (k == "line_straight" || k == "line_arrow" || k == "line_double_arrow") {
        Point a{b.x1, b.y1}, z{b.x2, b.y2};
        add_open_path(out, {a, z});
        if (k != "line_straight") {
            out.fill_rings.push_back(arrowhead(z, z.x - a.x, z.y - a.y, 0.12 * m + 6.0));
            out.fill_with_outline_color = true;
        }
        if (k == "line_double_arrow")
            out.fill_rings.push_back(arrowhead(a, a.x - z.x, a.y - z.y, 0.12 * m + 6.0));
        out.endpoints.emplace_back("start", a);
        out.endpoints.emplace_back("end", z);
    } else if (k == "line_curved") {
        Point a{b.x1, b.y2}, z{b.x2, b.y2};
        add_open_path(out, quad_bezier(a, {c.x, b.y1 - (c.y - b.y1)}, z, 24));
        out.endpoints.emplace_back("start", a);
        out.endpoints.emplace_back("end", z);
    } else if (k == "elbow_connector") {
        Point a{b.x1, b.y1}, z{b.x2, b.y2};
        add_open_path(out, {a, {c.x, b.y1}, {c.x, b.y2}, z});
        out.endpoints.emplace_back("start", a);
        out.endpoints.emplace_back("end", z);
    } else if (k == "callout_rect") {
        double yb = b.y1 + 0.75 * h;
        simple_polygon({{b.x1, b.y1}, {b.x2, b.y1}, {b.x2, yb}, {b.x1 + 0.35 * w, yb},
                        {b.x1 + 0.10 * w, b.y2}, {b.x1 + 0.20 * w, yb}, {b.x1, yb}});
    } else if (k == "callout_rounded") {
        double yb = b.y1 + 0.75 * h;
        double rad = std::min(m * 0.15, 0.375 * h);
        Rect body{b.x1, b.y1, b.x2, yb};
        std::vector<Point> ring = rounded_rect_ring(body, rad);
        std::vector<Point> spliced;
        for (const Point& p : ring) {
            spliced.push_back(p);
            // splice the tail into the bottom edge, which runs right-to-left
            if (std::abs(p.y - yb) < 1e-9 && std::abs(p.x - (b.x2 - rad)) < 1e-9) {
                spliced.push_back({b.x1 + 0.35 * w, yb});
                spliced.push_back({b.x1 + 0.10 * w, b.y2});
                spliced.push_back({b.x1 + 0.20 * w, yb});
            }
        }
        add_ring(out, std::move(spliced));
    } else if (k == "callout_cloud") {
        Rect body{b.x1, b.y1, b.x2, b.y1 + 0.72 * h};
        add_ring(out, circle_union_silhouette(body.center(), cloud_circles(body), 72));
        double r1 = 0.05 * m, r2 = 0.035 * m;
        add_ring(out, ellipse_outline({b.x1 + 0.28 * w - r1, b.y1 + 0.80 * h - r1,
                                       b.x1 + 0.28 * w + r1, b.y1 + 0.80 * h + r1}, 20));
        add_ring(out, ellipse_outline({b.x1 + 0.18 * w - r2, b.y1 + 0.92 * h - r2,
                                       b.x1 + 0.18 * w + r2, b.y1 + 0.92 * h + r2}, 16));
    } else if (k == "ribbon") {
        simple_polygon({{b.x1, b.y1 + 0.2 * h}, {b.x2, b.y1 + 0.2 * h}, {b.x2 - 0.12 * w, c.y},
                        {b.x2, b.y2 - 0.2 * h}, {b.x1, b.y2 - 0.2 * h}, {b.x1 + 0.12 * w, c.y}});
    } else if (k == "banner") {
        simple_polygon({{b.x1, b.y1}, {b.x2, b.y1}, {b.x2, b.y2}, {c.x, b.y2 - 0.25 * h}, {b.x1, b.y2}});
    } else if (k == "heart") {
        std::vector<Point> pts;
        double ymin = 1e300, ymax = -1e300, xmax = 0;
        std::vector<Point> raw;
        for (int i = 0; i < 64; ++i) {
            double t = 2.0 * kPi * i / 64;
            double x = 16.0 * std::pow(std::sin(t), 3.0);
            double y = 13.0 * std::cos(t) - 5.0 * std::cos(2 * t) - 2.0 * std::cos(3 * t) -
                       std::cos(4 * t);
            raw.push_back({x, y});
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
            xmax = std::max(xmax, std::abs(x));
        }
        Point tip;
        for (const Point& p : raw) {
            Point q{c.x + p.x / xmax * (w / 2.0),
                    c.y - (p.y - (ymin + ymax) / 2.0) / ((ymax - ymin) / 2.0) * (h / 2.0)};
            pts.push_back(q);
            if (q.y >= tip.y) tip = q;
        }
        out.vertices.emplace_back("bottom_tip", tip);
        add_ring(out, std::move(pts));
    } else if (k == "cloud") {
        add_ring(out, circle_union_silhouette(c, cloud_circles(b), 72));
    } else if (k == "crescent_moon") {
        double R = m / 2.0;
        Point oc{c.x - (w / 2.0 - R), c.y};
        Point ic{oc.x + 0.45 * R, c.y};
        double ri = 0.85 * R;
        // outer/inner circle intersection
        double d = ic.x - oc.x;
        double a = (d * d + R * R - ri * ri) / (2 * d);
        double hh = std::sqrt(std::max(0.0, R * R - a * a));
        double a_out = std::atan2(hh, a) * 180.0 / kPi;       // outer intersection angle
        double a_in = std::atan2(hh, a - d) * 180.0 / kPi;    // inner circle angle
        std::vector<Point> pts;
        for (const Point& p : arc_points(oc, R, R, a_out, 360.0 - a_out, 40)) pts.push_back(p);
        for (const Point& p : arc_points(ic, ri, ri, -a_in, a_in, 32)) pts.push_back(p);
        add_ring(out, std::move(pts));
    } else if (k == "sun") {
        double rx = w / 2.0, ry = h / 2.0;
        double rmid = 0.62, delta = 6.0;
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) {
            double a = 360.0 * i / 12.0;
            auto at = [&](double deg, double f) {
                double rad = deg * kPi / 180.0;
                return Point{c.x + rx * f * std::cos(rad), c.y + ry * f * std::sin(rad)};
            };
            pts.push_back(at(a - delta, rmid));
            Point tip = at(a, 1.0);
            pts.push_back(tip);
            out.vertices.emplace_back("v" + std::to_string(i + 1), tip);
            pts.push_back(at(a + delta, rmid));
        }
        add_ring(out, std::move(pts));
    } else if (k == "frame") {
        double t = 0.18 * m;
        std::vector<Point> outer{{b.x1, b.y1}, {b.x2, b.y1}, {b.x2, b.y2}, {b.x1, b.y2}};
        std::vector<Point> inner{{b.x1 + t, b.y1 + t}, {b.x2 - t, b.y1 + t},
                                 {b.x2 - t, b.y2 - t}, {b.x1 + t, b.y2 - t}};
        name_vertices(out, outer);
        for (size_t i = 0; i < inner.size(); ++i)
            out.vertices.emplace_back("v" + std::to_string(i + 5), inner[i]);
        add_ring(out, std::move(outer));
        add_ring(out, std::move(inner));
    } else if (k == "donut" || k == "ring") {
        double f = k == "donut" ? 0.5 : 0.72;
        add_ring(out, ellipse_outline(b, 64));
        add_ring(out, ellipse_outline({c.x - w / 2.0 * f, c.y - h / 2.0 * f,
                                       c.x + w / 2.0 * f, c.y + h / 2.0 * f}, 48));
    } else if (k == "lightning_bolt") {
        static const double kBolt[][2] = {{0.38, 0.0}, {0.85, 0.0},  {0.55, 0.35}, {0.80, 0.35},
                                          {0.50, 0.68}, {0.65, 0.68}, {0.15, 1.0},  {0.33, 0.60},
                                          {0.12, 0.60}, {0.34, 0.28}, {0.18, 0.28}};
        std::vector<Point> pts;
        for (const auto& p : kBolt) pts.push_back({b.x1 + p[0] * w, b.y1 + p[1] * h});
        simple_polygon(std::move(pts));
    } else if (k == "wave") {
        double amp = 0.18 * h, thick = 0.45 * h;
        double y0 = b.y1 + amp + (h - 2 * amp - thick) / 2.0;
        std::vector<Point> pts;
        for (int i = 0; i <= 24; ++i) {
            double t = double(i) / 24;
            pts.push_back({b.x1 + t * w, y0 + amp * std::sin(2.0 * kPi * t * 1.5)});
        }
        for (int i = 24; i >= 0; --i) {
            double t = double(i) / 24;
            pts.push_back({b.x1 + t * w, y0 + thick + amp * std::sin(2.0 * kPi * t * 1.5)});
        }
        add_ring(out, std::move(pts));
    } else if (k == "arc") {
        auto path = arc_points(c, w / 2.0, h / 2.0, -200, 20, 32);
        out.endpoints.emplace_back("start", path.front());
        out.endpoints.emplace_back("end", path.back());
        add_open_path(out, std::move(path));
    } else if (k == "pie") {
        std::vector<Point> pts = arc_points(c, w / 2.0, h / 2.0, 30, 330, 48);
        pts.push_back(c);
        add_ring(out, std::move(pts));
    } else if (k == "sector") {
        Point apex{c.x, b.y2};
        std::vector<Point> pts{apex};
        for (const Point& p : arc_points(apex, w / 2.0, h, 240, 300, 24)) pts.push_back(p);
        out.vertices.emplace_back("apex", apex);
        add_ring(out, std::move(pts));
    } else if (k == "drop") {
        Point apex{c.x, b.y1};
        double r = std::min(w / 2.0, 0.35 * h);
        Point cc{c.x, b.y2 - r};
        std::vector<Point> pts{apex};
        for (const Point& p : arc_points(cc, r, r, -150, 150, 36)) pts.push_back(p);
        out.vertices.emplace_back("tip", apex);
        add_ring(out, std::move(pts));
    } else if (k == "explosion") {
        static const double kJitter[] = {1.0, 0.82, 0.95, 0.78, 1.0, 0.85,
                                         0.92, 0.80, 0.98, 0.76, 0.9, 0.84};
        static const double kInner[] = {0.45, 0.38, 0.50, 0.36, 0.48, 0.40,
                                        0.52, 0.37, 0.46, 0.42, 0.5, 0.39};
        double rx = w / 2.0, ry = h / 2.0;
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) {
            double a0 = (-90.0 + 360.0 * i / 12.0) * kPi / 180.0;
            double a1 = (-90.0 + 360.0 * (i + 0.5) / 12.0) * kPi / 180.0;
            Point tip{c.x + rx * kJitter[i] * std::cos(a0), c.y + ry * kJitter[i] * std::sin(a0)};
            pts.push_back(tip);
            out.vertices.emplace_back("v" + std::to_string(i + 1), tip);
            pts.push_back({c.x + rx * kInner[i] * std::cos(a1), c.y + ry * kInner[i] * std::sin(a1)});
        }
        add_ring(out, std::move(pts));
    } else if (k == "semicircle") {
        std::vector<Point> pts = arc_points({c.x, b.y2}, w / 2.0, h, 180, 360, 32);
        add_ring(out, std::move(pts));
    } else if (k == "quarter_circle") {
        std::vector<Point> pts{{b.x1, b.y2}};
        for (const Point& p : arc_points({b.x1, b.y2}, w, h, 270, 360, 24)) pts.push_back(p);
        add_ring(out, std::move(pts));
    } else if (k == "teardrop") {
        std::vector<Point> pts = arc_points(c, w / 2.0, h / 2.0, 0, 270, 36);
        Point tip{b.x2, b.y1};
        pts.push_back(tip);
        out.vertices.emplace_back("tip", tip);
        add_ring(out, std::move(pts));
    } else if (k == "shield") {
        double ys = b.y1 + 0.45 * h;
        Point tip{c.x, b.y2};
        std::vector<Point> pts{{b.x1, b.y1}, {b.x2, b.y1}, {b.x2, ys}};
        for (const Point& p : quad_bezier({b.x2, ys}, {b.x2, b.y2 - 0.08 * h}, tip, 12))
            pts.push_back(p);
        for (const Point& p : quad_bezier(tip, {b.x1, b.y2 - 0.08 * h}, {b.x1, ys}, 12))
            pts.push_back(p);
        out.vertices.emplace_back("v1", Point{b.x1, b.y1});
        out.vertices.emplace_back("v2", Point{b.x2, b.y1});
        out.vertices.emplace_back("tip", tip);
        add_ring(out, std::move(pts));
    } else if (k == "l_shape") {
        simple_polygon({{b.x1, b.y1}, {b.x1 + 0.4 * w, b.y1}, {b.x1 + 0.4 * w, b.y2 - 0.4 * h},
                        {b.x2, b.y2 - 0.4 * h}, {b.x2, b.y2}, {b.x1, b.y2}});
    } else if (k == "t_shape") {
        double yb = b.y1 + 0.35 * h, sw = 0.2 * w;
        simple_polygon({{b.x1, b.y1}, {b.x2, b.y1}, {b.x2, yb}, {c.x + sw, yb},
                        {c.x + sw, b.y2}, {c.x - sw, b.y2}, {c.x - sw, yb}, {b.x1, yb}});
    } else {
        throw std::invalid_argument("unhandled shape kind: " + std::string(k));
    }
    return out;
}

Rect tight_bbox(const ShapeBuild& b) {
    double x1 = 1e300, y1 = 1e300, x2 = -1e300, y2 = -1e300;
    auto visit = [&](const Point& p) {
        x1 = std::min(x1, p.x);
        y1 = std::min(y1, p.y);
        x2 = std::max(x2, p.x);
        y2 = std::max(y2, p.y);
    };
    for (const auto& ring : b.fill_rings)
        for (const auto& p : ring) visit(p);
    for (const auto& path : b.stroke_paths)
        for (const auto& p : path) visit(p);
    return {x1, y1, x2, y2};
}

double quant2(double v) { return std::round(v * 100.0) / 100.0; }

// Metadata is quantized to 2 decimals once here; downstream arithmetic
// (centers, edge midpoints) stays exact on the quantized values.
ShapeResult result_from_build(const ShapeBuild& b) {
    ShapeResult r;
    Rect t = tight_bbox(b);
    r.bbox = {quant2(t.x1), quant2(t.y1), quant2(t.x2), quant2(t.y2)};
    r.center = r.bbox.center();
    r.vertices = b.vertices;
    for (auto& [name, p] : r.vertices) p = {quant2(p.x), quant2(p.y)};
    r.endpoints = b.endpoints;
    for (auto& [name, p] : r.endpoints) p = {quant2(p.x), quant2(p.y)};
    return r;
}

}  // namespace

ShapeResult shape_geometry(int kind_index, const Rect& box) {
    return result_from_build(build_shape(kind_index, box));
}

ShapeResult rasterize_shape(Image& img, int kind_index, const Rect& box, const Style& style) {
    if (kind_index < 0 || kind_index >= kShapeKindCount)
        throw std::invalid_argument("unknown shape kind index " + std::to_string(kind_index));
    const ShapeKindInfo& info = shape_registry()[size_t(kind_index)];
    ShapeBuild b = build_shape(kind_index, box);

    if (!info.line_like && !b.fill_rings.empty()) {
        fill_polygon(img, b.fill_rings, style.fill);
    } else if (info.line_like && !b.fill_rings.empty()) {
        for (const auto& ring : b.fill_rings) fill_polygon(img, ring, style.outline);
    }
    for (size_t i = 0; i < b.stroke_paths.size(); ++i) {
        if (style.dashed)
            stroke_polyline_dashed(img, b.stroke_paths[i], style.outline, style.stroke_width,
                                   b.stroke_closed[i]);
        else
            stroke_polyline(img, b.stroke_paths[i], style.outline, style.stroke_width,
                            b.stroke_closed[i]);
    }
    return result_from_build(b);
}

}  // namespace actsynth
