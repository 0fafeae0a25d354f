#include "actsynth/textpage.hpp"

#include <algorithm>
#include <stdexcept>

namespace actsynth {

using ordered_json = nlohmann::ordered_json;

const char* content_kind_name(ContentKind k) {
    return k == ContentKind::Code ? "code" : "natural-language";
}

std::string TextPage::text() const {
    std::string s;
    s.reserve(glyphs.size());
    for (const GlyphBox& g : glyphs) s.push_back(g.ch);
    return s;
}

TextPage compose_page(Image& background, const Rect& blank_region, const std::string& content,
                      const FontSpec& font, ContentKind kind) {
    const BitmapFont& face = *font.font;
    const int scale = font.scale;
    const int cell_h = face.cell_height() * scale;
    const int line_h = cell_h + 2 * scale;  // leading
    if (blank_region.width() < face.advance('M') * scale ||
        blank_region.height() < cell_h)
        throw std::invalid_argument("blank region too small for any glyph");

    TextPage page;
    page.kind = kind;
    page.blank_region = blank_region;
    page.page_w = background.width;
    page.page_h = background.height;
    page.font_scale = scale;
    page.font_name = face.name();

    double x = blank_region.x1;
    double y = blank_region.y1;
    int line_index = 0;
    double line_start_x = x;

    auto close_line = [&]() {
        page.lines.push_back({line_start_x, y, x, y + cell_h});
    };
    auto newline = [&]() -> bool {
        close_line();
        x = blank_region.x1;
        y += line_h;
        line_index++;
        line_start_x = x;
        return y + cell_h <= blank_region.y2;
    };
    auto emit_glyph = [&](char c) {
        double adv = face.advance(uint8_t(c)) * scale + font.tracking;
        GlyphBox g;
        g.ch = c;
        g.bbox = {x, y, x + adv, y + cell_h};
        g.line = line_index;
        if (c != ' ') draw_text(background, font, {x, y}, std::string(1, c));
        page.glyphs.push_back(g);
        x += adv;
    };
    auto word_advance = [&](const std::string& w) {
        return double(text_advance(face, scale, font.tracking, w));
    };

    // tokens: words, single spaces, newlines
    size_t i = 0;
    bool fits = true;
    while (i < content.size() && fits) {
        char c = content[i];
        if (c == '\n') {
            fits = newline();
            ++i;
        } else if (c == ' ') {
            double adv = face.advance(' ') * scale + font.tracking;
            if (x + adv > blank_region.x2) {
                fits = newline();  // the wrapping space is consumed, not boxed
            } else {
                emit_glyph(' ');
            }
            ++i;
        } else {
            size_t j = i;
            while (j < content.size() && content[j] != ' ' && content[j] != '\n') ++j;
            std::string word = content.substr(i, j - i);
            if (x + word_advance(word) > blank_region.x2 && x > blank_region.x1) {
                fits = newline();
                if (!fits) break;
            }
            // hard-break words wider than the whole region
            for (char wc : word) {
                double adv = face.advance(uint8_t(wc)) * scale + font.tracking;
                if (x + adv > blank_region.x2) {
                    fits = newline();
                    if (!fits) break;
                }
                emit_glyph(wc);
            }
            i = j;
        }
    }
    if (i < content.size()) page.truncated = true;
    if (x > line_start_x || page.lines.empty()) close_line();
    return page;
}

namespace {

Rect widen(const Rect& r, double tol, const TextPage& page) {
    return {std::max(0.0, r.x1 - tol), r.y1, std::min(double(page.page_w), r.x2 + tol), r.y2};
}

}  // namespace

CorrectRegion cursor_target(const TextPage& page, size_t index, double tol) {
    if (index > page.glyphs.size()) throw std::out_of_range("cursor index out of range");
    if (page.glyphs.empty()) throw std::out_of_range("page has no glyphs");

    Rect base;
    if (index == 0) {
        const GlyphBox& g = page.glyphs.front();
        base = {g.bbox.x1, g.bbox.y1, g.bbox.x1, g.bbox.y2};
    } else if (index == page.glyphs.size()) {
        const GlyphBox& g = page.glyphs.back();
        base = {g.bbox.x2, g.bbox.y1, g.bbox.x2, g.bbox.y2};
    } else {
        const GlyphBox& a = page.glyphs[index - 1];
        const GlyphBox& b = page.glyphs[index];
        if (a.line == b.line) {
            base = {a.bbox.x2, b.bbox.y1, b.bbox.x1, b.bbox.y2};
        } else {
            base = {b.bbox.x1, b.bbox.y1, b.bbox.x1, b.bbox.y2};  // start of b's line
        }
    }
    return CorrectRegion{widen(base, tol, page), std::nullopt};
}

std::pair<CorrectRegion, CorrectRegion> span_drag_target(const TextPage& page,
                                                         const SpanTarget& span) {
    if (!(span.start < span.end && span.end <= page.glyphs.size()))
        throw std::out_of_range("invalid span");
    return {cursor_target(page, span.start), cursor_target(page, span.end)};
}

std::vector<SpanTarget> find_spans(const TextPage& page, const std::string& needle) {
    std::vector<SpanTarget> out;
    if (needle.empty()) return out;
    std::string hay = page.text();
    size_t pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        SpanTarget t;
        t.start = pos;
        t.end = pos + needle.size();
        out.push_back(t);
        pos += 1;
    }
    return out;
}

ordered_json page_annotation(const TextPage& page, const std::string& image_ref) {
    ordered_json doc;
    doc["image"] = image_ref;
    doc["size"] = {page.page_w, page.page_h};
    doc["content_kind"] = content_kind_name(page.kind);
    ordered_json glyphs = ordered_json::array();
    for (const GlyphBox& g : page.glyphs) {
        ordered_json jg;
        jg["ch"] = std::string(1, g.ch);
        jg["bbox"] = {g.bbox.x1, g.bbox.y1, g.bbox.x2, g.bbox.y2};
        jg["line"] = g.line;
        glyphs.push_back(std::move(jg));
    }
    doc["glyphs"] = std::move(glyphs);
    ordered_json lines = ordered_json::array();
    for (const Rect& r : page.lines) lines.push_back({r.x1, r.y1, r.x2, r.y2});
    doc["lines"] = std::move(lines);
    return doc;
}

}  // namespace actsynth
