#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "actsynth/eval.hpp"
#include "actsynth/font.hpp"

namespace actsynth {

enum class ContentKind { Code, NaturalLanguage };

const char* content_kind_name(ContentKind k);  // "code" / "natural-language"

struct GlyphBox {
    char ch = ' ';
    Rect bbox;      // advance box; whitespace has zero ink but full advance
    int line = 0;   // index into TextPage::lines
};

struct TextPage {
    ContentKind kind = ContentKind::NaturalLanguage;
    std::vector<GlyphBox> glyphs;  // reading order
    std::vector<Rect> lines;       // one box per rendered line
    Rect blank_region;
    int page_w = 0, page_h = 0;
    int font_scale = 1;
    std::string font_name;
    bool truncated = false;  // content did not fit the region

    std::string text() const;  // concatenated glyph characters
};

// Greedy word wrap of `content` into blank_region, drawing onto `background`
// and recording a box per glyph. Throws std::invalid_argument when the
// region cannot hold a single glyph. Overflowing content is truncated and
// flagged.
TextPage compose_page(Image& background, const Rect& blank_region, const std::string& content,
                      const FontSpec& font, ContentKind kind);

struct SpanTarget {
    size_t start = 0;  // glyph indices, inclusive
    size_t end = 0;    // exclusive
    enum class Kind { ShortSpan, LongSpan, Word } kind = Kind::Word;
    std::string context_hint;
};

// Thin rect over the insertion gap before glyph `index` (index == glyph
// count addresses the trailing edge), widened by `tol` px per side, spanning
// the line height. Throws std::out_of_range on a bad index.
CorrectRegion cursor_target(const TextPage& page, size_t index, double tol = 3.0);

// Leading gap of the first glyph and trailing gap of the last one, emitted
// unranked so a drag in either direction judges correct.
std::pair<CorrectRegion, CorrectRegion> span_drag_target(const TextPage& page,
                                                         const SpanTarget& span);

// Occurrences of `needle` in the page text, as glyph spans.
std::vector<SpanTarget> find_spans(const TextPage& page, const std::string& needle);

nlohmann::ordered_json page_annotation(const TextPage& page, const std::string& image_ref);

}  // namespace actsynth
