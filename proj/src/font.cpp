#include "actsynth/font.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace actsynth {

namespace font_data {
extern const char* kMono16Json;
extern const char* kSans16Json;
}  // namespace font_data

BitmapFont BitmapFont::load_json_string(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    BitmapFont f;
    f.name_ = j.value("name", std::string("font"));
    f.cell_height_ = j.value("cell_height", 16);
    f.baseline_ = j.value("baseline", 13);
    if (f.cell_height_ <= 0 || f.cell_height_ > 16)
        throw std::runtime_error("font cell_height must be in 1..16");
    for (const auto& [key, jg] : j.at("glyphs").items()) {
        uint32_t cp = uint32_t(std::stoul(key));
        Glyph g;
        g.advance = jg.value("advance", 8);
        const auto& rows = jg.at("rows");
        for (size_t r = 0; r < rows.size() && r < 16; ++r)
            g.rows[r] = uint16_t(rows[r].get<unsigned>());
        f.glyphs_[cp] = g;
    }
    if (f.glyphs_.empty()) throw std::runtime_error("font has no glyphs");
    return f;
}

BitmapFont BitmapFont::load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open font: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_json_string(text);
}

const BitmapFont& BitmapFont::builtin_mono() {
    static const BitmapFont f = load_json_string(font_data::kMono16Json);
    return f;
}

const BitmapFont& BitmapFont::builtin_sans() {
    static const BitmapFont f = load_json_string(font_data::kSans16Json);
    return f;
}

const BitmapFont::Glyph* BitmapFont::glyph(uint32_t codepoint) const {
    auto it = glyphs_.find(codepoint);
    return it == glyphs_.end() ? nullptr : &it->second;
}

int BitmapFont::advance(uint32_t codepoint) const {
    if (const Glyph* g = glyph(codepoint)) return g->advance;
    if (const Glyph* q = glyph(uint32_t('?'))) return q->advance;
    return 8;
}

int text_advance(const BitmapFont& font, int scale, int tracking, const std::string& text) {
    int w = 0;
    for (unsigned char c : text) w += font.advance(c) * scale + tracking;
    return w;
}

int draw_text(Image& img, const FontSpec& spec, Point origin, const std::string& text) {
    const BitmapFont& font = *spec.font;
    int x = int(origin.x);
    int y = int(origin.y);
    int consumed = 0;
    for (unsigned char c : text) {
        const BitmapFont::Glyph* g = font.glyph(c);
        int adv = font.advance(c) * spec.scale + spec.tracking;
        if (g) {
            for (int r = 0; r < font.cell_height(); ++r) {
                uint32_t bits = g->rows[r];
                if (spec.bold) bits |= bits << 1;
                for (int cbit = 0; cbit < 17; ++cbit) {
                    if (!(bits >> cbit & 1)) continue;
                    for (int sy = 0; sy < spec.scale; ++sy)
                        for (int sx = 0; sx < spec.scale; ++sx)
                            img.set(x + cbit * spec.scale + sx, y + r * spec.scale + sy,
                                    spec.color);
                }
            }
        }
        x += adv;
        consumed += adv;
    }
    return consumed;
}

}  // namespace actsynth
