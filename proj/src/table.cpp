#include "actsynth/table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace actsynth {

using ordered_json = nlohmann::ordered_json;

bool spans_tile_exactly(const TableModel& model) {
    if (model.rows <= 0 || model.cols <= 0) return false;
    std::vector<int> covered(size_t(model.rows) * model.cols, 0);
    for (const auto& [pos, cell] : model.cells) {
        auto [r, c] = pos;
        if (r < 0 || c < 0 || cell.row_span < 1 || cell.col_span < 1) return false;
        if (r + cell.row_span > model.rows || c + cell.col_span > model.cols) return false;
        for (int dr = 0; dr < cell.row_span; ++dr)
            for (int dc = 0; dc < cell.col_span; ++dc) covered[size_t(r + dr) * model.cols + c + dc]++;
    }
    for (int v : covered)
        if (v != 1) return false;
    return true;
}

namespace {

// Anchor owning a grid position, or cells.end().
std::map<std::pair<int, int>, TableCell>::const_iterator owner_of(const TableModel& m, int r,
                                                                  int c) {
    for (auto it = m.cells.begin(); it != m.cells.end(); ++it) {
        auto [ar, ac] = it->first;
        if (r >= ar && r < ar + it->second.row_span && c >= ac && c < ac + it->second.col_span)
            return it;
    }
    return m.cells.end();
}

bool mutate_merge(TableModel& m, Rng& rng) {
    int r = int(rng.uniform_int(m.header_rows, std::max(m.header_rows, m.rows - 1)));
    int c = int(rng.uniform_int(0, m.cols - 1));
    int rs = int(rng.uniform_int(1, 2));
    int cs = int(rng.uniform_int(1, 3));
    if (rs == 1 && cs == 1) cs = 2;
    if (r + rs > m.rows || c + cs > m.cols) return false;
    // every covered position must currently be a plain 1x1 anchor
    for (int dr = 0; dr < rs; ++dr)
        for (int dc = 0; dc < cs; ++dc) {
            auto it = m.cells.find({r + dr, c + dc});
            if (it == m.cells.end() || it->second.row_span != 1 || it->second.col_span != 1)
                return false;
        }
    TableCell merged = m.cells[{r, c}];
    merged.row_span = rs;
    merged.col_span = cs;
    for (int dr = 0; dr < rs; ++dr)
        for (int dc = 0; dc < cs; ++dc)
            if (dr || dc) m.cells.erase({r + dr, c + dc});
    m.cells[{r, c}] = merged;
    return true;
}

bool mutate_add_row(TableModel& m, Rng& rng) {
    int at = int(rng.uniform_int(m.header_rows, m.rows));  // insert before `at`
    // no span may straddle the insertion line
    for (const auto& [pos, cell] : m.cells) {
        if (pos.first < at && pos.first + cell.row_span > at) return false;
    }
    std::map<std::pair<int, int>, TableCell> moved;
    for (auto& [pos, cell] : m.cells)
        moved[{pos.first >= at ? pos.first + 1 : pos.first, pos.second}] = cell;
    m.cells = std::move(moved);
    m.rows++;
    for (int c = 0; c < m.cols; ++c) {
        TableCell cell;
        cell.content = std::to_string(rng.uniform_int(1, 999));
        m.cells[{at, c}] = cell;
    }
    return true;
}

bool mutate_add_col(TableModel& m, Rng& rng) {
    int at = int(rng.uniform_int(std::max(1, m.header_cols), m.cols));
    for (const auto& [pos, cell] : m.cells) {
        if (pos.second < at && pos.second + cell.col_span > at) return false;
    }
    std::map<std::pair<int, int>, TableCell> moved;
    for (auto& [pos, cell] : m.cells)
        moved[{pos.first, pos.second >= at ? pos.second + 1 : pos.second}] = cell;
    m.cells = std::move(moved);
    m.cols++;
    for (int r = 0; r < m.rows; ++r) {
        TableCell cell;
        cell.content = r < m.header_rows ? "Col" : std::to_string(rng.uniform_int(1, 999));
        m.cells[{r, at}] = cell;
    }
    return true;
}

bool mutate_split_span(TableModel& m, Rng& rng) {
    std::vector<std::pair<int, int>> spans;
    for (const auto& [pos, cell] : m.cells)
        if (cell.row_span > 1 || cell.col_span > 1) spans.push_back(pos);
    if (spans.empty()) return false;
    auto pos = spans[size_t(rng.uniform_int(0, int64_t(spans.size()) - 1))];
    TableCell cell = m.cells[pos];
    int rs = cell.row_span, cs = cell.col_span;
    cell.row_span = cell.col_span = 1;
    m.cells[pos] = cell;
    for (int dr = 0; dr < rs; ++dr)
        for (int dc = 0; dc < cs; ++dc) {
            if (!dr && !dc) continue;
            TableCell empty;
            m.cells[{pos.first + dr, pos.second + dc}] = empty;
        }
    return true;
}

bool mutate_shuffle_cols(TableModel& m, Rng& rng) {
    for (const auto& [pos, cell] : m.cells)
        if (cell.col_span > 1) return false;  // only safe without column spans
    std::vector<int> perm;
    for (int c = m.header_cols; c < m.cols; ++c) perm.push_back(c);
    if (perm.size() < 2) return false;
    rng.shuffle(perm);
    std::map<std::pair<int, int>, TableCell> moved;
    for (auto& [pos, cell] : m.cells) {
        int c = pos.second;
        int nc = c < m.header_cols ? c : perm[size_t(c - m.header_cols)];
        moved[{pos.first, nc}] = cell;
    }
    m.cells = std::move(moved);
    return true;
}

}  // namespace

std::vector<TableModel> evolve_table(const TableModel& seed, Rng& rng, int n_variants) {
    if (!spans_tile_exactly(seed)) throw std::invalid_argument("seed model does not tile");
    std::vector<TableModel> out;
    for (int v = 0; v < n_variants; ++v) {
        TableModel m = seed;
        int n_mut = int(rng.uniform_int(1, 3));
        for (int k = 0; k < n_mut; ++k) {
            bool done = false;
            for (int attempt = 0; attempt < 8 && !done; ++attempt) {
                TableModel trial = m;
                int which = int(rng.uniform_int(0, 4));
                switch (which) {
                    case 0: done = mutate_merge(trial, rng); break;
                    case 1: done = mutate_add_row(trial, rng); break;
                    case 2: done = mutate_add_col(trial, rng); break;
                    case 3: done = mutate_split_span(trial, rng); break;
                    case 4: done = mutate_shuffle_cols(trial, rng); break;
                }
                if (done && spans_tile_exactly(trial)) m = std::move(trial);
                else done = false;
            }
            // unsatisfiable mutation draw is skipped
        }
        out.push_back(std::move(m));
    }
    return out;
}

TableModel mask_cells(const TableModel& model, Rng& rng, double fraction) {
    if (fraction < 0.0 || fraction > 1.0) throw std::invalid_argument("fraction must be in [0,1]");
    TableModel out = model;
    for (auto& [pos, cell] : out.cells) {
        if (pos.first < out.header_rows || pos.second < out.header_cols) continue;
        if (rng.bernoulli(fraction)) cell.masked = true;
    }
    return out;
}

TableStyle style_preset(int index, Rng& rng) {
    if (index < 0 || index >= kTableStylePresetCount)
        throw std::invalid_argument("style preset index out of range");
    TableStyle s;
    s.id = index;
    // presets cycle through border modes, stripe usage and hue families;
    // per-instance parameters are then jittered from rng
    s.border = index % 5 == 4 ? TableStyle::Border::None
               : index % 5 == 3 ? TableStyle::Border::Outer
                                : TableStyle::Border::All;
    s.stripe = index % 3 == 0;
    s.header_bold = index % 4 != 1;
    s.font_scale = index % 7 == 6 ? 2 : 1;
    s.padding = 4 + index % 4 * 2 + int(rng.uniform_int(0, 2));

    double hue = (index * 47) % 360 + rng.uniform(0.0, 12.0);
    double page_v = 0.92 + rng.uniform(0.0, 0.08);
    s.page_bg = hsv_to_rgb(hue, 0.04 + rng.uniform(0.0, 0.04), page_v);
    s.header_bg = hsv_to_rgb(hue, 0.35 + rng.uniform(0.0, 0.25), 0.45 + rng.uniform(0.0, 0.35));
    bool dark_header = (s.header_bg.r + s.header_bg.g + s.header_bg.b) < 382;
    s.header_fg = dark_header ? Rgb{245, 245, 245} : Rgb{25, 25, 25};
    s.body_bg = hsv_to_rgb(hue, 0.02 + rng.uniform(0.0, 0.03), 0.97);
    s.body_fg = hsv_to_rgb(hue, 0.1, 0.15 + rng.uniform(0.0, 0.1));
    s.stripe_bg = hsv_to_rgb(hue, 0.08 + rng.uniform(0.0, 0.06), 0.9);
    s.grid = hsv_to_rgb(hue, 0.12, 0.55 + rng.uniform(0.0, 0.2));
    return s;
}

namespace {

const BitmapFont& table_font() { return BitmapFont::builtin_mono(); }

struct Layout {
    std::vector<int> col_w;
    std::vector<int> row_h;
    int table_w = 0, table_h = 0;
};

Layout measure(const TableModel& model, const TableStyle& style, int font_scale) {
    const BitmapFont& font = table_font();
    int pad = style.padding;
    int min_w = 24 * font_scale;
    Layout L;
    L.col_w.assign(size_t(model.cols), min_w);
    // single-column content first; masked content still participates so
    // masking never moves geometry
    for (const auto& [pos, cell] : model.cells) {
        if (cell.col_span != 1) continue;
        int w = text_advance(font, font_scale, 0, cell.content) + 2 * pad;
        L.col_w[size_t(pos.second)] = std::max(L.col_w[size_t(pos.second)], w);
    }
    // spanning cells widen their last column when needed
    for (const auto& [pos, cell] : model.cells) {
        if (cell.col_span == 1) continue;
        int w = text_advance(font, font_scale, 0, cell.content) + 2 * pad;
        int have = 0;
        for (int dc = 0; dc < cell.col_span; ++dc) have += L.col_w[size_t(pos.second + dc)];
        if (w > have) L.col_w[size_t(pos.second + cell.col_span - 1)] += w - have;
    }
    int row_h = font.cell_height() * font_scale + 2 * pad;
    L.row_h.assign(size_t(model.rows), row_h);
    for (int w : L.col_w) L.table_w += w;
    L.table_h = row_h * model.rows;
    return L;
}

}  // namespace

TableRender layout_render(const TableModel& model, const TableStyle& style, int target_w,
                          int target_h) {
    if (!spans_tile_exactly(model)) throw std::invalid_argument("model does not tile");
    constexpr int kMargin = 12;
    int font_scale = style.font_scale;
    Layout L = measure(model, style, font_scale);
    bool clipped = false;
    if ((L.table_w + 2 * kMargin > target_w || L.table_h + 2 * kMargin > target_h) &&
        font_scale > 1) {
        font_scale = 1;  // one downscale attempt
        L = measure(model, style, font_scale);
    }
    if (L.table_w + 2 * kMargin > target_w || L.table_h + 2 * kMargin > target_h) clipped = true;

    TableRender out;
    out.clipped = clipped;
    out.header_rows = model.header_rows;
    out.header_cols = model.header_cols;
    out.image = Image(target_w, target_h, style.page_bg);

    std::vector<int> col_x(size_t(model.cols) + 1, kMargin);
    for (int c = 0; c < model.cols; ++c) col_x[size_t(c) + 1] = col_x[size_t(c)] + L.col_w[size_t(c)];
    std::vector<int> row_y(size_t(model.rows) + 1, kMargin);
    for (int r = 0; r < model.rows; ++r) row_y[size_t(r) + 1] = row_y[size_t(r)] + L.row_h[size_t(r)];
    out.content_box = {double(kMargin), double(kMargin), double(col_x[size_t(model.cols)]),
                       double(row_y[size_t(model.rows)])};

    const BitmapFont& font = table_font();

    // backgrounds
    for (const auto& [pos, cell] : model.cells) {
        auto [r, c] = pos;
        Rect box{double(col_x[size_t(c)]), double(row_y[size_t(r)]),
                 double(col_x[size_t(c + cell.col_span)]), double(row_y[size_t(r + cell.row_span)])};
        bool header = r < model.header_rows || c < model.header_cols;
        Rgb bg = header ? style.header_bg
                        : (style.stripe && (r - model.header_rows) % 2 == 1 ? style.stripe_bg
                                                                            : style.body_bg);
        fill_polygon(out.image,
                     std::vector<Point>{{box.x1, box.y1}, {box.x2, box.y1}, {box.x2, box.y2},
                                        {box.x1, box.y2}},
                     bg);
    }
    // grid lines
    if (style.border == TableStyle::Border::All) {
        for (const auto& [pos, cell] : model.cells) {
            auto [r, c] = pos;
            Rect box{double(col_x[size_t(c)]), double(row_y[size_t(r)]),
                     double(col_x[size_t(c + cell.col_span)]),
                     double(row_y[size_t(r + cell.row_span)])};
            draw_rect_outline(out.image, box, style.grid);
        }
    } else if (style.border == TableStyle::Border::Outer) {
        draw_rect_outline(out.image, out.content_box, style.grid);
    }
    // content + annotations
    for (const auto& [pos, cell] : model.cells) {
        auto [r, c] = pos;
        Rect box{double(col_x[size_t(c)]), double(row_y[size_t(r)]),
                 double(col_x[size_t(c + cell.col_span)]), double(row_y[size_t(r + cell.row_span)])};
        bool header = r < model.header_rows || c < model.header_cols;
        if (!cell.masked && !cell.content.empty()) {
            FontSpec spec;
            spec.font = &font;
            spec.scale = font_scale;
            spec.bold = header && style.header_bold;
            spec.color = header ? style.header_fg : style.body_fg;
            double ty = box.y1 + (box.height() - font.cell_height() * font_scale) / 2.0;
            draw_text(out.image, spec, {box.x1 + style.padding, ty}, cell.content);
        }

        CellAnnotation ann;
        ann.bbox = {std::min(box.x1, double(target_w)), std::min(box.y1, double(target_h)),
                    std::min(box.x2, double(target_w)), std::min(box.y2, double(target_h))};
        ann.row = r;
        ann.col = c;
        ann.content = cell.masked ? std::string() : cell.content;
        ann.excel_name = excel_name(r, c);
        if (model.header_cols > 0 && c >= model.header_cols) {
            auto it = owner_of(model, r, 0);
            if (it != model.cells.end() && !it->second.masked) ann.row_header = it->second.content;
        }
        if (model.header_rows > 0 && r >= model.header_rows) {
            auto it = owner_of(model, 0, c);
            if (it != model.cells.end() && !it->second.masked) ann.col_header = it->second.content;
        }
        out.cells.push_back(std::move(ann));
    }
    std::sort(out.cells.begin(), out.cells.end(), [](const CellAnnotation& a, const CellAnnotation& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    return out;
}

Point edge_handle(const CellAnnotation& cell) {
    return {cell.bbox.x2, (cell.bbox.y1 + cell.bbox.y2) / 2.0};
}

Rect corner_fill_target(const CellAnnotation& cell) {
    return {cell.bbox.x1, cell.bbox.y2, cell.bbox.x2, 2.0 * cell.bbox.y2 - cell.bbox.y1};
}

ClampedRect corner_fill_target_clamped(const CellAnnotation& cell, int img_w, int img_h) {
    Rect r = corner_fill_target(cell);
    ClampedRect out{r, false};
    if (r.x2 > img_w || r.y2 > img_h) {
        out.clipped = true;
        out.rect.x2 = std::min(r.x2, double(img_w));
        out.rect.y2 = std::min(r.y2, double(img_h));
        out.rect.y1 = std::min(out.rect.y1, out.rect.y2);
    }
    return out;
}

std::string excel_name(int row, int col) {
    std::string letters;
    int c = col;
    do {
        letters.insert(letters.begin(), char('A' + c % 26));
        c = c / 26 - 1;
    } while (c >= 0);
    return letters + std::to_string(row + 1);
}

std::pair<int, int> parse_excel_name(const std::string& name) {
    size_t i = 0;
    int col = 0;
    while (i < name.size() && name[i] >= 'A' && name[i] <= 'Z') {
        col = col * 26 + (name[i] - 'A' + 1);
        ++i;
    }
    if (i == 0 || i == name.size()) throw std::invalid_argument("bad excel name: " + name);
    int row = std::stoi(name.substr(i));
    return {row - 1, col - 1};
}

const std::vector<TableModel>& seed_tables() {
    static const std::vector<TableModel> kSeeds = [] {
        std::vector<TableModel> seeds;
        auto grid = [](int rows, int cols, int header_rows, int header_cols,
                       std::vector<std::vector<std::string>> content) {
            TableModel m;
            m.rows = rows;
            m.cols = cols;
            m.header_rows = header_rows;
            m.header_cols = header_cols;
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) {
                    TableCell cell;
                    if (r < int(content.size()) && c < int(content[size_t(r)].size()))
                        cell.content = content[size_t(r)][size_t(c)];
                    m.cells[{r, c}] = cell;
                }
            return m;
        };
        seeds.push_back(grid(5, 4, 1, 1,
                             {{"Item", "Qty", "Price", "Total"},
                              {"apple", "4", "1.20", "4.80"},
                              {"banana", "6", "0.50", "3.00"},
                              {"cherry", "2", "3.10", "6.20"},
                              {"date", "5", "2.00", "10.00"}}));
        seeds.push_back(grid(6, 5, 1, 0,
                             {{"Name", "Mon", "Tue", "Wed", "Thu"},
                              {"Ana", "9:00", "9:30", "off", "8:45"},
                              {"Bob", "10:00", "off", "10:15", "9:50"},
                              {"Cid", "off", "8:20", "8:25", "off"},
                              {"Dee", "11:30", "11:00", "11:10", "11:45"},
                              {"Eli", "7:55", "8:05", "off", "8:00"}}));
        seeds.push_back(grid(7, 3, 1, 1,
                             {{"Metric", "Q1", "Q2"},
                              {"revenue", "120", "145"},
                              {"cost", "80", "92"},
                              {"margin", "40", "53"},
                              {"users", "1500", "1720"},
                              {"churn", "3.2", "2.9"},
                              {"nps", "41", "47"}}));
        seeds.push_back(grid(4, 6, 1, 0,
                             {{"ID", "City", "Temp", "Wind", "Rain", "Code"},
                              {"101", "Oslo", "12", "8", "0.4", "A1"},
                              {"102", "Lima", "19", "3", "0.0", "B7"},
                              {"103", "Pune", "31", "5", "1.2", "C2"}}));
        seeds.push_back(grid(8, 4, 2, 0,
                             {{"Team", "Score", "Score", "Rank"},
                              {"", "Home", "Away", ""},
                              {"Foxes", "3", "1", "1"},
                              {"Owls", "2", "2", "3"},
                              {"Bears", "1", "0", "5"},
                              {"Hawks", "4", "2", "2"},
                              {"Wolves", "0", "1", "6"},
                              {"Cranes", "2", "3", "4"}}));
        seeds.push_back(grid(5, 5, 1, 1,
                             {{"Task", "Owner", "State", "Due", "Pts"},
                              {"parser", "ana", "done", "05-02", "3"},
                              {"layout", "bob", "open", "05-10", "5"},
                              {"export", "cid", "open", "05-14", "2"},
                              {"review", "dee", "done", "05-03", "1"}}));
        return seeds;
    }();
    return kSeeds;
}

ordered_json table_annotation(const TableRender& render, const std::string& image_ref) {
    ordered_json doc;
    doc["image"] = image_ref;
    doc["size"] = {render.image.width, render.image.height};
    ordered_json cells = ordered_json::array();
    for (const CellAnnotation& c : render.cells) {
        ordered_json jc;
        jc["bbox"] = {c.bbox.x1, c.bbox.y1, c.bbox.x2, c.bbox.y2};
        jc["row"] = c.row;
        jc["col"] = c.col;
        jc["row_header"] = c.row_header;
        jc["col_header"] = c.col_header;
        jc["content"] = c.content;
        jc["excel_name"] = c.excel_name;
        cells.push_back(std::move(jc));
    }
    doc["cells"] = std::move(cells);
    return doc;
}

}  // namespace actsynth
