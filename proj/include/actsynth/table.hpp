#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "actsynth/font.hpp"
#include "actsynth/rng.hpp"

namespace actsynth {

struct TableCell {
    std::string content;
    int row_span = 1;
    int col_span = 1;
    bool masked = false;  // content hidden but still sized, like a cleared
                          // spreadsheet cell; geometry never changes
};

// Grid model with anchor-owned spans. Only anchor positions appear in
// `cells`; covered positions are implied.
struct TableModel {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, TableCell> cells;
    int header_rows = 1;
    int header_cols = 0;
};

// True when the anchors' spans tile the rows x cols grid exactly.
bool spans_tile_exactly(const TableModel& model);

// 1-3 mutations per variant from {merge cells, add row/col, split span,
// shuffle column order}; mutations that would break tiling are re-drawn a
// bounded number of times, then skipped.
std::vector<TableModel> evolve_table(const TableModel& seed, Rng& rng, int n_variants);

// Marks ~fraction of non-header cells as masked. Headers untouched.
TableModel mask_cells(const TableModel& model, Rng& rng, double fraction);

struct TableStyle {
    int id = 0;
    int font_scale = 1;  // multiples of the 16px cell
    bool header_bold = true;
    int padding = 6;
    enum class Border { None, All, Outer } border = Border::All;
    Rgb page_bg{255, 255, 255};
    Rgb header_bg{220, 220, 220};
    Rgb header_fg{20, 20, 20};
    Rgb body_bg{255, 255, 255};
    Rgb body_fg{30, 30, 30};
    Rgb grid{160, 160, 160};
    bool stripe = false;
    Rgb stripe_bg{240, 240, 240};
};

constexpr int kTableStylePresetCount = 50;

// Preset `index` in [0, kTableStylePresetCount) with per-instance randomized
// parameters drawn from `rng`.
TableStyle style_preset(int index, Rng& rng);

struct CellAnnotation {
    Rect bbox;
    int row = 0, col = 0;     // anchor position
    std::string row_header;   // leftmost header-column content for this row
    std::string col_header;   // top header-row content for this column
    std::string content;      // empty when masked
    std::string excel_name;   // A1-style name of the anchor
};

struct TableRender {
    Image image;
    std::vector<CellAnnotation> cells;
    Rect content_box;   // union of all cell boxes
    int header_rows = 0;
    int header_cols = 0;
    bool clipped = false;
};

// Deterministic grid layout: column width = max content advance + 2*padding
// (minimum enforced), uniform row heights, merged cells spanning the union
// box. A table wider/taller than the target is re-laid-out at font scale 1,
// then clipped with the flag set.
TableRender layout_render(const TableModel& model, const TableStyle& style, int target_w,
                          int target_h);

// Midpoint of the right edge: (X2, (Y1+Y2)/2).
Point edge_handle(const CellAnnotation& cell);

// Box of the cell directly below under uniform row heights:
// (X1, Y2, X2, 2*Y2-Y1).
Rect corner_fill_target(const CellAnnotation& cell);

struct ClampedRect {
    Rect rect;
    bool clipped = false;
};
ClampedRect corner_fill_target_clamped(const CellAnnotation& cell, int img_w, int img_h);

std::string excel_name(int row, int col);                 // (0,0) -> "A1"
std::pair<int, int> parse_excel_name(const std::string&);  // inverse

// Bundled seed models (headers + content) for generation runs.
const std::vector<TableModel>& seed_tables();

nlohmann::ordered_json table_annotation(const TableRender& render, const std::string& image_ref);

}  // namespace actsynth
