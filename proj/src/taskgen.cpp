#include "actsynth/taskgen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace actsynth {

using ordered_json = nlohmann::ordered_json;

const std::vector<DetailedTask>& detailed_task_registry() {
    static const std::vector<DetailedTask> kTasks = {
        // GUI
        {Modality::Gui, 1, "icon", false, true},
        {Modality::Gui, 1, "text", false, true},
        {Modality::Gui, 2, "icon", true, true},
        {Modality::Gui, 2, "slide bar", true, false},
        {Modality::Gui, 2, "empty region", true, false},
        {Modality::Gui, 2, "text", true, false},
        // Text
        {Modality::Text, 1, "between text", false, true},
        {Modality::Text, 1, "empty region", false, false},
        {Modality::Text, 2, "select text span", false, true},
        {Modality::Text, 2, "one word", false, true},
        {Modality::Text, 2, "drag text span", true, false},
        // Table
        {Modality::Table, 1, "empty cell", false, true},
        {Modality::Table, 1, "content cell", false, true},
        {Modality::Table, 2, "drag cell", true, false},
        {Modality::Table, 2, "select cells", false, true},
        {Modality::Table, 2, "edge", true, true},
        {Modality::Table, 2, "corner", true, true},
        // Canvas
        {Modality::Canvas, 1, "shape", false, true},
        {Modality::Canvas, 2, "empty region", false, true},
        {Modality::Canvas, 2, "point", true, false},
        {Modality::Canvas, 2, "text", true, true},
        {Modality::Canvas, 2, "shape", true, true},
        {Modality::Canvas, 2, "line/arrow", true, true},
        {Modality::Canvas, 0, "point", true, false},
        {Modality::Canvas, 0, "empty region", true, false},
        // Image
        {Modality::Image, 1, "object", false, true},
        {Modality::Image, 1, "region", false, false},
        {Modality::Image, 2, "image", true, false},
        {Modality::Image, 2, "object", true, true},
        {Modality::Image, 2, "point", true, false},
        {Modality::Image, 2, "region", true, false},
        {Modality::Image, 0, "zig-zag mask", true, true},
        {Modality::Image, 0, "boundary", true, true},
    };
    return kTasks;
}

const DetailedTask* find_task(Modality m, int key_points, std::string_view target_type) {
    for (const DetailedTask& t : detailed_task_registry())
        if (t.modality == m && t.key_points == key_points && t.target_type == target_type)
            return &t;
    return nullptr;
}

namespace {

std::string fmt(std::string tmpl, const std::vector<std::pair<std::string, std::string>>& subs) {
    for (const auto& [key, value] : subs) {
        std::string hole = "{" + key + "}";
        size_t pos;
        while ((pos = tmpl.find(hole)) != std::string::npos) tmpl.replace(pos, hole.size(), value);
    }
    return tmpl;
}

Rect point_box(const Point& p, double tol, double w, double h) {
    return {std::max(0.0, p.x - tol), std::max(0.0, p.y - tol), std::min(w, p.x + tol),
            std::min(h, p.y + tol)};
}

CorrectRegion region(const Rect& r, std::optional<int> rank = std::nullopt) {
    return CorrectRegion{r, rank};
}

GeneratedRecord make_record(Modality modality, CoordinateSpace space, const std::string& image_ref,
                            const std::string& prompt, const std::string& cot,
                            const std::vector<Point>& pts, TraceTemplate tmpl,
                            const std::vector<std::string>& used,
                            std::vector<CorrectRegion> grounding, bool ranked,
                            std::vector<Point> pts_px, const ClickParams& params = {}) {
    ActionTrace trace = point_to_trace(pts, tmpl, params);
    GeneratedRecord out;
    out.record.prompt = prompt;
    out.record.response = render_response(cot, trace.script);
    out.record.coordinate_map = trace.coordinate_map;
    out.record.used_elements = used;
    out.record.action_type = trace.action_type;
    out.record.image_ref = image_ref;
    out.record.modality = modality;
    out.record.coordinate_space = space;
    out.grounding = std::move(grounding);
    out.ranked = ranked;
    out.key_points_px = std::move(pts_px);
    return out;
}

// ---- phrase banks -------------------------------------------------------

const std::vector<std::string>& click_shape_prompts() {
    static const std::vector<std::string> kBank = {
        "Select the {ref}.",
        "Click on the {ref}.",
        "Please click once on the {ref}, and do not touch any other shape.",
        "Left click the {ref} to select it.",
        "I want to edit the {ref}; click it for me.",
    };
    return kBank;
}

const std::vector<std::string>& canvas_select_region_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag a selection box around the {ref} without touching the other shapes.",
        "Rubber-band select only the {ref}.",
        "Hold the mouse and drag to draw a selection rectangle that covers just the {ref}.",
    };
    return kBank;
}

const std::vector<std::string>& canvas_drag_shape_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag the {a} so that its center lands on the center of the {b}.",
        "Move the {a} onto the {b}, centering one on the other.",
        "Pick up the {a} and drop it exactly at the center of the {b}.",
    };
    return kBank;
}

const std::vector<std::string>& canvas_tip_align_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag the {a} until its tip touches the top edge midpoint of the {b}.",
        "Move the {a} so the arrow tip lands on the top-center control point of the {b}.",
    };
    return kBank;
}

const std::vector<std::string>& canvas_connect_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag the free end of the {a} and connect it to the left side of the {b}.",
        "Take the end of the {a} and attach it to the left edge midpoint of the {b}.",
    };
    return kBank;
}

const std::vector<std::string>& canvas_textbox_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag the {ref} to the exact center of the canvas.",
        "Move the {ref} so it sits at the middle of the slide.",
    };
    return kBank;
}

const std::vector<std::string>& table_click_empty_prompts() {
    static const std::vector<std::string> kBank = {
        "Please select cell {name} in the table.",
        "Click the empty cell {name}.",
        "Select {name}.",
        "Put the cell cursor on {name}.",
    };
    return kBank;
}

const std::vector<std::string>& table_click_content_prompts() {
    static const std::vector<std::string> kBank = {
        "Please select the cell that contains \"{content}\" in the table.",
        "Click on the cell whose value is \"{content}\".",
        "Select the \"{content}\" cell.",
    };
    return kBank;
}

const std::vector<std::string>& table_select_cells_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag the mouse to select the two cells containing {a} and {b}.",
        "Select from the \"{a}\" cell through the \"{b}\" cell by dragging.",
        "Highlight the range that starts at \"{a}\" and ends at \"{b}\".",
    };
    return kBank;
}

const std::vector<std::string>& table_edge_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag the right boundary of cell {name} {delta} pixels to the right to widen the column.",
        "Widen the column by pulling the right edge of {name} {delta} px rightward.",
        "Grab the right border of cell {name} and move it {delta} pixels right.",
    };
    return kBank;
}

const std::vector<std::string>& table_corner_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag the lower-right corner of cell {a} down to the lower-right corner of cell {b} to "
        "apply the formula to the rows between.",
        "Pull the fill handle at the bottom-right of {a} down to the bottom-right of {b}.",
    };
    return kBank;
}

const std::vector<std::string>& text_cursor_prompts() {
    static const std::vector<std::string> kBank = {
        "Click once to place the insertion cursor right before \"{word}\".",
        "Set the text cursor immediately before the word \"{word}\".",
        "Click just before \"{word}\" so I can start typing there.",
    };
    return kBank;
}

const std::vector<std::string>& text_span_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag to select the text from \"{first}\" through \"{last}\".",
        "Highlight everything starting at \"{first}\" and ending with \"{last}\".",
        "Select the passage that begins with \"{first}\" and finishes at \"{last}\".",
    };
    return kBank;
}

const std::vector<std::string>& text_word_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag the mouse to select the word \"{word}\".",
        "Double-checking spelling: highlight the word \"{word}\" for me.",
        "Select just the word \"{word}\".",
    };
    return kBank;
}

const std::vector<std::string>& image_click_prompts() {
    static const std::vector<std::string> kBank = {
        "You are using the auto-selection tool; click once on {caption}.",
        "Click on {caption} to pick it.",
        "With the magic select tool active, click {caption}.",
    };
    return kBank;
}

const std::vector<std::string>& image_drag_prompts() {
    static const std::vector<std::string> kBank = {
        "I have cut out {a}; drag it onto {b} to cover it.",
        "Move {a} over {b}.",
        "Drag {a} so it sits on top of {b}.",
    };
    return kBank;
}

const std::vector<std::string>& image_zigzag_prompts() {
    static const std::vector<std::string> kBank = {
        "Now I am using the image erase tool; drag back and forth across {caption} to cover all "
        "of it.",
        "With the eraser selected, scrub over {caption} until the whole region is painted.",
    };
    return kBank;
}

const std::vector<std::string>& image_boundary_prompts() {
    static const std::vector<std::string> kBank = {
        "I have activated the free selection tool; drag the mouse to draw a boundary polygon "
        "around {caption}.",
        "Trace the outline of {caption} with the lasso tool.",
    };
    return kBank;
}

const std::vector<std::string>& gui_click_prompts() {
    static const std::vector<std::string> kBank = {
        "Click on {desc}.",
        "Please click {desc} once.",
        "Activate {desc} with a single left click.",
    };
    return kBank;
}

const std::vector<std::string>& gui_drag_prompts() {
    static const std::vector<std::string> kBank = {
        "Drag {a} onto {b}.",
        "Pick up {a} and drop it on {b}.",
    };
    return kBank;
}

// Digit-free chains of thought, so the coordinate-leak check stays clean.
std::string cot_click(const std::string& what) {
    return "The instruction points at the " + what +
           ". I can locate it in the scene, and its interior center is the safest spot to act "
           "on. A single click there completes the request.";
}

std::string cot_drag(const std::string& from, const std::string& to) {
    return "The request is a drag gesture. I first move the pointer onto " + from +
           ", press, and then release over " + to +
           ". Both endpoints come straight from the annotated geometry, so the drag lands where "
           "it should.";
}

std::string cot_draw(const std::string& what) {
    return "This needs a freehand drag rather than a single click. I press the mouse down at "
           "the first point of " +
           what +
           ", sweep through the intermediate points in order, and release at the last one so "
           "the whole region is covered.";
}

}  // namespace

// ---- canvas -------------------------------------------------------------

std::vector<GeneratedRecord> template_generate(const CanvasScene& scene,
                                               const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt) {
    std::vector<GeneratedRecord> out;
    if (task.modality != Modality::Canvas || !task.synthesizable) return out;
    const double W = scene.params.width, H = scene.params.height;
    const auto& reg = shape_registry();

    auto area_elements = [&]() {
        std::vector<const CanvasElement*> v;
        for (const auto& el : scene.elements)
            if (!reg[size_t(el.kind_index)].line_like) v.push_back(&el);
        return v;
    };

    if (task.key_points == 1 && task.target_type == "shape") {
        auto eligible = area_elements();
        for (int n = 0; n < opt.per_task && !eligible.empty(); ++n) {
            const CanvasElement* el = eligible[size_t(rng.uniform_int(0, int64_t(eligible.size()) - 1))];
            Point p = el->shape.center;
            out.push_back(make_record(
                Modality::Canvas, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(click_shape_prompts()), {{"ref", el->reference}}),
                cot_click(el->reference), {p}, TraceTemplate::Click, {el->id},
                {region(el->shape.bbox)}, false, {p}));
        }
    } else if (task.key_points == 2 && task.target_type == "empty region") {
        for (const auto& el : scene.elements) {
            if (int(out.size()) >= opt.per_task) break;
            double margin = 14.0;
            Rect box{el.shape.bbox.x1 - margin, el.shape.bbox.y1 - margin,
                     el.shape.bbox.x2 + margin, el.shape.bbox.y2 + margin};
            if (box.x1 < 0 || box.y1 < 0 || box.x2 > W || box.y2 > H) continue;
            Point tl{box.x1, box.y1}, br{box.x2, box.y2};
            bool corners_clear = true;
            for (const auto& other : scene.elements) {
                if (other.id == el.id) continue;
                if (point_in_rect(tl, other.shape.bbox) || point_in_rect(br, other.shape.bbox))
                    corners_clear = false;
            }
            if (!corners_clear) continue;
            out.push_back(make_record(
                Modality::Canvas, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(canvas_select_region_prompts()), {{"ref", el.reference}}),
                cot_drag("the empty canvas just outside the target",
                         "the opposite empty corner so the box encloses it"),
                {tl, br}, TraceTemplate::MoveDrag, {el.id},
                {region(point_box(tl, opt.point_tol, W, H)),
                 region(point_box(br, opt.point_tol, W, H))},
                false, {tl, br}));
        }
    } else if (task.key_points == 2 && task.target_type == "shape") {
        auto eligible = area_elements();
        if (eligible.size() >= 2) {
            for (int n = 0; n < opt.per_task; ++n) {
                const CanvasElement* a = eligible[size_t(rng.uniform_int(0, int64_t(eligible.size()) - 1))];
                const CanvasElement* b = a;
                while (b == a) b = eligible[size_t(rng.uniform_int(0, int64_t(eligible.size()) - 1))];
                // tip alignment via the translation identity when a has a tip
                const Point* tip = nullptr;
                for (const auto& [name, p] : a->shape.vertices)
                    if (name == "tip") tip = &p;
                if (tip && rng.bernoulli(0.5)) {
                    Point target_feature{b->shape.center.x, b->shape.bbox.y1};  // top_center
                    Point dest = derived_translation(*tip, a->shape.center, target_feature);
                    if (dest.x >= 0 && dest.y >= 0 && dest.x <= W && dest.y <= H) {
                        Point from = a->shape.center;
                        out.push_back(make_record(
                            Modality::Canvas, CoordinateSpace::Pixels, image_ref,
                            fmt(rng.pick(canvas_tip_align_prompts()),
                                {{"a", a->reference}, {"b", b->reference}}),
                            cot_drag("the " + a->reference, "the spot that aligns its tip"),
                            {from, dest}, TraceTemplate::MoveDrag, {a->id, b->id},
                            {region(a->shape.bbox, 0), region(point_box(dest, opt.point_tol, W, H), 1)},
                            true, {from, dest}));
                        continue;
                    }
                }
                Point from = a->shape.center, to = b->shape.center;
                out.push_back(make_record(
                    Modality::Canvas, CoordinateSpace::Pixels, image_ref,
                    fmt(rng.pick(canvas_drag_shape_prompts()),
                        {{"a", a->reference}, {"b", b->reference}}),
                    cot_drag("the " + a->reference, "the center of the " + b->reference),
                    {from, to}, TraceTemplate::MoveDrag, {a->id, b->id},
                    {region(a->shape.bbox, 0), region(point_box(to, opt.point_tol, W, H), 1)},
                    true, {from, to}));
            }
        }
    } else if (task.key_points == 2 && task.target_type == "line/arrow") {
        const CanvasElement* line = nullptr;
        const CanvasElement* target = nullptr;
        for (const auto& el : scene.elements)
            if (reg[size_t(el.kind_index)].line_like && !el.shape.endpoints.empty()) line = &el;
        auto areas = area_elements();
        if (!areas.empty()) target = areas[size_t(rng.uniform_int(0, int64_t(areas.size()) - 1))];
        if (line && target) {
            Point from = line->shape.endpoints.back().second;  // "end"
            Point to{target->shape.bbox.x1, target->shape.center.y};  // left_center
            out.push_back(make_record(
                Modality::Canvas, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(canvas_connect_prompts()),
                    {{"a", line->reference}, {"b", target->reference}}),
                cot_drag("the endpoint of the " + line->reference,
                         "the left edge midpoint of the " + target->reference),
                {from, to}, TraceTemplate::MoveDrag, {line->id, target->id},
                {region(point_box(from, opt.point_tol, W, H), 0),
                 region(point_box(to, opt.point_tol, W, H), 1)},
                true, {from, to}));
        }
    } else if (task.key_points == 2 && task.target_type == "text") {
        for (const auto& el : scene.elements) {
            if (int(out.size()) >= opt.per_task) break;
            if (reg[size_t(el.kind_index)].category != ShapeCategory::TextBoxes) continue;
            Point from = el.shape.center;
            Point to{W / 2.0, H / 2.0};
            out.push_back(make_record(
                Modality::Canvas, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(canvas_textbox_prompts()), {{"ref", el.reference}}),
                cot_drag("the " + el.reference, "the midpoint of the canvas"), {from, to},
                TraceTemplate::MoveDrag, {el.id},
                {region(el.shape.bbox, 0), region(point_box(to, opt.point_tol, W, H), 1)}, true,
                {from, to}));
        }
    }
    return out;
}

// ---- table --------------------------------------------------------------

std::vector<GeneratedRecord> template_generate(const TableRender& table,
                                               const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt) {
    std::vector<GeneratedRecord> out;
    if (task.modality != Modality::Table || !task.synthesizable) return out;
    const double W = table.image.width, H = table.image.height;

    std::vector<std::string> ids;
    for (const auto& c : table.cells) ids.push_back(c.excel_name);

    std::map<std::string, int> content_count;
    for (const auto& c : table.cells)
        if (!c.content.empty()) content_count[c.content]++;

    auto body_cells = [&]() {
        std::vector<const CellAnnotation*> v;
        for (const auto& c : table.cells)
            if (c.row >= table.header_rows && c.col >= table.header_cols) v.push_back(&c);
        return v;
    };
    auto cell_at = [&](int r, int c) -> const CellAnnotation* {
        for (const auto& cell : table.cells)
            if (cell.row == r && cell.col == c) return &cell;
        return nullptr;
    };

    if (task.key_points == 1 && task.target_type == "empty cell") {
        std::vector<const CellAnnotation*> empties;
        for (const auto* c : body_cells())
            if (c->content.empty()) empties.push_back(c);
        for (int n = 0; n < opt.per_task && !empties.empty(); ++n) {
            const CellAnnotation* c = empties[size_t(rng.uniform_int(0, int64_t(empties.size()) - 1))];
            Point p = c->bbox.center();
            out.push_back(make_record(Modality::Table, CoordinateSpace::Pixels, image_ref,
                                      fmt(rng.pick(table_click_empty_prompts()),
                                          {{"name", c->excel_name}}),
                                      cot_click("empty cell named " + c->excel_name), {p},
                                      TraceTemplate::Click, {c->excel_name}, {region(c->bbox)},
                                      false, {p}));
        }
    } else if (task.key_points == 1 && task.target_type == "content cell") {
        std::vector<const CellAnnotation*> unique_cells;
        for (const auto* c : body_cells())
            if (!c->content.empty() && content_count[c->content] == 1) unique_cells.push_back(c);
        for (int n = 0; n < opt.per_task && !unique_cells.empty(); ++n) {
            const CellAnnotation* c =
                unique_cells[size_t(rng.uniform_int(0, int64_t(unique_cells.size()) - 1))];
            Point p = c->bbox.center();
            out.push_back(make_record(Modality::Table, CoordinateSpace::Pixels, image_ref,
                                      fmt(rng.pick(table_click_content_prompts()),
                                          {{"content", c->content}}),
                                      cot_click("cell holding the requested value"), {p},
                                      TraceTemplate::Click, {c->excel_name}, {region(c->bbox)},
                                      false, {p}));
        }
    } else if (task.key_points == 2 && task.target_type == "select cells") {
        std::vector<const CellAnnotation*> unique_cells;
        for (const auto* c : body_cells())
            if (!c->content.empty() && content_count[c->content] == 1) unique_cells.push_back(c);
        if (unique_cells.size() >= 2) {
            const CellAnnotation* a =
                unique_cells[size_t(rng.uniform_int(0, int64_t(unique_cells.size()) - 1))];
            const CellAnnotation* b = a;
            while (b == a)
                b = unique_cells[size_t(rng.uniform_int(0, int64_t(unique_cells.size()) - 1))];
            Point pa = a->bbox.center(), pb = b->bbox.center();
            out.push_back(make_record(
                Modality::Table, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(table_select_cells_prompts()), {{"a", a->content}, {"b", b->content}}),
                cot_drag("the first named cell", "the second named cell"), {pa, pb},
                TraceTemplate::MoveDrag, {a->excel_name, b->excel_name},
                {region(a->bbox), region(b->bbox)}, false, {pa, pb}));
        }
    } else if (task.key_points == 2 && task.target_type == "edge") {
        auto cells = body_cells();
        for (int n = 0; n < opt.per_task && !cells.empty(); ++n) {
            const CellAnnotation* c = cells[size_t(rng.uniform_int(0, int64_t(cells.size()) - 1))];
            int delta = int(rng.uniform_int(2, 12)) * 5;
            Point from = edge_handle(*c);
            Point to{from.x + delta, from.y};
            if (to.x > W) continue;
            out.push_back(make_record(
                Modality::Table, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(table_edge_prompts()),
                    {{"name", c->excel_name}, {"delta", std::to_string(delta)}}),
                cot_drag("the midpoint of the cell's right border",
                         "a spot the requested distance to the right"),
                {from, to}, TraceTemplate::MoveDrag, {c->excel_name},
                {region(point_box(from, opt.point_tol, W, H), 0),
                 region(point_box(to, opt.point_tol, W, H), 1)},
                true, {from, to}));
        }
    } else if (task.key_points == 2 && task.target_type == "corner") {
        auto cells = body_cells();
        for (int n = 0; n < opt.per_task && !cells.empty(); ++n) {
            const CellAnnotation* a = cells[size_t(rng.uniform_int(0, int64_t(cells.size()) - 1))];
            int k = int(rng.uniform_int(1, 3));
            // stack the below-cell formula k times
            CellAnnotation probe = *a;
            bool ok = true;
            for (int step = 0; step < k && ok; ++step) {
                Rect next = corner_fill_target(probe);
                if (next.y2 > H) ok = false;
                probe.bbox = next;
            }
            const CellAnnotation* b = ok ? cell_at(a->row + k, a->col) : nullptr;
            if (!b || std::abs(b->bbox.y2 - probe.bbox.y2) > 0.5 ||
                std::abs(b->bbox.x2 - probe.bbox.x2) > 0.5)
                continue;  // merged rows below break the uniform-height formula
            Point from{a->bbox.x2, a->bbox.y2};
            Point to{b->bbox.x2, b->bbox.y2};
            out.push_back(make_record(
                Modality::Table, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(table_corner_prompts()),
                    {{"a", a->excel_name}, {"b", b->excel_name}}),
                cot_drag("the fill handle at the corner of the anchor cell",
                         "the matching corner of the destination cell"),
                {from, to}, TraceTemplate::MoveDrag, {a->excel_name, b->excel_name},
                {region(point_box(from, opt.point_tol, W, H), 0),
                 region(point_box(to, opt.point_tol, W, H), 1)},
                true, {from, to}));
        }
    }
    return out;
}

// ---- text ---------------------------------------------------------------

namespace {

struct WordSpan {
    std::string word;
    size_t start, end;
};

std::vector<WordSpan> page_words(const TextPage& page, size_t min_len) {
    std::vector<WordSpan> out;
    const std::string text = page.text();
    size_t i = 0;
    while (i < text.size()) {
        if (std::isalpha(uint8_t(text[i]))) {
            size_t j = i;
            while (j < text.size() && std::isalpha(uint8_t(text[j]))) ++j;
            if (j - i >= min_len) out.push_back({text.substr(i, j - i), i, j});
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        ++pos;
    }
    return n;
}

}  // namespace

std::vector<GeneratedRecord> template_generate(const TextPage& page, const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt) {
    std::vector<GeneratedRecord> out;
    if (task.modality != Modality::Text || !task.synthesizable) return out;
    const double W = page.page_w, H = page.page_h;
    const std::string text = page.text();
    auto words = page_words(page, 3);
    std::vector<WordSpan> unique_words;
    for (const auto& w : words)
        if (count_occurrences(text, w.word) == 1) unique_words.push_back(w);

    auto region_center = [](const CorrectRegion& r) { return std::get<Rect>(r.shape).center(); };

    if (task.key_points == 1 && task.target_type == "between text") {
        for (int n = 0; n < opt.per_task && !unique_words.empty(); ++n) {
            const WordSpan& w =
                unique_words[size_t(rng.uniform_int(0, int64_t(unique_words.size()) - 1))];
            CorrectRegion target = cursor_target(page, w.start);
            Point p = region_center(target);
            out.push_back(make_record(Modality::Text, CoordinateSpace::Pixels, image_ref,
                                      fmt(rng.pick(text_cursor_prompts()), {{"word", w.word}}),
                                      cot_click("gap just before the quoted word"), {p},
                                      TraceTemplate::Click, {}, {target}, false, {p}));
        }
    } else if (task.key_points == 2 && task.target_type == "one word") {
        std::vector<WordSpan> candidates = unique_words;
        // ambiguous words are allowed only with a line-based hint
        std::map<std::string, std::vector<const WordSpan*>> by_word;
        for (const auto& w : words) by_word[w.word].push_back(&w);
        for (int n = 0; n < opt.per_task; ++n) {
            std::string hint;
            const WordSpan* chosen = nullptr;
            if (!candidates.empty()) {
                chosen = &candidates[size_t(rng.uniform_int(0, int64_t(candidates.size()) - 1))];
            } else {
                for (const auto& [word, spans] : by_word) {
                    if (spans.size() < 2) continue;
                    int line_a = page.glyphs[spans[0]->start].line;
                    int line_b = page.glyphs[spans[1]->start].line;
                    if (line_a != line_b) {
                        chosen = spans[0];
                        hint = " (the one on the first line it appears in)";
                        break;
                    }
                }
            }
            if (!chosen) break;  // hint-less ambiguous spans are refused
            auto [ra, rb] = span_drag_target(page, SpanTarget{chosen->start, chosen->end});
            Point pa = region_center(ra), pb = region_center(rb);
            out.push_back(make_record(
                Modality::Text, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(text_word_prompts()), {{"word", chosen->word}}) + hint,
                cot_drag("the leading edge of the word", "its trailing edge"), {pa, pb},
                TraceTemplate::MoveDrag, {}, {ra, rb}, false, {pa, pb}));
        }
    } else if (task.key_points == 2 && task.target_type == "select text span") {
        if (unique_words.size() >= 2) {
            for (int n = 0; n < opt.per_task; ++n) {
                size_t ia = size_t(rng.uniform_int(0, int64_t(unique_words.size()) - 1));
                size_t ib = size_t(rng.uniform_int(0, int64_t(unique_words.size()) - 1));
                if (ia == ib) continue;
                if (unique_words[ia].start > unique_words[ib].start) std::swap(ia, ib);
                SpanTarget span{unique_words[ia].start, unique_words[ib].end,
                                SpanTarget::Kind::LongSpan, ""};
                if (span.end - span.start < 12) continue;
                auto [ra, rb] = span_drag_target(page, span);
                Point pa = region_center(ra), pb = region_center(rb);
                out.push_back(make_record(
                    Modality::Text, CoordinateSpace::Pixels, image_ref,
                    fmt(rng.pick(text_span_prompts()),
                        {{"first", unique_words[ia].word}, {"last", unique_words[ib].word}}),
                    cot_drag("the start of the requested passage", "its end"), {pa, pb},
                    TraceTemplate::MoveDrag, {}, {ra, rb}, false, {pa, pb}));
            }
        }
    }
    (void)W;
    (void)H;
    return out;
}

// ---- image --------------------------------------------------------------

std::vector<GeneratedRecord> template_generate(const std::vector<RegionAnnotation>& regions,
                                               int img_w, int img_h, const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt) {
    std::vector<GeneratedRecord> out;
    if (task.modality != Modality::Image || !task.synthesizable || regions.empty()) return out;
    const double W = img_w, H = img_h;

    auto pick_region = [&]() -> const RegionAnnotation& {
        return regions[size_t(rng.uniform_int(0, int64_t(regions.size()) - 1))];
    };

    if (task.key_points == 1 && task.target_type == "object") {
        for (int n = 0; n < opt.per_task; ++n) {
            const RegionAnnotation& r = pick_region();
            Point p = r.center;
            out.push_back(make_record(Modality::Image, CoordinateSpace::Pixels, image_ref,
                                      fmt(rng.pick(image_click_prompts()), {{"caption", r.caption}}),
                                      cot_click("described region"), {p}, TraceTemplate::Click,
                                      {r.id}, {region(r.bbox)}, false, {p}));
        }
    } else if (task.key_points == 2 && task.target_type == "object") {
        if (regions.size() >= 2) {
            const RegionAnnotation& a = pick_region();
            const RegionAnnotation* b = &a;
            while (b == &a) b = &pick_region();
            Point pa = a.center, pb = b->center;
            out.push_back(make_record(
                Modality::Image, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(image_drag_prompts()), {{"a", a.caption}, {"b", b->caption}}),
                cot_drag(a.caption, b->caption), {pa, pb}, TraceTemplate::MoveDrag,
                {a.id, b->id},
                {region(a.bbox, 0), region(point_box(pb, opt.point_tol, W, H), 1)}, true,
                {pa, pb}));
        }
    } else if (task.key_points == 0 &&
               (task.target_type == "zig-zag mask" || task.target_type == "boundary")) {
        bool zigzag = task.target_type == "zig-zag mask";
        for (int n = 0; n < opt.per_task; ++n) {
            const RegionAnnotation& r = pick_region();
            if (r.boundary.vertices.size() < 3) continue;
            std::vector<Point> pts =
                zigzag ? zigzag_trail(r.boundary.vertices) : r.boundary.vertices;
            std::vector<CorrectRegion> grounding;
            for (size_t i = 0; i < pts.size(); ++i)
                grounding.push_back(region(point_box(pts[i], opt.point_tol, W, H), int(i)));
            out.push_back(make_record(
                Modality::Image, CoordinateSpace::Pixels, image_ref,
                fmt(rng.pick(zigzag ? image_zigzag_prompts() : image_boundary_prompts()),
                    {{"caption", r.caption}}),
                cot_draw(r.caption), pts, TraceTemplate::DownMoveUp, {r.id},
                std::move(grounding), true, pts));
        }
    }
    return out;
}

// ---- gui ----------------------------------------------------------------

std::vector<GeneratedRecord> template_generate(const std::vector<GuiElement>& elements, int img_w,
                                               int img_h, const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt) {
    std::vector<GeneratedRecord> out;
    if (task.modality != Modality::Gui || !task.synthesizable || elements.empty()) return out;
    const double W = img_w, H = img_h;
    auto px = [&](const Point& norm) { return Point{norm.x * W, norm.y * H}; };

    auto of_type = [&](const std::string& type) {
        std::vector<const GuiElement*> v;
        for (const auto& e : elements)
            if (e.type == type) v.push_back(&e);
        return v;
    };

    if (task.key_points == 1 && (task.target_type == "icon" || task.target_type == "text")) {
        auto eligible = of_type(std::string(task.target_type));
        for (int n = 0; n < opt.per_task && !eligible.empty(); ++n) {
            const GuiElement* e = eligible[size_t(rng.uniform_int(0, int64_t(eligible.size()) - 1))];
            Point p_px = px(e->click_point);
            out.push_back(make_record(
                Modality::Gui, CoordinateSpace::Normalized, image_ref,
                fmt(rng.pick(gui_click_prompts()), {{"desc", e->description}}),
                cot_click("described element"), {e->click_point}, TraceTemplate::Click,
                {std::to_string(e->element_id)}, {region(point_box(p_px, 12.0, W, H))}, false,
                {p_px}));
        }
    } else if (task.key_points == 2 && task.target_type == "icon") {
        auto icons = of_type("icon");
        if (icons.size() >= 2) {
            const GuiElement* a = icons[size_t(rng.uniform_int(0, int64_t(icons.size()) - 1))];
            const GuiElement* b = a;
            while (b == a) b = icons[size_t(rng.uniform_int(0, int64_t(icons.size()) - 1))];
            Point pa = px(a->click_point), pb = px(b->click_point);
            out.push_back(make_record(
                Modality::Gui, CoordinateSpace::Normalized, image_ref,
                fmt(rng.pick(gui_drag_prompts()), {{"a", a->description}, {"b", b->description}}),
                cot_drag(a->description, b->description), {a->click_point, b->click_point},
                TraceTemplate::MoveDrag,
                {std::to_string(a->element_id), std::to_string(b->element_id)},
                {region(point_box(pa, 12.0, W, H), 0), region(point_box(pb, 12.0, W, H), 1)},
                true, {pa, pb}));
        }
    }
    return out;
}

std::vector<GuiElement> sample_gui_elements(const std::vector<GuiElement>& all, int k, int grid,
                                            Rng& rng) {
    std::vector<std::vector<const GuiElement*>> cells(size_t(grid) * grid);
    for (const auto& e : all) {
        int cx = std::clamp(int(e.click_point.x * grid), 0, grid - 1);
        int cy = std::clamp(int(e.click_point.y * grid), 0, grid - 1);
        cells[size_t(cy) * grid + cx].push_back(&e);
    }
    for (auto& cell : cells) {
        // icons first, then stable order; draining a cell prefers icons
        std::stable_sort(cell.begin(), cell.end(), [](const GuiElement* a, const GuiElement* b) {
            return (a->type == "icon") > (b->type == "icon");
        });
    }
    std::vector<int> order;
    for (int i = 0; i < grid * grid; ++i) order.push_back(i);
    rng.shuffle(order);
    std::vector<GuiElement> out;
    size_t round = 0;
    while (int(out.size()) < k) {
        bool any = false;
        for (int idx : order) {
            auto& cell = cells[size_t(idx)];
            if (round < cell.size()) {
                out.push_back(*cell[round]);
                any = true;
                if (int(out.size()) >= k) break;
            }
        }
        if (!any) break;
        ++round;
    }
    return out;
}

// ---- LLM contracts ------------------------------------------------------

namespace prompt_data {
extern const char* kGuiPrompt;
extern const char* kTablePrompt;
extern const char* kCanvasPrompt;
extern const char* kImagePrompt;
}  // namespace prompt_data

const std::string& system_prompt(Modality m) {
    static const std::string gui = prompt_data::kGuiPrompt;
    static const std::string table = prompt_data::kTablePrompt;
    static const std::string canvas = prompt_data::kCanvasPrompt;
    static const std::string image = prompt_data::kImagePrompt;
    switch (m) {
        case Modality::Gui: return gui;
        case Modality::Table: return table;
        case Modality::Canvas: return canvas;
        case Modality::Image: return image;
        case Modality::Text: break;
    }
    throw std::invalid_argument(std::string("no task-generation system prompt registered for ") +
                                modality_name(m));
}

const char* system_prompt_id(Modality m) {
    switch (m) {
        case Modality::Gui: return "gui-v1";
        case Modality::Table: return "table-v1";
        case Modality::Canvas: return "canvas-v1";
        case Modality::Image: return "image-v1";
        case Modality::Text: break;
    }
    throw std::invalid_argument("no prompt id for Text");
}

LlmRequest build_llm_request(Modality m, const std::string& image_ref,
                             ordered_json elements_payload) {
    LlmRequest req;
    req.system_prompt_id = system_prompt_id(m);
    req.system_prompt = system_prompt(m);
    req.image_ref = image_ref;
    req.elements_payload = std::move(elements_payload);
    return req;
}

SceneContext scene_context(const CanvasScene& scene) {
    SceneContext ctx;
    ctx.modality = Modality::Canvas;
    ctx.canvas_w = scene.params.width;
    ctx.canvas_h = scene.params.height;
    ctx.space = CoordinateSpace::Pixels;
    for (const auto& el : scene.elements) {
        ctx.element_ids.push_back(el.id);
        ctx.element_centers.push_back(el.shape.center);
    }
    return ctx;
}

SceneContext scene_context(const TableRender& table) {
    SceneContext ctx;
    ctx.modality = Modality::Table;
    ctx.canvas_w = table.image.width;
    ctx.canvas_h = table.image.height;
    ctx.space = CoordinateSpace::Pixels;
    for (const auto& c : table.cells) ctx.element_ids.push_back(c.excel_name);
    return ctx;
}

namespace {

std::optional<ordered_json> extract_json_array(const std::string& text) {
    // fenced ```json block first, then the outermost [...] slice
    size_t fence = text.find("```json");
    if (fence == std::string::npos) fence = text.find("```");
    if (fence != std::string::npos) {
        size_t start = text.find('\n', fence);
        size_t close = start == std::string::npos ? std::string::npos : text.find("```", start);
        if (start != std::string::npos && close != std::string::npos) {
            try {
                auto j = ordered_json::parse(text.substr(start, close - start));
                if (j.is_array()) return j;
            } catch (...) {}
        }
    }
    size_t lb = text.find('[');
    size_t rb = text.rfind(']');
    if (lb != std::string::npos && rb != std::string::npos && rb > lb) {
        try {
            auto j = ordered_json::parse(text.substr(lb, rb - lb + 1));
            if (j.is_array()) return j;
        } catch (...) {}
    }
    return std::nullopt;
}

int max_accepted_for(Modality m) {
    switch (m) {
        case Modality::Table: return 4;
        default: return 10;
    }
}

// Points named by the script, in statement order, resolved via the map.
std::vector<Point> trace_points(const ActionTrace& trace) {
    std::map<std::string, double> lookup(trace.coordinate_map.begin(), trace.coordinate_map.end());
    std::vector<Point> pts;
    for (const auto& st : trace.script) {
        if (!st.x_sym || !st.y_sym) continue;
        auto ix = lookup.find(*st.x_sym);
        auto iy = lookup.find(*st.y_sym);
        if (ix == lookup.end() || iy == lookup.end()) continue;
        pts.push_back({ix->second, iy->second});
    }
    return pts;
}

}  // namespace

ParsedLlmResult parse_llm_response(const std::string& text, const SceneContext& ctx,
                                   const std::string& image_ref) {
    ParsedLlmResult result;
    auto array = extract_json_array(text);
    if (!array) {
        result.rejected.push_back({ordered_json{{"raw", text}}, "ParseError"});
        return result;
    }

    int center_quota = ctx.modality == Modality::Canvas ? 3 : -1;
    int center_used = 0;
    int cap = max_accepted_for(ctx.modality);

    for (const auto& entry : *array) {
        if (!entry.is_object() || !entry.contains("prompt") || !entry.contains("response")) {
            result.rejected.push_back({entry, "ParseError"});
            continue;
        }
        ActionTrace trace;
        trace.chain_of_thought.clear();
        try {
            ParsedResponse parsed = parse_trace(entry.at("response").get<std::string>());
            trace.chain_of_thought = parsed.chain_of_thought;
            trace.script = std::move(parsed.script);
        } catch (const std::exception&) {
            result.rejected.push_back({entry, "ParseError"});
            continue;
        }
        if (entry.contains("coordinate_map") && entry.at("coordinate_map").is_object()) {
            for (const auto& [k, v] : entry.at("coordinate_map").items()) {
                if (!v.is_number()) {
                    trace.coordinate_map.clear();
                    break;
                }
                trace.coordinate_map.emplace_back(k, v.get<double>());
            }
        }
        if (entry.contains("used_elements") && entry.at("used_elements").is_array()) {
            for (const auto& je : entry.at("used_elements")) {
                if (je.is_string()) trace.used_elements.push_back(je.get<std::string>());
                else if (je.is_number_integer())
                    trace.used_elements.push_back(std::to_string(je.get<long>()));
            }
        }
        // the output contract allows a missing tag; derive one from the script
        if (entry.contains("action-type"))
            trace.action_type = entry.at("action-type").get<std::string>();
        else if (entry.contains("action-types"))
            trace.action_type = entry.at("action-types").get<std::string>();
        if (trace.action_type.empty() && trace.script.size() == 1)
            trace.action_type = verb_name(trace.script[0].verb);

        ValidationReport report =
            validate_trace(trace, ctx.element_ids, ctx.canvas_w, ctx.canvas_h, ctx.space);
        if (!report.ok()) {
            result.rejected.push_back({entry, report.violations.front().code});
            continue;
        }
        if (int(result.accepted.size()) >= cap) {
            result.rejected.push_back({entry, "CountExceeded"});
            continue;
        }
        if (center_quota >= 0) {
            bool uses_center = false;
            for (const Point& p : trace_points(trace))
                for (const Point& c : ctx.element_centers)
                    if (std::abs(p.x - c.x) <= 0.5 && std::abs(p.y - c.y) <= 0.5) uses_center = true;
            if (uses_center && ++center_used > center_quota) {
                result.rejected.push_back({entry, "CenterQuota"});
                continue;
            }
        }
        DatasetRecord rec;
        rec.prompt = entry.at("prompt").get<std::string>();
        rec.response = entry.at("response").get<std::string>();
        rec.coordinate_map = trace.coordinate_map;
        rec.used_elements = trace.used_elements;
        rec.action_type = trace.action_type;
        rec.image_ref = image_ref;
        rec.modality = ctx.modality;
        rec.coordinate_space = ctx.space;
        result.accepted.push_back(std::move(rec));
    }
    return result;
}

}  // namespace actsynth
