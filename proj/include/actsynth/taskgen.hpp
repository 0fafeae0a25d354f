#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "actsynth/canvas.hpp"
#include "actsynth/dataset.hpp"
#include "actsynth/image_annot.hpp"
#include "actsynth/table.hpp"
#include "actsynth/textpage.hpp"

namespace actsynth {

// One cell of the benchmark task taxonomy: modality x key-point count x
// target type. key_points is 1 (click), 2 (drag) or 0 for N-point draws.
struct DetailedTask {
    Modality modality;
    int key_points = 1;
    std::string_view target_type;
    bool ordered = false;
    bool synthesizable = false;  // the template path can produce it
};

// All 33 benchmark rows; exactly 20 are synthesizable.
const std::vector<DetailedTask>& detailed_task_registry();
const DetailedTask* find_task(Modality m, int key_points, std::string_view target_type);

// A template-generated record plus the regions its key points must hit, for
// self-grounding checks through the rule engine.
struct GeneratedRecord {
    DatasetRecord record;
    std::vector<CorrectRegion> grounding;  // ranked iff `ranked`
    bool ranked = false;
    std::vector<Point> key_points_px;  // pixel-space copies of the trace points
};

struct GenOptions {
    int per_task = 1;          // eligible elements consumed per task
    double point_tol = 8.0;    // half-size of point-target grounding boxes
};

// Externally supplied GUI element, click_point in normalized coordinates.
struct GuiElement {
    int element_id = 0;
    std::string description;
    Point click_point;
    std::string type;  // "icon" or "text"
};

std::vector<GeneratedRecord> template_generate(const CanvasScene& scene,
                                               const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt = {});
std::vector<GeneratedRecord> template_generate(const TableRender& table,
                                               const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt = {});
std::vector<GeneratedRecord> template_generate(const TextPage& page, const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt = {});
std::vector<GeneratedRecord> template_generate(const std::vector<RegionAnnotation>& regions,
                                               int img_w, int img_h, const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt = {});
std::vector<GeneratedRecord> template_generate(const std::vector<GuiElement>& elements, int img_w,
                                               int img_h, const std::string& image_ref,
                                               const DetailedTask& task, Rng& rng,
                                               const GenOptions& opt = {});

// Region-stratified element sampling: the canvas is discretized into a
// grid x grid lattice, cells are drained round-robin, and icon elements are
// preferred within a cell.
std::vector<GuiElement> sample_gui_elements(const std::vector<GuiElement>& all, int k, int grid,
                                            Rng& rng);

// Verbatim per-modality task-generation system prompt. Throws
// std::invalid_argument for modalities without one (Text).
const std::string& system_prompt(Modality m);
const char* system_prompt_id(Modality m);

struct LlmRequest {
    std::string system_prompt_id;
    std::string system_prompt;
    std::string image_ref;
    nlohmann::ordered_json elements_payload;
};

LlmRequest build_llm_request(Modality m, const std::string& image_ref,
                             nlohmann::ordered_json elements_payload);

// Validation context for LLM-produced candidates.
struct SceneContext {
    std::vector<std::string> element_ids;
    double canvas_w = 0, canvas_h = 0;
    CoordinateSpace space = CoordinateSpace::Pixels;
    Modality modality = Modality::Canvas;
    std::vector<Point> element_centers;  // canvas center-quota bookkeeping
};

SceneContext scene_context(const CanvasScene& scene);
SceneContext scene_context(const TableRender& table);

struct RejectedEntry {
    nlohmann::ordered_json entry;
    std::string violation;  // first violation code
};

struct ParsedLlmResult {
    std::vector<DatasetRecord> accepted;
    std::vector<RejectedEntry> rejected;
};

// Extracts the JSON array (fenced or bare), validates every entry against
// the scene, and enforces the per-modality count and center-point quotas.
ParsedLlmResult parse_llm_response(const std::string& text, const SceneContext& ctx,
                                   const std::string& image_ref);

}  // namespace actsynth
