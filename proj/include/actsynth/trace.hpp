#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "actsynth/geometry.hpp"

namespace actsynth {

enum class Verb { Scroll, Typewrite, Hotkey, MoveTo, Click, MouseDown, MouseUp, DragTo, Type };

const char* verb_name(Verb v);
std::optional<Verb> verb_from_name(const std::string& name);

// One pyautogui call. Coordinate arguments are always symbols (x1, y1, ...);
// literal coordinates in a script are a parse error.
struct ActionStatement {
    Verb verb = Verb::Click;
    std::optional<std::string> x_sym;
    std::optional<std::string> y_sym;
    std::optional<int> clicks;           // click
    std::optional<std::string> button;   // click / mouseDown / mouseUp / dragTo
    std::optional<int> scroll_amount;    // scroll (signed)
    std::optional<std::string> text;     // typewrite / type
    std::vector<std::string> keys;       // hotkey
};

enum class ActionClass { ZeroSet, OneSet, TwoSetCombined, NSet };

const char* action_class_name(ActionClass c);

enum class CoordinateSpace { Pixels, Normalized };

const char* coordinate_space_name(CoordinateSpace s);  // "pixels" / "normalized"
std::optional<CoordinateSpace> coordinate_space_from_name(const std::string& s);

struct ActionTrace {
    std::string chain_of_thought;
    std::vector<ActionStatement> script;
    std::vector<std::pair<std::string, double>> coordinate_map;  // insertion-ordered
    std::vector<std::string> used_elements;
    std::string action_type;
};

struct TraceParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedResponse {
    std::string chain_of_thought;
    std::vector<ActionStatement> script;
};

// Accepts the response layout "<chain of thought>\n\n```python\n<code>\n```".
// Exactly one fenced block; one call per non-blank line; comments, imports
// and unknown verbs are rejected.
ParsedResponse parse_trace(const std::string& response_text);

std::string render_statement(const ActionStatement& st);
std::string render_response(const std::string& chain_of_thought,
                            const std::vector<ActionStatement>& script);

// Coordinate symbols in first-use order (each symbol counted once).
std::vector<std::string> script_symbols(const std::vector<ActionStatement>& script);

// 0 symbols -> ZeroSet, 2 -> OneSet, 4 -> TwoSetCombined, >=6 -> NSet.
// Throws TraceParseError on an odd symbol count.
ActionClass classify_action(const std::vector<ActionStatement>& script);

// Anchor position that makes moving_feature coincide with target_feature:
// target + (anchor - feature).
Point derived_translation(const Point& moving_feature, const Point& moving_anchor,
                          const Point& target_feature);

struct Violation {
    std::string code;    // SymbolMismatch, OutOfRange, UnknownElement, ...
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(const std::string& code) const;
};

// Cross-checks a full trace against its scene: symbol/coordinate-map
// equality, element existence, coordinate ranges for the given space,
// coordinate leaks in the chain of thought, and action-type consistency.
ValidationReport validate_trace(const ActionTrace& trace,
                                const std::vector<std::string>& scene_element_ids,
                                double canvas_w, double canvas_h, CoordinateSpace space);

enum class TraceTemplate { Click, MoveDrag, DownMoveUp, ClickType };

struct ClickParams {
    int clicks = 1;
    std::string button = "left";  // rendered only when != default
    std::string type_text;        // ClickType template
};

// Builds a script with fresh symbols x1,y1,... in point order and fills the
// coordinate map and action-type tag. The chain of thought is left empty for
// the caller.
ActionTrace point_to_trace(const std::vector<Point>& points, TraceTemplate tmpl,
                           const ClickParams& params = {});

}  // namespace actsynth
