#include "actsynth/trace.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

namespace actsynth {

const char* verb_name(Verb v) {
    switch (v) {
        case Verb::Scroll: return "scroll";
        case Verb::Typewrite: return "typewrite";
        case Verb::Hotkey: return "hotkey";
        case Verb::MoveTo: return "moveTo";
        case Verb::Click: return "click";
        case Verb::MouseDown: return "mouseDown";
        case Verb::MouseUp: return "mouseUp";
        case Verb::DragTo: return "dragTo";
        case Verb::Type: return "type";
    }
    return "?";
}

std::optional<Verb> verb_from_name(const std::string& name) {
    static const std::map<std::string, Verb> kVerbs = {
        {"scroll", Verb::Scroll},   {"typewrite", Verb::Typewrite}, {"hotkey", Verb::Hotkey},
        {"moveTo", Verb::MoveTo},   {"click", Verb::Click},         {"mouseDown", Verb::MouseDown},
        {"mouseUp", Verb::MouseUp}, {"dragTo", Verb::DragTo},       {"type", Verb::Type}};
    auto it = kVerbs.find(name);
    if (it == kVerbs.end()) return std::nullopt;
    return it->second;
}

const char* action_class_name(ActionClass c) {
    switch (c) {
        case ActionClass::ZeroSet: return "ZeroSet";
        case ActionClass::OneSet: return "OneSet";
        case ActionClass::TwoSetCombined: return "TwoSetCombined";
        case ActionClass::NSet: return "NSet";
    }
    return "?";
}

const char* coordinate_space_name(CoordinateSpace s) {
    return s == CoordinateSpace::Pixels ? "pixels" : "normalized";
}

std::optional<CoordinateSpace> coordinate_space_from_name(const std::string& s) {
    if (s == "pixels") return CoordinateSpace::Pixels;
    if (s == "normalized") return CoordinateSpace::Normalized;
    return std::nullopt;
}

namespace {

struct RawArg {
    std::string name;   // empty for positional
    std::string value;  // raw token
};

bool is_symbol(const std::string& v) {
    if (v.empty() || !(std::isalpha(uint8_t(v[0])) || v[0] == '_')) return false;
    for (char c : v)
        if (!(std::isalnum(uint8_t(c)) || c == '_')) return false;
    return true;
}

bool is_int_literal(const std::string& v) {
    if (v.empty()) return false;
    size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
        if (!std::isdigit(uint8_t(v[i]))) return false;
    return true;
}

bool is_quoted(const std::string& v) {
    return v.size() >= 2 && ((v.front() == '\'' && v.back() == '\'') ||
                             (v.front() == '"' && v.back() == '"'));
}

std::string unquote(const std::string& v) { return v.substr(1, v.size() - 2); }

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<RawArg> split_args(const std::string& body, const std::string& line) {
    std::vector<RawArg> out;
    std::string cur;
    char quote = 0;
    auto flush = [&]() {
        std::string t = trim(cur);
        cur.clear();
        if (t.empty()) return;
        RawArg a;
        size_t eq = std::string::npos;
        char q = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            char c = t[i];
            if (q) {
                if (c == q) q = 0;
            } else if (c == '\'' || c == '"') {
                q = c;
            } else if (c == '=' && eq == std::string::npos) {
                eq = i;
                break;
            }
        }
        if (eq != std::string::npos) {
            a.name = trim(t.substr(0, eq));
            a.value = trim(t.substr(eq + 1));
        } else {
            a.value = t;
        }
        out.push_back(std::move(a));
    };
    for (char c : body) {
        if (quote) {
            cur.push_back(c);
            if (c == quote) quote = 0;
        } else if (c == '\'' || c == '"') {
            quote = c;
            cur.push_back(c);
        } else if (c == ',') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    if (quote) throw TraceParseError("unterminated string literal: " + line);
    flush();
    return out;
}

std::string coord_symbol(const RawArg& a, const std::string& line) {
    if (is_symbol(a.value)) return a.value;
    throw TraceParseError("coordinate argument must be a symbol, got '" + a.value + "': " + line);
}

ActionStatement parse_statement(const std::string& line) {
    static const std::regex kCall(R"(^pyautogui\.([A-Za-z_][A-Za-z0-9_]*)\((.*)\)$)");
    std::smatch m;
    std::string t = trim(line);
    if (!std::regex_match(t, m, kCall))
        throw TraceParseError("not a pyautogui call: " + line);
    auto verb = verb_from_name(m[1].str());
    if (!verb) throw TraceParseError("unknown verb '" + m[1].str() + "': " + line);
    std::vector<RawArg> args = split_args(m[2].str(), line);

    ActionStatement st;
    st.verb = *verb;
    auto named = [&](const char* name) -> const RawArg* {
        for (const auto& a : args)
            if (a.name == name) return &a;
        return nullptr;
    };
    auto reject_unknown = [&](std::initializer_list<const char*> allowed) {
        for (const auto& a : args) {
            if (a.name.empty()) continue;
            bool ok = false;
            for (const char* n : allowed)
                if (a.name == n) ok = true;
            if (!ok) throw TraceParseError("unexpected argument '" + a.name + "': " + line);
        }
    };

    switch (st.verb) {
        case Verb::Scroll: {
            if (args.size() != 1 || !args[0].name.empty() || !is_int_literal(args[0].value))
                throw TraceParseError("scroll takes one signed integer: " + line);
            st.scroll_amount = std::stoi(args[0].value);
            break;
        }
        case Verb::Typewrite:
        case Verb::Type: {
            if (args.size() != 1 || !args[0].name.empty() || !is_quoted(args[0].value))
                throw TraceParseError("text verb takes one quoted string: " + line);
            st.text = unquote(args[0].value);
            break;
        }
        case Verb::Hotkey: {
            if (args.empty()) throw TraceParseError("hotkey needs at least one key: " + line);
            for (const auto& a : args) {
                if (!a.name.empty() || !is_quoted(a.value))
                    throw TraceParseError("hotkey keys are quoted strings: " + line);
                st.keys.push_back(unquote(a.value));
            }
            break;
        }
        case Verb::MoveTo:
        case Verb::DragTo:
        case Verb::MouseDown:
        case Verb::Click: {
            reject_unknown({"x", "y", "clicks", "button"});
            const RawArg* ax = named("x");
            const RawArg* ay = named("y");
            if (!ax || !ay) throw TraceParseError("x= and y= required: " + line);
            st.x_sym = coord_symbol(*ax, line);
            st.y_sym = coord_symbol(*ay, line);
            if (const RawArg* ac = named("clicks")) {
                if (st.verb != Verb::Click || !is_int_literal(ac->value))
                    throw TraceParseError("clicks= only valid as click integer: " + line);
                st.clicks = std::stoi(ac->value);
            }
            if (const RawArg* ab = named("button")) {
                if (st.verb == Verb::MoveTo || !is_quoted(ab->value))
                    throw TraceParseError("button= must be a quoted string: " + line);
                st.button = unquote(ab->value);
            }
            break;
        }
        case Verb::MouseUp: {
            reject_unknown({"x", "y", "button"});
            const RawArg* ax = named("x");
            const RawArg* ay = named("y");
            if (bool(ax) != bool(ay)) throw TraceParseError("mouseUp needs both x and y or neither: " + line);
            if (ax) {
                st.x_sym = coord_symbol(*ax, line);
                st.y_sym = coord_symbol(*ay, line);
            }
            if (const RawArg* ab = named("button")) {
                if (!is_quoted(ab->value)) throw TraceParseError("button= must be quoted: " + line);
                st.button = unquote(ab->value);
            }
            break;
        }
    }
    if (st.button && *st.button != "left" && *st.button != "right" && *st.button != "middle")
        throw TraceParseError("button must be left/right/middle: " + line);
    return st;
}

}  // namespace

ParsedResponse parse_trace(const std::string& text) {
    size_t open = text.find("```");
    if (open == std::string::npos) throw TraceParseError("no fenced code block");
    size_t body_start = text.find('\n', open);
    if (body_start == std::string::npos) throw TraceParseError("malformed fence");
    std::string fence_tag = trim(text.substr(open + 3, body_start - open - 3));
    if (!fence_tag.empty() && fence_tag != "python")
        throw TraceParseError("fence must be plain or python, got '" + fence_tag + "'");
    size_t close = text.find("```", body_start);
    if (close == std::string::npos) throw TraceParseError("unterminated code block");
    if (text.find("```", close + 3) != std::string::npos)
        throw TraceParseError("multiple code blocks");

    ParsedResponse out;
    out.chain_of_thought = trim(text.substr(0, open));
    std::string code = text.substr(body_start + 1, close - body_start - 1);
    std::istringstream lines(code);
    std::string line;
    while (std::getline(lines, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') throw TraceParseError("comments are not allowed: " + t);
        if (t.rfind("import", 0) == 0 || t.rfind("from ", 0) == 0)
            throw TraceParseError("imports are not allowed: " + t);
        out.script.push_back(parse_statement(t));
    }
    if (out.script.empty()) throw TraceParseError("empty script");
    return out;
}

std::string render_statement(const ActionStatement& st) {
    std::ostringstream os;
    os << "pyautogui." << verb_name(st.verb) << "(";
    bool first = true;
    auto sep = [&]() {
        if (!first) os << ", ";
        first = false;
    };
    switch (st.verb) {
        case Verb::Scroll:
            sep();
            os << st.scroll_amount.value_or(0);
            break;
        case Verb::Typewrite:
        case Verb::Type:
            sep();
            os << "'" << st.text.value_or("") << "'";
            break;
        case Verb::Hotkey:
            for (const auto& k : st.keys) {
                sep();
                os << "'" << k << "'";
            }
            break;
        default:
            if (st.x_sym) {
                sep();
                os << "x=" << *st.x_sym;
                sep();
                os << "y=" << *st.y_sym;
            }
            if (st.clicks) {
                sep();
                os << "clicks=" << *st.clicks;
            }
            if (st.button) {
                sep();
                os << "button='" << *st.button << "'";
            }
            break;
    }
    os << ")";
    return os.str();
}

std::string render_response(const std::string& chain_of_thought,
                            const std::vector<ActionStatement>& script) {
    std::ostringstream os;
    os << chain_of_thought << "\n\n```python\n";
    for (const auto& st : script) os << render_statement(st) << "\n";
    os << "```";
    return os.str();
}

std::vector<std::string> script_symbols(const std::vector<ActionStatement>& script) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& st : script) {
        for (const auto& sym : {st.x_sym, st.y_sym}) {
            if (sym && seen.insert(*sym).second) out.push_back(*sym);
        }
    }
    return out;
}

ActionClass classify_action(const std::vector<ActionStatement>& script) {
    size_t n = script_symbols(script).size();
    if (n % 2 != 0) throw TraceParseError("odd coordinate symbol count: " + std::to_string(n));
    if (n == 0) return ActionClass::ZeroSet;
    if (n == 2) return ActionClass::OneSet;
    if (n == 4) return ActionClass::TwoSetCombined;
    return ActionClass::NSet;
}

Point derived_translation(const Point& moving_feature, const Point& moving_anchor,
                          const Point& target_feature) {
    return {target_feature.x + moving_anchor.x - moving_feature.x,
            target_feature.y + moving_anchor.y - moving_feature.y};
}

bool ValidationReport::has(const std::string& code) const {
    for (const auto& v : violations)
        if (v.code == code) return true;
    return false;
}

namespace {

// Expected class implied by an action-type tag, independent of the script.
std::optional<ActionClass> tag_implied_class(const std::string& tag) {
    if (tag.find("NxmoveTo") != std::string::npos) return ActionClass::NSet;
    std::string body = tag;
    if (body.rfind("combined:", 0) == 0) body = body.substr(9);
    // count coordinate pairs contributed by verbs named in the tag
    static const std::pair<const char*, int> kContrib[] = {
        {"moveTo", 1}, {"dragTo", 1}, {"mouseDown", 1}, {"click", 1},
        {"mouseUp", 0}, {"scroll", 0}, {"typewrite", 0}, {"hotkey", 0}, {"type", 0}};
    int pairs = 0;
    bool any = false;
    size_t pos = 0;
    std::string word;
    auto flush_word = [&]() {
        if (word.empty()) return;
        for (const auto& [name, c] : kContrib) {
            if (word == name) {
                pairs += c;
                any = true;
            }
        }
        word.clear();
    };
    for (pos = 0; pos < body.size(); ++pos) {
        char c = body[pos];
        if (std::isalnum(uint8_t(c)) || c == '_')
            word.push_back(c);
        else
            flush_word();
    }
    flush_word();
    if (!any) return std::nullopt;
    if (pairs == 0) return ActionClass::ZeroSet;
    if (pairs == 1) return ActionClass::OneSet;
    if (pairs == 2) return ActionClass::TwoSetCombined;
    return ActionClass::NSet;
}

bool chain_of_thought_leaks(const std::string& cot) {
    static const std::regex kPair(R"(\(\s*-?\d+(\.\d+)?\s*,\s*-?\d+(\.\d+)?\s*\))");
    static const std::regex kAxis(R"([xXyY]\s*[=:]?\s*-?\d)");
    return std::regex_search(cot, kPair) || std::regex_search(cot, kAxis);
}

}  // namespace

ValidationReport validate_trace(const ActionTrace& trace,
                                const std::vector<std::string>& scene_element_ids,
                                double canvas_w, double canvas_h, CoordinateSpace space) {
    ValidationReport rep;
    if (trace.script.empty()) {
        rep.violations.push_back({"EmptyScript", "trace has no statements"});
        return rep;
    }

    std::vector<std::string> syms = script_symbols(trace.script);
    std::set<std::string> sym_set(syms.begin(), syms.end());
    std::set<std::string> map_keys;
    for (const auto& [k, v] : trace.coordinate_map) map_keys.insert(k);
    if (sym_set != map_keys) {
        for (const auto& s : sym_set)
            if (!map_keys.count(s))
                rep.violations.push_back({"SymbolMismatch", "symbol '" + s + "' missing from coordinate_map"});
        for (const auto& k : map_keys)
            if (!sym_set.count(k))
                rep.violations.push_back({"SymbolMismatch", "coordinate_map key '" + k + "' unused in script"});
    }

    std::set<std::string> ids(scene_element_ids.begin(), scene_element_ids.end());
    for (const auto& el : trace.used_elements) {
        if (!ids.count(el))
            rep.violations.push_back({"UnknownElement", "used element '" + el + "' not in scene"});
    }

    double lo = 0.0;
    for (const auto& [k, v] : trace.coordinate_map) {
        bool is_x = !k.empty() && (k[0] == 'x' || k[0] == 'X');
        double hi = space == CoordinateSpace::Normalized ? 1.0 : (is_x ? canvas_w : canvas_h);
        // symbols not starting with x/y are range-checked against the larger axis
        if (space == CoordinateSpace::Pixels && !is_x && !(k[0] == 'y' || k[0] == 'Y'))
            hi = std::max(canvas_w, canvas_h);
        if (!(v >= lo && v <= hi))
            rep.violations.push_back(
                {"OutOfRange", "'" + k + "' = " + std::to_string(v) + " outside [0, " +
                                   std::to_string(hi) + "]"});
    }

    if (chain_of_thought_leaks(trace.chain_of_thought))
        rep.violations.push_back({"CoordinateLeak", "chain of thought contains coordinate-like text"});

    try {
        ActionClass actual = classify_action(trace.script);
        auto implied = tag_implied_class(trace.action_type);
        if (trace.action_type.empty()) {
            rep.violations.push_back({"ActionTypeMismatch", "missing action-type tag"});
        } else if (implied && *implied != actual) {
            rep.violations.push_back(
                {"ActionTypeMismatch", std::string("tag '") + trace.action_type + "' implies " +
                                           action_class_name(*implied) + " but script is " +
                                           action_class_name(actual)});
        }
    } catch (const TraceParseError& e) {
        rep.violations.push_back({"OddSymbolCount", e.what()});
    }
    return rep;
}

ActionTrace point_to_trace(const std::vector<Point>& points, TraceTemplate tmpl,
                           const ClickParams& params) {
    ActionTrace tr;
    auto sym = [&](size_t i, char axis) { return std::string(1, axis) + std::to_string(i + 1); };
    auto add_point = [&](size_t i) {
        tr.coordinate_map.emplace_back(sym(i, 'x'), points[i].x);
        tr.coordinate_map.emplace_back(sym(i, 'y'), points[i].y);
    };
    auto coord_stmt = [&](Verb v, size_t i) {
        ActionStatement st;
        st.verb = v;
        st.x_sym = sym(i, 'x');
        st.y_sym = sym(i, 'y');
        return st;
    };

    switch (tmpl) {
        case TraceTemplate::Click:
        case TraceTemplate::ClickType: {
            if (points.size() != 1)
                throw TraceParseError("click template needs exactly 1 point");
            ActionStatement st = coord_stmt(Verb::Click, 0);
            if (params.clicks != 1) st.clicks = params.clicks;
            if (params.button != "left") st.button = params.button;
            tr.script.push_back(st);
            add_point(0);
            if (tmpl == TraceTemplate::ClickType) {
                ActionStatement ty;
                ty.verb = Verb::Type;
                ty.text = params.type_text;
                tr.script.push_back(ty);
                tr.action_type = "combined:click and type";
            } else {
                tr.action_type = "click";
            }
            break;
        }
        case TraceTemplate::MoveDrag: {
            if (points.size() != 2)
                throw TraceParseError("drag template needs exactly 2 points");
            tr.script.push_back(coord_stmt(Verb::MoveTo, 0));
            tr.script.push_back(coord_stmt(Verb::DragTo, 1));
            add_point(0);
            add_point(1);
            tr.action_type = "combined:moveTo and dragTo";
            break;
        }
        case TraceTemplate::DownMoveUp: {
            if (points.size() < 3)
                throw TraceParseError("draw template needs at least 3 points");
            tr.script.push_back(coord_stmt(Verb::MouseDown, 0));
            for (size_t i = 1; i + 1 < points.size(); ++i)
                tr.script.push_back(coord_stmt(Verb::MoveTo, i));
            tr.script.push_back(coord_stmt(Verb::MouseUp, points.size() - 1));
            for (size_t i = 0; i < points.size(); ++i) add_point(i);
            tr.action_type = "combined:mouseDown NxmoveTo and mouseUp";
            break;
        }
    }
    return tr;
}

}  // namespace actsynth
