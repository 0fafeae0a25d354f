#include "actsynth/eval.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace actsynth {

using ordered_json = nlohmann::ordered_json;

const char* modality_name(Modality m) {
    switch (m) {
        case Modality::Gui: return "GUI";
        case Modality::Text: return "Text";
        case Modality::Table: return "Table";
        case Modality::Canvas: return "Canvas";
        case Modality::Image: return "Image";
    }
    return "?";
}

std::optional<Modality> modality_from_name(const std::string& name) {
    if (name == "GUI") return Modality::Gui;
    if (name == "Text") return Modality::Text;
    if (name == "Table") return Modality::Table;
    if (name == "Canvas") return Modality::Canvas;
    if (name == "Image") return Modality::Image;
    return std::nullopt;
}

const char* failed_rule_name(FailedRule r) {
    switch (r) {
        case FailedRule::Banned: return "Banned";
        case FailedRule::OrderMismatch: return "OrderMismatch";
        case FailedRule::UncoveredRegion: return "UncoveredRegion";
        case FailedRule::Empty: return "Empty";
    }
    return "?";
}

bool region_contains(const RegionShape& shape, const Point& p) {
    if (const Rect* r = std::get_if<Rect>(&shape)) return point_in_rect(p, *r);
    return point_in_polygon(p, std::get<Polygon>(shape));
}

namespace {

bool in_bounds(const Point& p, const BenchmarkSample& s) {
    return p.x >= 0 && p.y >= 0 && p.x <= s.image_width && p.y <= s.image_height;
}

}  // namespace

Verdict judge_sample(const BenchmarkSample& sample, const Prediction& pred) {
    if (pred.sample_id != sample.id)
        throw std::invalid_argument("prediction id '" + pred.sample_id +
                                    "' does not match sample '" + sample.id + "'");
    if (pred.points.empty()) return {false, FailedRule::Empty};

    // Rule 1: banned regions veto everything.
    for (const Point& p : pred.points) {
        if (!in_bounds(p, sample)) continue;  // out-of-bounds points hit nothing
        for (const BannedRegion& b : sample.banned_regions) {
            if (region_contains(b.shape, p)) return {false, FailedRule::Banned};
        }
    }

    bool ranked = !sample.correct_regions.empty() && sample.correct_regions.front().rank.has_value();
    if (ranked) {
        // Rule 2: group regions by rank, ascending; match points as a
        // subsequence, one point per rank (greedy earliest match).
        std::map<int, std::vector<const RegionShape*>> by_rank;
        for (const CorrectRegion& r : sample.correct_regions)
            by_rank[*r.rank].push_back(&r.shape);
        size_t pi = 0;
        for (const auto& [rank, shapes] : by_rank) {
            bool found = false;
            while (pi < pred.points.size()) {
                const Point& p = pred.points[pi++];
                if (!in_bounds(p, sample)) continue;
                for (const RegionShape* s : shapes) {
                    if (region_contains(*s, p)) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) return {false, FailedRule::OrderMismatch};
        }
        return {true, std::nullopt};
    }

    // Rule 3: order-free coverage of every region.
    for (const CorrectRegion& r : sample.correct_regions) {
        bool covered = false;
        for (const Point& p : pred.points) {
            if (in_bounds(p, sample) && region_contains(r.shape, p)) {
                covered = true;
                break;
            }
        }
        if (!covered) return {false, FailedRule::UncoveredRegion};
    }
    return {true, std::nullopt};
}

Report evaluate_suite(const std::vector<BenchmarkSample>& samples,
                      const std::vector<Prediction>& predictions, int threads) {
    std::map<std::string, const Prediction*> by_id;
    std::set<std::string> sample_ids;
    for (const auto& s : samples) sample_ids.insert(s.id);
    for (const auto& p : predictions) {
        if (!by_id.emplace(p.sample_id, &p).second)
            throw SuiteError("duplicate prediction id: " + p.sample_id);
        if (!sample_ids.count(p.sample_id))
            throw SuiteError("prediction for unknown sample: " + p.sample_id);
    }

    std::vector<Verdict> verdicts(samples.size());
    auto judge_range = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const BenchmarkSample& s = samples[i];
            auto it = by_id.find(s.id);
            if (it == by_id.end()) {
                verdicts[i] = {false, FailedRule::Empty};  // missing counts as failure
            } else {
                verdicts[i] = judge_sample(s, *it->second);
            }
        }
    };
    threads = std::max(1, threads);
    if (threads == 1 || samples.size() < 32) {
        judge_range(0, samples.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (samples.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            size_t b = std::min(samples.size(), size_t(t) * chunk);
            size_t e = std::min(samples.size(), b + chunk);
            if (b < e) pool.emplace_back(judge_range, b, e);
        }
        for (auto& th : pool) th.join();
    }

    Report rep;
    rep.total = samples.size();
    std::map<std::string, std::pair<size_t, size_t>> mod_counts;  // successes, total
    for (size_t i = 0; i < samples.size(); ++i) {
        rep.per_sample[samples[i].id] = verdicts[i];
        auto& mc = mod_counts[modality_name(samples[i].modality)];
        mc.second++;
        if (verdicts[i].success) {
            mc.first++;
            rep.successes++;
        }
    }
    rep.overall_success_rate = rep.total ? double(rep.successes) / double(rep.total) : 0.0;
    for (const auto& [mod, counts] : mod_counts)
        rep.per_modality[mod] = counts.second ? double(counts.first) / double(counts.second) : 0.0;
    return rep;
}

namespace {

Point json_point(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SuiteError(where + ": expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

RegionShape parse_shape(const ordered_json& j, const std::string& where) {
    if (!j.is_object()) throw SuiteError(where + ": shape must be an object");
    if (j.contains("rect")) {
        const auto& a = j["rect"];
        if (!a.is_array() || a.size() != 4) throw SuiteError(where + ".rect: expected [x1,y1,x2,y2]");
        Rect r{a[0].get<double>(), a[1].get<double>(), a[2].get<double>(), a[3].get<double>()};
        if (!r.valid()) throw SuiteError(where + ".rect: x1<=x2 and y1<=y2 required");
        if (r.area() <= 0.0) throw SuiteError(where + ".rect: zero area");
        return r;
    }
    if (j.contains("polygon")) {
        const auto& a = j["polygon"];
        if (!a.is_array() || a.size() < 3) throw SuiteError(where + ".polygon: need >= 3 vertices");
        std::vector<Point> pts;
        for (size_t i = 0; i < a.size(); ++i) pts.push_back(json_point(a[i], where + ".polygon"));
        Polygon poly;
        try {
            poly = make_polygon(std::move(pts));
        } catch (const std::exception& e) {
            throw SuiteError(where + ".polygon: " + e.what());
        }
        if (polygon_area(poly) <= 0.0) throw SuiteError(where + ".polygon: zero area");
        return poly;
    }
    throw SuiteError(where + ": shape needs 'rect' or 'polygon'");
}

void check_shape_bounds(const RegionShape& s, int w, int h, const std::string& where) {
    auto check = [&](const Point& p) {
        if (p.x < 0 || p.y < 0 || p.x > w || p.y > h)
            throw SuiteError(where + ": region extends past image bounds");
    };
    if (const Rect* r = std::get_if<Rect>(&s)) {
        check({r->x1, r->y1});
        check({r->x2, r->y2});
    } else {
        for (const Point& p : std::get<Polygon>(s).vertices) check(p);
    }
}

}  // namespace

std::vector<BenchmarkSample> load_suite(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SuiteError("cannot open suite file: " + path.string());
    ordered_json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw SuiteError("suite parse error: " + std::string(e.what()));
    }
    if (!doc.is_object() || !doc.contains("samples") || !doc["samples"].is_array())
        throw SuiteError("suite root must be {\"samples\": [...]}");

    std::vector<BenchmarkSample> out;
    std::set<std::string> seen;
    for (size_t i = 0; i < doc["samples"].size(); ++i) {
        const auto& js = doc["samples"][i];
        std::string where = "samples[" + std::to_string(i) + "]";
        BenchmarkSample s;
        if (!js.contains("id") || !js["id"].is_string()) throw SuiteError(where + ".id: required string");
        s.id = js["id"].get<std::string>();
        where = "sample '" + s.id + "'";
        if (!seen.insert(s.id).second) throw SuiteError(where + ": duplicate id");
        auto mod = js.contains("modality") && js["modality"].is_string()
                       ? modality_from_name(js["modality"].get<std::string>())
                       : std::nullopt;
        if (!mod) throw SuiteError(where + ".modality: one of GUI/Text/Table/Canvas/Image required");
        s.modality = *mod;
        s.instruction = js.value("instruction", std::string());
        s.image_ref = js.value("image", std::string());
        if (!js.contains("image_size") || !js["image_size"].is_array() || js["image_size"].size() != 2)
            throw SuiteError(where + ".image_size: expected [w, h]");
        s.image_width = js["image_size"][0].get<int>();
        s.image_height = js["image_size"][1].get<int>();
        if (s.image_width <= 0 || s.image_height <= 0)
            throw SuiteError(where + ".image_size: must be positive");

        if (!js.contains("correct_regions") || !js["correct_regions"].is_array() ||
            js["correct_regions"].empty())
            throw SuiteError(where + ".correct_regions: at least one region required");
        size_t ranked_count = 0;
        for (size_t k = 0; k < js["correct_regions"].size(); ++k) {
            const auto& jr = js["correct_regions"][k];
            std::string rw = where + ".correct_regions[" + std::to_string(k) + "]";
            CorrectRegion r;
            if (!jr.contains("shape")) throw SuiteError(rw + ".shape: required");
            r.shape = parse_shape(jr["shape"], rw + ".shape");
            check_shape_bounds(r.shape, s.image_width, s.image_height, rw);
            if (jr.contains("rank")) {
                if (!jr["rank"].is_number_integer() || jr["rank"].get<int>() < 0)
                    throw SuiteError(rw + ".rank: non-negative integer required");
                r.rank = jr["rank"].get<int>();
                ranked_count++;
            }
            s.correct_regions.push_back(std::move(r));
        }
        if (ranked_count != 0 && ranked_count != s.correct_regions.size())
            throw SuiteError(where +
                             ".correct_regions: ranks must be on all regions or on none");
        if (js.contains("banned_regions")) {
            if (!js["banned_regions"].is_array()) throw SuiteError(where + ".banned_regions: array");
            for (size_t k = 0; k < js["banned_regions"].size(); ++k) {
                const auto& jb = js["banned_regions"][k];
                std::string bw = where + ".banned_regions[" + std::to_string(k) + "]";
                BannedRegion b;
                if (!jb.contains("shape")) throw SuiteError(bw + ".shape: required");
                b.shape = parse_shape(jb["shape"], bw + ".shape");
                check_shape_bounds(b.shape, s.image_width, s.image_height, bw);
                s.banned_regions.push_back(std::move(b));
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Prediction> load_predictions(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SuiteError("cannot open predictions file: " + path.string());
    std::vector<Prediction> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const std::exception& e) {
            throw SuiteError("predictions line " + std::to_string(lineno) + ": " + e.what());
        }
        Prediction p;
        if (!j.contains("sample_id") || !j["sample_id"].is_string())
            throw SuiteError("predictions line " + std::to_string(lineno) + ": sample_id required");
        p.sample_id = j["sample_id"].get<std::string>();
        if (!j.contains("points") || !j["points"].is_array())
            throw SuiteError("predictions line " + std::to_string(lineno) + ": points required");
        for (const auto& jp : j["points"])
            p.points.push_back(json_point(jp, "predictions line " + std::to_string(lineno)));
        out.push_back(std::move(p));
    }
    return out;
}

std::string report_to_json_string(const Report& report) {
    ordered_json j;
    j["overall"] = report.overall_success_rate;
    j["total"] = report.total;
    j["successes"] = report.successes;
    ordered_json jm = ordered_json::object();
    for (const auto& [mod, rate] : report.per_modality) jm[mod] = rate;
    j["per_modality"] = jm;
    ordered_json js = ordered_json::object();
    for (const auto& [id, v] : report.per_sample) {
        ordered_json jv;
        jv["success"] = v.success;
        if (v.failed_rule) jv["failed_rule"] = failed_rule_name(*v.failed_rule);
        js[id] = jv;
    }
    j["per_sample"] = js;
    return j.dump(2) + "\n";
}

void save_report(const Report& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw SuiteError("cannot write report: " + path.string());
    out << report_to_json_string(report);
}

}  // namespace actsynth
