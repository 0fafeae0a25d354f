#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "actsynth/geometry.hpp"

namespace actsynth {

enum class Modality { Gui, Text, Table, Canvas, Image };

const char* modality_name(Modality m);  // "GUI", "Text", "Table", "Canvas", "Image"
std::optional<Modality> modality_from_name(const std::string& name);

using RegionShape = std::variant<Rect, Polygon>;

bool region_contains(const RegionShape& shape, const Point& p);

struct CorrectRegion {
    RegionShape shape;
    std::optional<int> rank;  // present on all regions of a sample, or on none
};

struct BannedRegion {
    RegionShape shape;
};

struct BenchmarkSample {
    std::string id;
    Modality modality = Modality::Gui;
    std::string instruction;
    std::string image_ref;
    int image_width = 0;
    int image_height = 0;
    std::vector<CorrectRegion> correct_regions;
    std::vector<BannedRegion> banned_regions;
};

struct Prediction {
    std::string sample_id;
    std::vector<Point> points;  // pixel space; order is meaningful
};

enum class FailedRule { Banned, OrderMismatch, UncoveredRegion, Empty };

const char* failed_rule_name(FailedRule r);

struct Verdict {
    bool success = false;
    std::optional<FailedRule> failed_rule;  // set iff !success
};

struct Report {
    double overall_success_rate = 0.0;  // fraction in [0,1]
    std::map<std::string, double> per_modality;
    std::map<std::string, Verdict> per_sample;
    size_t total = 0;
    size_t successes = 0;
};

// Thrown by load_suite / load_predictions on schema violations; message
// carries the sample id and field path.
struct SuiteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Judges one prediction under the priority-ordered rules:
//   1. any point in a banned region -> failure
//   2. ranked regions: some strictly index-increasing assignment of points to
//      ascending ranks, each point inside any region of its rank; extra
//      points are skipped
//   3. unranked regions: every region holds at least one point
// Out-of-bounds points hit nothing. Boundary contact counts as inside.
// Throws std::invalid_argument when pred.sample_id != sample.id.
Verdict judge_sample(const BenchmarkSample& sample, const Prediction& pred);

// Missing predictions count as failures. Throws SuiteError on duplicate
// prediction ids or predictions for unknown samples. Deterministic result
// regardless of thread count.
Report evaluate_suite(const std::vector<BenchmarkSample>& samples,
                      const std::vector<Prediction>& predictions, int threads = 1);

std::vector<BenchmarkSample> load_suite(const std::filesystem::path& path);
std::vector<Prediction> load_predictions(const std::filesystem::path& path);  // JSON lines

std::string report_to_json_string(const Report& report);
void save_report(const Report& report, const std::filesystem::path& path);

}  // namespace actsynth
