#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "actsynth/eval.hpp"
#include "actsynth/trace.hpp"

namespace actsynth {

// One training sample, serialized as a JSONL line with the keys
// prompt/response/coordinate_map/used_elements/action-type plus the image
// reference, modality and coordinate-space tags.
struct DatasetRecord {
    std::string prompt;
    std::string response;
    std::vector<std::pair<std::string, double>> coordinate_map;
    std::vector<std::string> used_elements;
    std::string action_type;
    std::string image_ref;
    Modality modality = Modality::Canvas;
    CoordinateSpace coordinate_space = CoordinateSpace::Pixels;
};

nlohmann::ordered_json record_to_json(const DatasetRecord& r);
DatasetRecord record_from_json(const nlohmann::ordered_json& j);

struct MixWeights {
    std::vector<std::pair<std::string, double>> weights;

    static MixWeights defaults();  // GUI .34, Text .25, Table .10, Canvas .10,
                                   // Image .15, OpenCUA .06
    bool valid(double tol = 1e-9) const;
    double weight_for(const std::string& modality) const;
};

struct ShardManifest {
    struct Shard {
        std::string name;
        size_t count = 0;
        std::string checksum;  // sha256 of the shard bytes
    };
    std::vector<Shard> shards;
    size_t total = 0;
};

nlohmann::ordered_json manifest_to_json(const ShardManifest& m);
ShardManifest manifest_from_json(const nlohmann::ordered_json& j);

// JSONL shards of <= shard_size records plus manifest.json. Shards are
// written to a temp name and renamed; a failure removes already-written
// shards of this call before rethrowing.
ShardManifest write_shards(const std::vector<DatasetRecord>& records,
                           const std::filesystem::path& dir, size_t shard_size);

ShardManifest load_manifest(const std::filesystem::path& dir);
std::vector<DatasetRecord> read_shard(const std::filesystem::path& file);
std::vector<DatasetRecord> read_all_shards(const std::filesystem::path& dir);

// Pull-based record source for mixing; next() yields records until empty.
struct RecordSource {
    std::string modality;
    std::function<std::optional<DatasetRecord>()> next;
};

RecordSource vector_source(std::string modality, std::vector<DatasetRecord> records);

// Interleaves sources with i.i.d. modality draws by weight. Exhausted
// sources are renormalized out with a warning line on `warn`. Stops after
// max_items or when everything is exhausted.
std::vector<DatasetRecord> mix_stream(std::vector<RecordSource> sources, const MixWeights& weights,
                                      Rng& rng, size_t max_items = SIZE_MAX,
                                      std::ostream* warn = nullptr);

struct DatasetStats {
    std::map<std::string, size_t> by_modality;
    std::map<std::string, size_t> by_action_type;
    std::map<std::string, size_t> by_key_point_class;  // ZeroSet/OneSet/...
    size_t total = 0;
    size_t invalid = 0;
    std::vector<std::string> errors;  // per-record diagnostics
};

// Scans every shard named by the manifest, validating traces as it goes.
DatasetStats dataset_stats(const std::filesystem::path& dir);

nlohmann::ordered_json stats_to_json(const DatasetStats& s);

}  // namespace actsynth
