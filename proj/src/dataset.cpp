#include "actsynth/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>

#include "actsynth/hashing.hpp"

namespace actsynth {

using ordered_json = nlohmann::ordered_json;

nlohmann::ordered_json record_to_json(const DatasetRecord& r) {
    ordered_json j;
    j["prompt"] = r.prompt;
    j["response"] = r.response;
    ordered_json cmap = ordered_json::object();
    for (const auto& [k, v] : r.coordinate_map) cmap[k] = v;
    j["coordinate_map"] = std::move(cmap);
    j["used_elements"] = r.used_elements;
    j["action-type"] = r.action_type;
    j["image"] = r.image_ref;
    j["modality"] = modality_name(r.modality);
    j["coordinate_space"] = coordinate_space_name(r.coordinate_space);
    return j;
}

DatasetRecord record_from_json(const ordered_json& j) {
    DatasetRecord r;
    r.prompt = j.at("prompt").get<std::string>();
    r.response = j.at("response").get<std::string>();
    for (const auto& [k, v] : j.at("coordinate_map").items())
        r.coordinate_map.emplace_back(k, v.get<double>());
    for (const auto& je : j.at("used_elements")) {
        if (je.is_string()) r.used_elements.push_back(je.get<std::string>());
        else r.used_elements.push_back(std::to_string(je.get<long>()));
    }
    r.action_type = j.at("action-type").get<std::string>();
    r.image_ref = j.value("image", std::string());
    auto mod = modality_from_name(j.value("modality", std::string("Canvas")));
    if (!mod) throw std::runtime_error("bad modality in record");
    r.modality = *mod;
    auto space = coordinate_space_from_name(j.value("coordinate_space", std::string("pixels")));
    if (!space) throw std::runtime_error("bad coordinate_space in record");
    r.coordinate_space = *space;
    return r;
}

MixWeights MixWeights::defaults() {
    return {{{"GUI", 0.34},
             {"Text", 0.25},
             {"Table", 0.10},
             {"Canvas", 0.10},
             {"Image", 0.15},
             {"OpenCUA", 0.06}}};
}

bool MixWeights::valid(double tol) const {
    double sum = 0.0;
    for (const auto& [m, w] : weights) {
        if (w < 0.0) return false;
        sum += w;
    }
    return std::abs(sum - 1.0) <= tol;
}

double MixWeights::weight_for(const std::string& modality) const {
    for (const auto& [m, w] : weights)
        if (m == modality) return w;
    return 0.0;
}

ordered_json manifest_to_json(const ShardManifest& m) {
    ordered_json j;
    ordered_json shards = ordered_json::array();
    for (const auto& s : m.shards)
        shards.push_back({{"name", s.name}, {"count", s.count}, {"checksum", s.checksum}});
    j["shards"] = std::move(shards);
    j["totals"] = {{"records", m.total}};
    return j;
}

ShardManifest manifest_from_json(const ordered_json& j) {
    ShardManifest m;
    for (const auto& js : j.at("shards")) {
        ShardManifest::Shard s;
        s.name = js.at("name").get<std::string>();
        s.count = js.at("count").get<size_t>();
        s.checksum = js.at("checksum").get<std::string>();
        m.shards.push_back(std::move(s));
    }
    m.total = j.at("totals").at("records").get<size_t>();
    return m;
}

ShardManifest write_shards(const std::vector<DatasetRecord>& records,
                           const std::filesystem::path& dir, size_t shard_size) {
    if (shard_size == 0) throw std::invalid_argument("shard_size must be positive");
    std::filesystem::create_directories(dir);
    ShardManifest manifest;
    std::vector<std::filesystem::path> written;
    try {
        size_t shard_index = 0;
        for (size_t begin = 0; begin < records.size(); begin += shard_size, ++shard_index) {
            size_t end = std::min(records.size(), begin + shard_size);
            std::string body;
            for (size_t i = begin; i < end; ++i)
                body += record_to_json(records[i]).dump() + "\n";
            char name[32];
            std::snprintf(name, sizeof name, "shard-%05zu.jsonl", shard_index);
            std::filesystem::path final_path = dir / name;
            std::filesystem::path tmp_path = dir / (std::string(name) + ".tmp");
            {
                std::ofstream out(tmp_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + tmp_path.string());
                out << body;
                if (!out.flush()) throw std::runtime_error("write failed: " + tmp_path.string());
            }
            std::filesystem::rename(tmp_path, final_path);
            written.push_back(final_path);
            manifest.shards.push_back({name, end - begin, sha256_hex(body)});
            manifest.total += end - begin;
        }
        std::ofstream mf(dir / "manifest.json");
        if (!mf) throw std::runtime_error("cannot write manifest");
        mf << manifest_to_json(manifest).dump(2) << "\n";
        if (!mf.flush()) throw std::runtime_error("manifest write failed");
    } catch (...) {
        for (const auto& p : written) std::filesystem::remove(p);
        std::filesystem::remove(dir / "manifest.json");
        throw;
    }
    return manifest;
}

ShardManifest load_manifest(const std::filesystem::path& dir) {
    std::ifstream in(dir / "manifest.json");
    if (!in) throw std::runtime_error("no manifest in " + dir.string());
    ordered_json j;
    in >> j;
    return manifest_from_json(j);
}

std::vector<DatasetRecord> read_shard(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open shard " + file.string());
    std::vector<DatasetRecord> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(ordered_json::parse(line)));
        } catch (const std::exception& e) {
            throw std::runtime_error(file.filename().string() + ":" + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
    return out;
}

std::vector<DatasetRecord> read_all_shards(const std::filesystem::path& dir) {
    ShardManifest m = load_manifest(dir);
    std::vector<DatasetRecord> out;
    for (const auto& s : m.shards) {
        auto records = read_shard(dir / s.name);
        out.insert(out.end(), records.begin(), records.end());
    }
    return out;
}

RecordSource vector_source(std::string modality, std::vector<DatasetRecord> records) {
    auto state = std::make_shared<std::pair<std::vector<DatasetRecord>, size_t>>(
        std::move(records), 0);
    RecordSource src;
    src.modality = std::move(modality);
    src.next = [state]() -> std::optional<DatasetRecord> {
        if (state->second >= state->first.size()) return std::nullopt;
        return state->first[state->second++];
    };
    return src;
}

std::vector<DatasetRecord> mix_stream(std::vector<RecordSource> sources, const MixWeights& weights,
                                      Rng& rng, size_t max_items, std::ostream* warn) {
    if (!weights.valid()) throw std::invalid_argument("mix weights must be >= 0 and sum to 1");
    struct Live {
        RecordSource* src;
        double weight;
    };
    std::vector<Live> live;
    for (auto& s : sources) {
        double w = weights.weight_for(s.modality);
        if (w > 0.0) live.push_back({&s, w});
    }
    for (const auto& [m, w] : weights.weights) {
        if (w <= 0.0) continue;
        bool found = false;
        for (const auto& s : sources)
            if (s.modality == m) found = true;
        if (!found) throw std::invalid_argument("weights name a missing source: " + m);
    }

    std::vector<DatasetRecord> out;
    while (out.size() < max_items && !live.empty()) {
        double total = 0.0;
        for (const Live& l : live) total += l.weight;
        double draw = rng.uniform() * total;
        size_t pick = 0;
        for (; pick + 1 < live.size(); ++pick) {
            if (draw < live[pick].weight) break;
            draw -= live[pick].weight;
        }
        auto rec = live[pick].src->next();
        if (!rec) {
            if (warn)
                (*warn) << "mix: source '" << live[pick].src->modality
                        << "' exhausted; renormalizing remaining weights\n";
            live.erase(live.begin() + long(pick));
            continue;
        }
        out.push_back(std::move(*rec));
    }
    return out;
}

DatasetStats dataset_stats(const std::filesystem::path& dir) {
    ShardManifest manifest = load_manifest(dir);
    DatasetStats stats;
    for (const auto& shard : manifest.shards) {
        std::vector<DatasetRecord> records;
        try {
            records = read_shard(dir / shard.name);
        } catch (const std::exception& e) {
            stats.errors.push_back(e.what());
            stats.invalid++;
            continue;
        }
        for (const DatasetRecord& r : records) {
            stats.total++;
            stats.by_modality[modality_name(r.modality)]++;
            stats.by_action_type[r.action_type]++;
            try {
                ParsedResponse parsed = parse_trace(r.response);
                stats.by_key_point_class[action_class_name(classify_action(parsed.script))]++;
            } catch (const std::exception& e) {
                stats.invalid++;
                stats.errors.push_back(shard.name + ": " + e.what());
            }
        }
    }
    return stats;
}

ordered_json stats_to_json(const DatasetStats& s) {
    ordered_json j;
    j["total"] = s.total;
    j["invalid"] = s.invalid;
    j["by_modality"] = s.by_modality;
    j["by_action_type"] = s.by_action_type;
    j["by_key_point_class"] = s.by_key_point_class;
    if (!s.errors.empty()) j["errors"] = s.errors;
    return j;
}

}  // namespace actsynth
