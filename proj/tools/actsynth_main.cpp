// Command-line entry point: dataset generation, benchmark evaluation,
// record validation, statistics and modality mixing.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "actsynth/canvas.hpp"
#include "actsynth/dataset.hpp"
#include "actsynth/eval.hpp"
#include "actsynth/png_io.hpp"
#include "actsynth/synthetic.hpp"
#include "actsynth/taskgen.hpp"

namespace fs = std::filesystem;
using namespace actsynth;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

struct GenConfig {
    uint64_t count = 10;
    uint64_t seed = 0;
    std::string out = "out";
    int workers = 1;
    size_t shard_size = 1000;
    int fixed_w = 0, fixed_h = 0;  // 0 = sample per modality defaults
    int per_task = 2;
    std::string masks_dir;   // image modality: user-supplied masks
    std::string fonts_dir;   // text modality: extra bitmap fonts
};

void parallel_indices(uint64_t count, int workers, const std::function<void(uint64_t)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1) {
        for (uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            uint64_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

// Content-hash image path; written once per distinct pixel buffer.
std::string store_image(const Image& img, const fs::path& out_dir) {
    std::string name = "images/" + image_content_hash(img) + ".png";
    fs::path path = out_dir / name;
    if (!fs::exists(path)) {
        fs::path tmp = path;
        tmp += ".tmp";
        write_png(tmp, img);
        fs::rename(tmp, path);
    }
    return name;
}

void write_annotation(const ordered_json& doc, const fs::path& out_dir, const std::string& name) {
    fs::path path = out_dir / "annotations" / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << doc.dump(2) << "\n";
}

void collect_records(std::vector<std::vector<DatasetRecord>>& slots, uint64_t index,
                     const std::vector<GeneratedRecord>& generated) {
    for (const GeneratedRecord& g : generated) slots[index].push_back(g.record);
}

int finish_generation(const GenConfig& cfg, std::vector<std::vector<DatasetRecord>>& slots) {
    std::vector<DatasetRecord> records;
    for (auto& slot : slots)
        for (auto& r : slot) records.push_back(std::move(r));
    ShardManifest manifest = write_shards(records, fs::path(cfg.out) / "shards", cfg.shard_size);
    DatasetStats stats = dataset_stats(fs::path(cfg.out) / "shards");
    std::cout << "scenes: " << slots.size() << "\nrecords: " << manifest.total << "\n";
    for (const auto& [mod, n] : stats.by_modality) std::cout << "  " << mod << ": " << n << "\n";
    if (stats.invalid) {
        std::cerr << "invalid records: " << stats.invalid << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

std::vector<const DetailedTask*> synthesizable_tasks(Modality m) {
    std::vector<const DetailedTask*> out;
    for (const DetailedTask& t : detailed_task_registry())
        if (t.modality == m && t.synthesizable) out.push_back(&t);
    return out;
}

int cmd_gen_canvas(const GenConfig& cfg) {
    fs::create_directories(fs::path(cfg.out) / "images");
    fs::create_directories(fs::path(cfg.out) / "annotations");
    std::vector<std::vector<DatasetRecord>> slots(cfg.count);
    auto tasks = synthesizable_tasks(Modality::Canvas);
    GenOptions opt;
    opt.per_task = cfg.per_task;
    std::mutex io_mutex;

    parallel_indices(cfg.count, cfg.workers, [&](uint64_t index) {
        SceneLimits limits;
        if (cfg.fixed_w) {
            limits.width_min = limits.width_max = cfg.fixed_w;
            limits.height_min = limits.height_max = cfg.fixed_h;
        }
        CanvasScene scene = build_scene(cfg.seed, index, limits);
        Image img = render_scene(scene);
        std::string image_ref = store_image(img, cfg.out);
        ordered_json ann = scene_annotation(scene, image_ref);
        char name[48];
        std::snprintf(name, sizeof name, "canvas_%06llu.json", (unsigned long long)index);
        {
            std::lock_guard<std::mutex> lock(io_mutex);
            write_annotation(ann, cfg.out, name);
        }
        for (size_t t = 0; t < tasks.size(); ++t) {
            Rng rng(seed_mix(scene.params.seed, "task", t));
            collect_records(slots, index,
                            template_generate(scene, image_ref, *tasks[t], rng, opt));
        }
    });
    return finish_generation(cfg, slots);
}

int cmd_gen_table(const GenConfig& cfg) {
    fs::create_directories(fs::path(cfg.out) / "images");
    fs::create_directories(fs::path(cfg.out) / "annotations");
    std::vector<std::vector<DatasetRecord>> slots(cfg.count);
    auto tasks = synthesizable_tasks(Modality::Table);
    GenOptions opt;
    opt.per_task = cfg.per_task;
    std::mutex io_mutex;

    parallel_indices(cfg.count, cfg.workers, [&](uint64_t index) {
        uint64_t table_seed = seed_mix(cfg.seed, "table", index);
        Rng rng(table_seed);
        const auto& seeds = seed_tables();
        TableModel model = seeds[size_t(rng.uniform_int(0, int64_t(seeds.size()) - 1))];
        if (rng.bernoulli(0.7)) {
            Rng evolve_rng = rng.fork("evolve");
            model = evolve_table(model, evolve_rng, 1).front();
        }
        // half of all tables get most non-header cells masked
        if (rng.bernoulli(0.5)) {
            Rng mask_rng = rng.fork("mask");
            model = mask_cells(model, mask_rng, 0.6);
        }
        Rng style_rng = rng.fork("style");
        TableStyle style = style_preset(int(style_rng.uniform_int(0, kTableStylePresetCount - 1)),
                                        style_rng);
        int w = cfg.fixed_w ? cfg.fixed_w : int(rng.uniform_int(800, 1600));
        int h = cfg.fixed_h ? cfg.fixed_h : int(rng.uniform_int(600, 1200));
        TableRender render = layout_render(model, style, w, h);
        std::string image_ref = store_image(render.image, cfg.out);
        ordered_json ann = table_annotation(render, image_ref);
        char name[48];
        std::snprintf(name, sizeof name, "table_%06llu.json", (unsigned long long)index);
        {
            std::lock_guard<std::mutex> lock(io_mutex);
            write_annotation(ann, cfg.out, name);
        }
        for (size_t t = 0; t < tasks.size(); ++t) {
            Rng task_rng(seed_mix(table_seed, "task", t));
            collect_records(slots, index,
                            template_generate(render, image_ref, *tasks[t], task_rng, opt));
        }
    });
    return finish_generation(cfg, slots);
}

int cmd_gen_text(const GenConfig& cfg) {
    fs::create_directories(fs::path(cfg.out) / "images");
    fs::create_directories(fs::path(cfg.out) / "annotations");
    std::vector<std::vector<DatasetRecord>> slots(cfg.count);
    auto tasks = synthesizable_tasks(Modality::Text);
    GenOptions opt;
    opt.per_task = cfg.per_task;
    std::mutex io_mutex;

    std::vector<BitmapFont> extra_fonts;
    if (!cfg.fonts_dir.empty()) {
        for (const auto& entry : fs::directory_iterator(cfg.fonts_dir))
            if (entry.path().extension() == ".json")
                extra_fonts.push_back(BitmapFont::load_json_file(entry.path()));
    }

    parallel_indices(cfg.count, cfg.workers, [&](uint64_t index) {
        uint64_t page_seed = seed_mix(cfg.seed, "text", index);
        Rng rng(page_seed);
        int w = cfg.fixed_w ? cfg.fixed_w : int(rng.uniform_int(900, 1600));
        int h = cfg.fixed_h ? cfg.fixed_h : int(rng.uniform_int(700, 1200));
        TextBackground bg = make_text_background(w, h, rng);
        ContentKind kind = rng.bernoulli(0.5) ? ContentKind::Code : ContentKind::NaturalLanguage;
        FontSpec spec;
        size_t n_fonts = 2 + extra_fonts.size();
        size_t face = size_t(rng.uniform_int(0, int64_t(n_fonts) - 1));
        spec.font = face == 0   ? &BitmapFont::builtin_mono()
                    : face == 1 ? &BitmapFont::builtin_sans()
                                : &extra_fonts[face - 2];
        spec.scale = int(rng.uniform_int(1, 2));
        spec.bold = rng.bernoulli(0.25);
        spec.color = hsv_to_rgb(rng.uniform(0.0, 360.0), rng.uniform(0.0, 0.5),
                                rng.uniform(0.05, 0.35));
        std::string content = sample_text_content(kind, rng);
        TextPage page = compose_page(bg.image, bg.blank_region, content, spec, kind);
        std::string image_ref = store_image(bg.image, cfg.out);
        ordered_json ann = page_annotation(page, image_ref);
        char name[48];
        std::snprintf(name, sizeof name, "text_%06llu.json", (unsigned long long)index);
        {
            std::lock_guard<std::mutex> lock(io_mutex);
            write_annotation(ann, cfg.out, name);
        }
        for (size_t t = 0; t < tasks.size(); ++t) {
            Rng task_rng(seed_mix(page_seed, "task", t));
            collect_records(slots, index,
                            template_generate(page, image_ref, *tasks[t], task_rng, opt));
        }
    });
    return finish_generation(cfg, slots);
}

int cmd_gen_image(const GenConfig& cfg) {
    fs::create_directories(fs::path(cfg.out) / "images");
    fs::create_directories(fs::path(cfg.out) / "annotations");
    std::vector<std::vector<DatasetRecord>> slots(cfg.count);
    auto tasks = synthesizable_tasks(Modality::Image);
    GenOptions opt;
    opt.per_task = cfg.per_task;
    std::mutex io_mutex;

    // user-supplied masks (PNG, one region per file) override the synthetic
    // blob scenes; captions come from a sidecar captions.json {file: caption}
    std::vector<std::pair<fs::path, std::string>> user_masks;
    if (!cfg.masks_dir.empty()) {
        std::map<std::string, std::string> captions;
        fs::path sidecar = fs::path(cfg.masks_dir) / "captions.json";
        if (fs::exists(sidecar)) {
            std::ifstream in(sidecar);
            ordered_json j;
            in >> j;
            for (const auto& [k, v] : j.items()) captions[k] = v.get<std::string>();
        }
        for (const auto& entry : fs::directory_iterator(cfg.masks_dir)) {
            if (entry.path().extension() != ".png") continue;
            auto it = captions.find(entry.path().filename().string());
            user_masks.emplace_back(entry.path(),
                                    it != captions.end() ? it->second
                                                         : entry.path().stem().string());
        }
        std::sort(user_masks.begin(), user_masks.end());
        if (user_masks.empty()) {
            std::cerr << "no .png masks found in " << cfg.masks_dir << "\n";
        }
    }

    parallel_indices(cfg.count, cfg.workers, [&](uint64_t index) {
        uint64_t img_seed = seed_mix(cfg.seed, "image", index);
        Rng rng(img_seed);
        std::vector<RegionAnnotation> regions;
        Image img;
        if (!user_masks.empty()) {
            const auto& [mask_path, caption] = user_masks[index % user_masks.size()];
            Mask mask = load_mask_png(mask_path);
            img = Image(mask.width, mask.height, {200, 200, 200});
            for (int y = 0; y < mask.height; ++y)
                for (int x = 0; x < mask.width; ++x)
                    if (mask.at(x, y)) img.set(x, y, {90, 90, 90});
            regions.push_back(build_region(mask, caption, "1"));
        } else {
            int w = cfg.fixed_w ? cfg.fixed_w : int(rng.uniform_int(800, 1600));
            int h = cfg.fixed_h ? cfg.fixed_h : int(rng.uniform_int(600, 1200));
            SyntheticImageScene scene = make_image_scene(w, h, 5, rng);
            img = std::move(scene.image);
            for (size_t i = 0; i < scene.masks.size(); ++i)
                regions.push_back(build_region(scene.masks[i], scene.captions[i],
                                               std::to_string(i + 1)));
        }
        std::string image_ref = store_image(img, cfg.out);
        ordered_json ann;
        ann["image"] = image_ref;
        ann["size"] = {img.width, img.height};
        ordered_json jr = ordered_json::array();
        for (const auto& r : regions) jr.push_back(region_annotation_json(r));
        ann["regions"] = std::move(jr);
        char name[48];
        std::snprintf(name, sizeof name, "image_%06llu.json", (unsigned long long)index);
        {
            std::lock_guard<std::mutex> lock(io_mutex);
            write_annotation(ann, cfg.out, name);
        }
        for (size_t t = 0; t < tasks.size(); ++t) {
            Rng task_rng(seed_mix(img_seed, "task", t));
            collect_records(slots, index,
                            template_generate(regions, img.width, img.height, image_ref,
                                              *tasks[t], task_rng, opt));
        }
    });
    return finish_generation(cfg, slots);
}

int cmd_eval(const std::string& suite_path, const std::string& pred_path,
             const std::string& report_path) {
    std::vector<BenchmarkSample> samples = load_suite(suite_path);
    std::vector<Prediction> predictions = load_predictions(pred_path);
    Report report = evaluate_suite(samples, predictions,
                                   int(std::thread::hardware_concurrency()));
    if (!report_path.empty()) save_report(report, report_path);
    std::printf("samples: %zu\n", report.total);
    for (const auto& [mod, rate] : report.per_modality)
        std::printf("%s: %.1f\n", mod.c_str(), rate * 100.0);
    std::printf("overall: %.1f\n", report.overall_success_rate * 100.0);
    return kExitOk;
}

int cmd_validate(const std::string& dir) {
    ShardManifest manifest;
    try {
        manifest = load_manifest(dir);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }
    size_t violations = 0;
    std::map<std::string, size_t> by_code;
    for (const auto& shard : manifest.shards) {
        std::ifstream in(fs::path(dir) / shard.name);
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            DatasetRecord rec;
            try {
                rec = record_from_json(ordered_json::parse(line));
            } catch (const std::exception& e) {
                ++violations;
                by_code["ParseError"]++;
                std::cerr << shard.name << ":" << lineno << ": " << e.what() << "\n";
                continue;
            }
            ActionTrace trace;
            try {
                ParsedResponse parsed = parse_trace(rec.response);
                trace.chain_of_thought = parsed.chain_of_thought;
                trace.script = parsed.script;
            } catch (const std::exception& e) {
                ++violations;
                by_code["ParseError"]++;
                std::cerr << shard.name << ":" << lineno << ": " << e.what() << "\n";
                continue;
            }
            trace.coordinate_map = rec.coordinate_map;
            trace.used_elements = rec.used_elements;
            trace.action_type = rec.action_type;
            // without the source scene, bounds default to the coordinate
            // space limit and element existence is record-internal
            double limit = rec.coordinate_space == CoordinateSpace::Normalized ? 1.0 : 1e9;
            ValidationReport vr = validate_trace(trace, rec.used_elements, limit, limit,
                                                 rec.coordinate_space);
            for (const auto& v : vr.violations) {
                ++violations;
                by_code[v.code]++;
                std::cerr << shard.name << ":" << lineno << ": " << v.code << " " << v.detail
                          << "\n";
            }
        }
    }
    for (const auto& [code, n] : by_code) std::printf("%s: %zu\n", code.c_str(), n);
    std::printf(violations ? "INVALID (%zu violations)\n" : "OK (%zu violations)\n", violations);
    return violations ? kExitValidation : kExitOk;
}

int cmd_stats(const std::string& dir) {
    DatasetStats stats = dataset_stats(dir);
    std::cout << stats_to_json(stats).dump(2) << "\n";
    ShardManifest manifest = load_manifest(dir);
    if (stats.total != manifest.total) {
        std::cerr << "manifest totals disagree with shard contents\n";
        return kExitValidation;
    }
    return stats.invalid ? kExitValidation : kExitOk;
}

int cmd_mix(const std::map<std::string, std::string>& inputs, const std::string& weights_arg,
            const std::string& out, uint64_t seed, size_t max_items, size_t shard_size) {
    MixWeights weights = MixWeights::defaults();
    if (!weights_arg.empty()) {
        weights.weights.clear();
        std::stringstream ss(weights_arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("weights: MODALITY=W,...");
            weights.weights.emplace_back(item.substr(0, eq), std::stod(item.substr(eq + 1)));
        }
    } else {
        // absent sources fall out of the default weights
        std::vector<std::pair<std::string, double>> present;
        double sum = 0.0;
        for (const auto& [m, w] : weights.weights)
            if (inputs.count(m)) {
                present.emplace_back(m, w);
                sum += w;
            }
        for (auto& [m, w] : present) w /= sum;
        weights.weights = present;
    }
    std::vector<RecordSource> sources;
    for (const auto& [modality, dir] : inputs)
        sources.push_back(vector_source(modality, read_all_shards(dir)));
    Rng rng(seed);
    std::vector<DatasetRecord> mixed = mix_stream(sources, weights, rng, max_items, &std::cerr);
    ShardManifest manifest = write_shards(mixed, out, shard_size);
    std::printf("mixed records: %zu\n", manifest.total);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic action-grounding data generator and benchmark judge"};
    app.require_subcommand(1);

    GenConfig gen;
    std::string size_arg;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a dataset for one modality");
    gen_cmd->require_subcommand(1);
    for (const char* mod : {"canvas", "table", "text", "image"}) {
        CLI::App* sub = gen_cmd->add_subcommand(mod, std::string("generate ") + mod + " data");
        sub->add_option("--count", gen.count, "number of scenes");
        sub->add_option("--seed", gen.seed, "global seed");
        sub->add_option("--out", gen.out, "output directory");
        sub->add_option("--workers", gen.workers, "worker threads");
        sub->add_option("--shard-size", gen.shard_size, "records per shard");
        sub->add_option("--size", size_arg, "fixed WxH, e.g. 1280x720");
        sub->add_option("--per-task", gen.per_task, "records per detailed task per scene");
        if (std::string(mod) == "image")
            sub->add_option("--masks", gen.masks_dir, "directory of mask PNGs + captions.json");
        if (std::string(mod) == "text")
            sub->add_option("--fonts", gen.fonts_dir, "directory of bitmap-font JSON files");
    }

    std::string suite_path, pred_path, report_path;
    CLI::App* eval_cmd = app.add_subcommand("eval", "judge predictions against a benchmark suite");
    eval_cmd->add_option("--suite", suite_path, "benchmark suite JSON")->required();
    eval_cmd->add_option("--pred", pred_path, "predictions JSONL")->required();
    eval_cmd->add_option("--report", report_path, "report JSON output path");

    std::string validate_dir;
    CLI::App* validate_cmd = app.add_subcommand("validate", "validate dataset shards");
    validate_cmd->add_option("dir", validate_dir, "shard directory")->required();

    std::string stats_dir;
    CLI::App* stats_cmd = app.add_subcommand("stats", "dataset statistics");
    stats_cmd->add_option("dir", stats_dir, "shard directory")->required();

    std::vector<std::string> mix_inputs;
    std::string mix_weights, mix_out = "mixed";
    uint64_t mix_seed = 0;
    size_t mix_max = SIZE_MAX, mix_shard = 1000;
    CLI::App* mix_cmd = app.add_subcommand("mix", "interleave datasets by modality weights");
    mix_cmd->add_option("--input", mix_inputs, "MODALITY=shard_dir (repeatable)")->required();
    mix_cmd->add_option("--weights", mix_weights, "MODALITY=W,... (defaults to the stock mix)");
    mix_cmd->add_option("--out", mix_out, "output directory");
    mix_cmd->add_option("--seed", mix_seed, "mix seed");
    mix_cmd->add_option("--max", mix_max, "stop after N records");
    mix_cmd->add_option("--shard-size", mix_shard, "records per shard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (!size_arg.empty()) {
            size_t x = size_arg.find('x');
            if (x == std::string::npos) throw std::invalid_argument("--size expects WxH");
            gen.fixed_w = std::stoi(size_arg.substr(0, x));
            gen.fixed_h = std::stoi(size_arg.substr(x + 1));
        }
        if (gen_cmd->parsed()) {
            if (gen_cmd->got_subcommand("canvas")) return cmd_gen_canvas(gen);
            if (gen_cmd->got_subcommand("table")) return cmd_gen_table(gen);
            if (gen_cmd->got_subcommand("text")) return cmd_gen_text(gen);
            if (gen_cmd->got_subcommand("image")) return cmd_gen_image(gen);
        }
        if (eval_cmd->parsed()) return cmd_eval(suite_path, pred_path, report_path);
        if (validate_cmd->parsed()) return cmd_validate(validate_dir);
        if (stats_cmd->parsed()) return cmd_stats(stats_dir);
        if (mix_cmd->parsed()) {
            std::map<std::string, std::string> inputs;
            for (const std::string& item : mix_inputs) {
                size_t eq = item.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("--input expects MODALITY=dir");
                inputs[item.substr(0, eq)] = item.substr(eq + 1);
            }
            return cmd_mix(inputs, mix_weights, mix_out, mix_seed, mix_max, mix_shard);
        }
    } catch (const SuiteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
