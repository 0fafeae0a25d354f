#include "actsynth/llm_client.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <httplib.h>

namespace actsynth {

using ordered_json = nlohmann::ordered_json;

std::optional<LlmConfig> LlmConfig::from_environment() {
    const char* endpoint = std::getenv("ACTSYNTH_LLM_ENDPOINT");
    if (!endpoint || !*endpoint) return std::nullopt;
    LlmConfig cfg;
    cfg.endpoint = endpoint;
    if (const char* key_var = std::getenv("ACTSYNTH_LLM_KEY_VAR")) {
        if (const char* key = std::getenv(key_var)) cfg.api_key = key;
    }
    if (const char* model = std::getenv("ACTSYNTH_LLM_MODEL")) cfg.model = model;
    cfg.params = ordered_json::object();
    return cfg;
}

ordered_json chat_request_body(const LlmConfig& config, const LlmRequest& request) {
    ordered_json body;
    if (!config.model.empty()) body["model"] = config.model;
    ordered_json user;
    user["image"] = request.image_ref;
    user["elements"] = request.elements_payload;
    body["messages"] = ordered_json::array(
        {{{"role", "system"}, {"content", request.system_prompt}},
         {{"role", "user"}, {"content", user.dump()}}});
    for (const auto& [k, v] : config.params.items()) body[k] = v;
    return body;
}

namespace {

std::pair<std::string, std::string> split_endpoint(const std::string& url) {
    size_t scheme = url.find("://");
    if (scheme == std::string::npos) throw std::runtime_error("endpoint needs a scheme: " + url);
    size_t path = url.find('/', scheme + 3);
    if (path == std::string::npos) return {url, "/"};
    return {url.substr(0, path), url.substr(path)};
}

}  // namespace

std::string call_llm(const LlmConfig& config, const LlmRequest& request) {
    auto [host, path] = split_endpoint(config.endpoint);
    httplib::Client client(host);
    client.set_read_timeout(config.timeout_seconds, 0);
    client.set_connection_timeout(10, 0);
    httplib::Headers headers;
    if (!config.api_key.empty()) headers.emplace("Authorization", "Bearer " + config.api_key);
    std::string body = chat_request_body(config, request).dump();
    auto res = client.Post(path, headers, body, "application/json");
    if (!res) throw std::runtime_error("llm transport error: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw std::runtime_error("llm endpoint returned status " + std::to_string(res->status));
    ordered_json j = ordered_json::parse(res->body);
    // chat-completions shape; fall back to the raw body
    if (j.contains("choices") && !j["choices"].empty()) {
        const auto& msg = j["choices"][0];
        if (msg.contains("message") && msg["message"].contains("content"))
            return msg["message"]["content"].get<std::string>();
    }
    return res->body;
}

std::vector<std::string> call_llm_batch(const LlmConfig& config,
                                        const std::vector<LlmRequest>& requests) {
    std::vector<std::string> results(requests.size());
    std::atomic<size_t> next{0};
    std::mutex log_mutex;
    std::ofstream log;
    if (config.debug_log) log.open(*config.debug_log, std::ios::app);

    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= requests.size()) return;
            std::string response;
            std::string error;
            try {
                response = call_llm(config, requests[i]);
            } catch (const std::exception& e) {
                error = e.what();
            }
            results[i] = response;
            if (log.is_open()) {
                std::lock_guard<std::mutex> lock(log_mutex);
                ordered_json line;
                line["index"] = i;
                line["request"] = chat_request_body(config, requests[i]);
                if (!error.empty()) line["error"] = error;
                else line["response"] = response;
                log << line.dump() << "\n";
            }
        }
    };
    int n = std::max(1, std::min<int>(config.concurrency, int(requests.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace actsynth
