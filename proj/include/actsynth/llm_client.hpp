#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "actsynth/taskgen.hpp"

namespace actsynth {

// Chat-completions-shaped transport for the optional LLM task-generation
// path. Configured from the environment:
//   ACTSYNTH_LLM_ENDPOINT   full URL, e.g. https://host/v1/chat/completions
//   ACTSYNTH_LLM_KEY_VAR    name of the env var holding the bearer token
//   ACTSYNTH_LLM_MODEL      model name passed through verbatim
// Caller-supplied params are forwarded untouched. Nothing in the build or
// test suite requires this path; generation defaults to templates.
struct LlmConfig {
    std::string endpoint;
    std::string api_key;         // resolved token, may be empty
    std::string model;
    nlohmann::ordered_json params;  // merged into the request body
    int timeout_seconds = 120;
    int concurrency = 4;
    std::optional<std::filesystem::path> debug_log;  // JSONL request/response log

    static std::optional<LlmConfig> from_environment();
};

// Request body for one call; exposed separately so it can be tested offline.
nlohmann::ordered_json chat_request_body(const LlmConfig& config, const LlmRequest& request);

// Blocking single call. Throws std::runtime_error on transport errors.
std::string call_llm(const LlmConfig& config, const LlmRequest& request);

// Bounded-concurrency pool; results are ordered by request index. A failed
// request yields an empty string in its slot (and a log line when enabled).
std::vector<std::string> call_llm_batch(const LlmConfig& config,
                                        const std::vector<LlmRequest>& requests);

}  // namespace actsynth
