#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace pong {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct Request {
    std::string command;
    std::optional<int> m, k;
    std::optional<int> cap2; // doubled weight cap
    std::string algebra = "pong";
    std::string x, y, w;
    std::string inputs, start;
    bool quotient = false;
    size_t triples = 10000;
    uint64_t seed = 0x5eed;
    bool tikz = false;
    int workers = 1; // never part of the echo or the cache key
};

// Canonical echo of the request; only fields the command reads.
nlohmann::json request_json(const Request& r);
std::string cache_key(const Request& r);

// Throws UsageError on bad parameters.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json run(const Request& r);

enum class CacheMode { Use, Bypass, Verify };

struct CacheOutcome {
    bool hit = false;
    bool verified = true; // Verify mode: cached report equals a fresh one
};

// With a directory, reads or writes <dir>/<key>.json. Verify recomputes and compares.
nlohmann::json run_cached(const Request& r, const std::optional<std::filesystem::path>& dir, CacheMode mode,
                          CacheOutcome* outcome = nullptr);

bool report_pass(const nlohmann::json& report);
std::string render_json(const nlohmann::json& report);
std::string render_csv(const nlohmann::json& report);
std::string render_pretty(const nlohmann::json& report);

const std::vector<std::string>& command_names();

}  // namespace pong
