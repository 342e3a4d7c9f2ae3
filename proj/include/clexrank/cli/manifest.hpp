#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clexrank/corpus_io.hpp"

namespace clexrank::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_bytes(std::string_view bytes);

class StageTimer {
public:
    void start(std::string stage);
    void stop();
    const std::vector<std::pair<std::string, double>>& stages() const { return stages_; }

private:
    std::string current_;
    std::chrono::steady_clock::time_point began_;
    std::vector<std::pair<std::string, double>> stages_;
};

struct RunManifest {
    std::string command;
    RunConfig config;
    /// Input path (as given) -> SHA-256.
    std::map<std::string, std::string> inputs;
    std::vector<std::string> outputs;
    /// Stage name -> milliseconds; only written when record_timings is set,
    /// since wall-clock values would break byte-identical reruns.
    std::vector<std::pair<std::string, double>> timings;
    bool record_timings = false;

    void add_input(const std::filesystem::path& path);
    nlohmann::ordered_json to_json() const;
};

/// Buffers output files and commits them together with write-temp-then-rename,
/// so a failing command leaves no partial files behind.
class OutputSet {
public:
    void add(std::filesystem::path path, std::string contents);
    void commit();
    std::vector<std::string> paths() const;

private:
    std::vector<std::pair<std::filesystem::path, std::string>> files_;
};

}  // namespace clexrank::cli
