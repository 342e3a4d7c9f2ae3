#include "clexrank/cli/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "clexrank/cli/config.hpp"
#include "clexrank/errors.hpp"

namespace clexrank::cli {

std::string sha256_bytes(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return sha256_bytes(buf.str());
}

void StageTimer::start(std::string stage) {
    stop();
    current_ = std::move(stage);
    began_ = std::chrono::steady_clock::now();
}

void StageTimer::stop() {
    if (current_.empty()) return;
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - began_);
    stages_.emplace_back(std::move(current_), elapsed.count());
    current_.clear();
}

void RunManifest::add_input(const std::filesystem::path& path) { inputs[path.string()] = sha256_file(path); }

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "clexrank";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = config_to_json(config);
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [path, digest] : inputs) j["inputs"][path] = "sha256:" + digest;
    j["outputs"] = outputs;
    if (record_timings) {
        j["timings_ms"] = nlohmann::ordered_json::object();
        for (const auto& [stage, ms] : timings) j["timings_ms"][stage] = ms;
    }
    return j;
}

void OutputSet::add(std::filesystem::path path, std::string contents) {
    files_.emplace_back(std::move(path), std::move(contents));
}

std::vector<std::string> OutputSet::paths() const {
    std::vector<std::string> out;
    for (const auto& [path, contents] : files_) out.push_back(path.string());
    return out;
}

void OutputSet::commit() {
    std::vector<std::filesystem::path> temps;
    try {
        for (const auto& [path, contents] : files_) {
            auto tmp = path;
            tmp += ".tmp";
            if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
            out.close();
            if (!out) throw std::runtime_error("cannot write " + tmp.string());
            temps.push_back(tmp);
        }
    } catch (...) {
        for (const auto& t : temps) std::filesystem::remove(t);
        throw;
    }
    for (std::size_t i = 0; i < files_.size(); ++i) std::filesystem::rename(temps[i], files_[i].first);
}

}  // namespace clexrank::cli
