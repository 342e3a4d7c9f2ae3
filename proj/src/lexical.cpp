#include "clexrank/lexical.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_map>

#include "clexrank/errors.hpp"

namespace clexrank {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool keep_byte(unsigned char c) {
    return c >= 0x80 || (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

}  // namespace

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open stopword list " + path.string());
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        words.insert(line);
    }
    return words;
}

std::vector<std::string_view> whitespace_words(std::string_view text) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (i > start) words.push_back(text.substr(start, i - start));
    }
    return words;
}

std::size_t count_words(std::string_view text) { return whitespace_words(text).size(); }

std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options) {
    std::vector<std::string> tokens;
    for (auto word : whitespace_words(text)) {
        std::string token;
        token.reserve(word.size());
        for (char c : word) {
            auto u = static_cast<unsigned char>(c);
            if (options.strip_punctuation && !keep_byte(u)) continue;
            if (options.lowercase && u >= 'A' && u <= 'Z') c = static_cast<char>(u - 'A' + 'a');
            token.push_back(c);
        }
        if (token.empty() || options.stopwords.contains(token)) continue;
        tokens.push_back(std::move(token));
    }
    return tokens;
}

TermVector::TermVector(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& e : entries) {
        if (!entries_.empty() && entries_.back().first == e.first) {
            entries_.back().second += e.second;
        } else {
            entries_.push_back(std::move(e));
        }
    }
    std::erase_if(entries_, [](const Entry& e) { return e.second == 0.0; });
    double sq = 0.0;
    for (const auto& e : entries_) sq += e.second * e.second;
    norm_ = std::sqrt(sq);
}

double TermVector::weight(std::string_view term) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), term,
                               [](const Entry& e, std::string_view t) { return e.first < t; });
    return (it != entries_.end() && it->first == term) ? it->second : 0.0;
}

TermVector TermVector::scaled(double factor) const {
    std::vector<Entry> out(entries_.begin(), entries_.end());
    for (auto& e : out) e.second *= factor;
    return TermVector(std::move(out));
}

TermVector tfidf_vector(std::span<const std::string> tokens, const IdfTable& idf) {
    std::unordered_map<std::string_view, double> tf;
    for (const auto& t : tokens) tf[t] += 1.0;
    std::vector<TermVector::Entry> entries;
    entries.reserve(tf.size());
    for (const auto& [term, count] : tf) entries.emplace_back(std::string(term), count * idf.lookup(term));
    return TermVector(std::move(entries));
}

double dot(const TermVector& u, const TermVector& v) {
    auto a = u.entries();
    auto b = v.entries();
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            ++i;
        } else if (b[j].first < a[i].first) {
            ++j;
        } else {
            sum += a[i].second * b[j].second;
            ++i;
            ++j;
        }
    }
    return sum;
}

double cosine_similarity(const TermVector& u, const TermVector& v) {
    if (u.norm() == 0.0 || v.norm() == 0.0) return 0.0;
    return std::clamp(dot(u, v) / (u.norm() * v.norm()), 0.0, 1.0);
}

}  // namespace clexrank
