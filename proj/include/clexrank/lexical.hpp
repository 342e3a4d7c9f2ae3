#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "clexrank/idf.hpp"

namespace clexrank {

struct TokenizerOptions {
    bool lowercase = true;
    /// Delete every ASCII byte that is not a letter or digit ("O(n3)" -> "on3").
    /// Bytes >= 0x80 are kept so UTF-8 words survive intact.
    bool strip_punctuation = true;
    /// Compared after lowercasing and stripping.
    std::unordered_set<std::string> stopwords;
};

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options);

/// Raw whitespace split; the unit for word budgets.
std::vector<std::string_view> whitespace_words(std::string_view text);
std::size_t count_words(std::string_view text);

/// Sparse non-negative term weights, sorted by term, with a cached L2 norm.
class TermVector {
public:
    using Entry = std::pair<std::string, double>;

    TermVector() = default;
    /// Entries may arrive in any order; duplicates are summed and zeros dropped.
    explicit TermVector(std::vector<Entry> entries);

    std::span<const Entry> entries() const { return entries_; }
    double weight(std::string_view term) const;
    double norm() const { return norm_; }
    bool empty() const { return entries_.empty(); }

    TermVector scaled(double factor) const;

private:
    std::vector<Entry> entries_;
    double norm_ = 0.0;
};

/// weight(t) = raw count of t in tokens * idf(t).
TermVector tfidf_vector(std::span<const std::string> tokens, const IdfTable& idf);

double dot(const TermVector& u, const TermVector& v);

/// dot / (|u| |v|), clamped to [0, 1]; 0 when either vector has zero norm.
double cosine_similarity(const TermVector& u, const TermVector& v);

}  // namespace clexrank
