#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "clexrank/errors.hpp"
#include "clexrank/idf.hpp"
#include "clexrank/lexical.hpp"

namespace clexrank {

enum class SourceKind { citations, abstracts, full_papers };

std::string_view to_string(SourceKind kind);
/// Accepts "citations", "abstracts", "full_papers" (or "full-papers").
SourceKind parse_source_kind(std::string_view name);

struct Sentence {
    std::string id;
    std::string text;
    std::vector<std::string> tokens;
    std::size_t word_count = 0;
    std::string source_doc;

    bool operator==(const Sentence&) const = default;
};

struct CitationSet {
    std::string target_id;
    std::vector<Sentence> sentences;
    SourceKind source_kind = SourceKind::citations;

    std::size_t size() const { return sentences.size(); }
    std::optional<std::size_t> index_of(std::string_view id) const;

    bool operator==(const CitationSet&) const = default;
};

/// Builds a validated set from (id, text, source_doc) triples; tokens and
/// word counts are derived here.
CitationSet make_citation_set(std::string target_id, SourceKind kind,
                              std::vector<Sentence> sentences,
                              const TokenizerOptions& tokenizer = {});

CitationSet parse_citation_set(std::istream& in, std::string target_id, SourceKind kind,
                               const TokenizerOptions& tokenizer = {});
/// target_id is taken from the file stem.
CitationSet load_citation_set(const std::filesystem::path& path, SourceKind kind,
                              const TokenizerOptions& tokenizer = {});
/// JSON lines, one {"id","text","source_doc"} object per sentence.
void write_citation_set(std::ostream& out, const CitationSet& cs);

struct FactoidAnnotation {
    std::set<std::string> factoid_ids;
    /// Every sentence of the companion set has an entry, possibly empty.
    std::map<std::string, std::set<std::string>> sentence_factoids;
    std::optional<std::map<std::string, double>> factoid_weights;

    const std::set<std::string>& factoids_of(const std::string& sentence_id) const;
};

/// weights may be null. Rows are `sentence_id<TAB>factoid_id`; weight rows are
/// `factoid_id<TAB>weight`.
FactoidAnnotation parse_factoid_annotation(std::istream& in, const CitationSet& cs,
                                           std::istream* weights = nullptr);
FactoidAnnotation load_factoid_annotation(
    const std::filesystem::path& path, const CitationSet& cs,
    const std::optional<std::filesystem::path>& weights_path = std::nullopt);

/// Byte offsets [start, end) into a sentence's UTF-8 text.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    bool operator==(const Span&) const = default;
};

struct NuggetSpanAnnotation {
    std::string annotator;
    /// Sorted, merged spans per sentence id.
    std::map<std::string, std::vector<Span>> spans;
};

/// Rows `annotator<TAB>sentence_id<TAB>start<TAB>end`; one file may hold several
/// annotators. Result is keyed by annotator name.
std::map<std::string, NuggetSpanAnnotation> parse_nugget_spans(std::istream& in,
                                                               const CitationSet& cs);
std::map<std::string, NuggetSpanAnnotation> load_nugget_spans(const std::filesystem::path& path,
                                                              const CitationSet& cs);

std::string load_reference_summary(const std::filesystem::path& path);

enum class ChanceModel { cohen, scott };

struct RunConfig {
    double lexrank_damping = 0.85;
    double lexrank_edge_threshold = 0.10;
    double divrank_lambda = 0.90;
    double divrank_alpha = 0.25;
    double divrank_beta = 0.1;
    /// Binarization threshold for clustering coefficient and path length.
    double graph_threshold = 0.10;
    std::size_t summary_budget_words = 100;
    std::uint64_t random_seed = 0;
    std::size_t random_trials = 100;
    ChanceModel kappa_chance_model = ChanceModel::cohen;
    TokenizerOptions tokenizer;
    std::optional<std::filesystem::path> stopwords_path;

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

}  // namespace clexrank
