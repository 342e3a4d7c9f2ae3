#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clexrank/corpus_io.hpp"
#include "clexrank/summarize.hpp"

namespace clexrank {

/// Factoids grouped by the number of sentences that mention them.
struct Pyramid {
    std::map<std::size_t, std::set<std::string>> tiers;
    std::size_t top_tier = 0;

    /// Tier index of a factoid, 0 if it is not in the pyramid.
    std::size_t tier_of(const std::string& factoid) const;
    std::size_t factoid_count() const;
};

Pyramid build_pyramid(const FactoidAnnotation& ann);

struct PyramidReport {
    std::string method;
    std::size_t budget = 0;
    /// Summary sentence count, the size of the optimal summary compared against.
    std::size_t x = 0;
    std::size_t factoids_covered = 0;
    /// Covered weight before capping at max.
    double d = 0.0;
    double max = 0.0;
    /// min(d, max) / max, or 1 when max is 0.
    double score = 0.0;
};

/// Each distinct covered factoid adds its weight once. Weights are tier indices,
/// or the annotation's factoid_weights when present (then max is the sum of the
/// x heaviest weights).
PyramidReport pyramid_score(const Summary& summary, const FactoidAnnotation& ann,
                            const Pyramid& pyramid);

/// Optimal weight of an x-factoid summary.
double pyramid_max(const Pyramid& pyramid, std::size_t x);

/// Agreement over n-gram windows of whitespace tokens. A window is "in" for an
/// annotator when each of its tokens lies inside one of that annotator's spans.
/// Throws ValidationError when no sentence has n tokens.
double ngram_kappa(const NuggetSpanAnnotation& a, const NuggetSpanAnnotation& b,
                   const CitationSet& cs, std::size_t n, ChanceModel model = ChanceModel::cohen);

/// ROUGE-N recall. Without jackknifing, clipped matches and reference counts pool
/// over all references. With it, each leave-one-out subset scores the best single
/// held-in reference and the subset scores are averaged.
double rouge_n(std::string_view candidate, std::span<const std::string> references, std::size_t n,
               bool jackknife);

/// Tokens used for ROUGE: lowercased, punctuation stripped, no stopword removal.
std::vector<std::string> rouge_tokens(std::string_view text);

}  // namespace clexrank
