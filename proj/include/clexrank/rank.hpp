#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "clexrank/corpus_io.hpp"
#include "clexrank/graph.hpp"

namespace clexrank {

struct RankScores {
    std::vector<double> scores;
    std::string method;
    std::size_t iterations = 0;
    /// L1 change of the last iteration.
    double residual = 0.0;
};

struct Ordering {
    /// Permutation of vertex indices.
    std::vector<std::size_t> order;
    std::string method;
    std::optional<std::uint64_t> seed;
};

struct Convergence {
    double tolerance = 1e-8;
    std::size_t max_iterations = 10000;
};

inline constexpr double kDefaultLexRankThreshold = 0.10;
inline constexpr double kDefaultLexRankDamping = 0.85;
inline constexpr double kDefaultDivRankLambda = 0.90;
inline constexpr double kDefaultDivRankAlpha = 0.25;
inline constexpr double kDefaultLengthPriorBeta = 0.1;

/// Stationary distribution of p = (1 - d)/n + d P^T p on the graph binarized at
/// weight > threshold. Rows without neighbors jump uniformly.
RankScores lexrank(const SimilarityGraph& g, double threshold = kDefaultLexRankThreshold,
                   double damping = kDefaultLexRankDamping, Convergence conv = {});

/// Vertex-reinforced walk with visit counts approximated by the current scores:
///   p'(j) = (1 - lambda) prior(j) + lambda sum_i p(i) p0(i, j) p(j) / D(i)
/// with p0(u, v) = alpha w(u, v) / deg(u) off the diagonal and 1 - alpha on it.
/// Zero-degree vertices get p0(u, u) = 1. An empty prior means uniform.
RankScores divrank(const SimilarityGraph& g, double lambda = kDefaultDivRankLambda,
                   double alpha = kDefaultDivRankAlpha, std::span<const double> prior = {},
                   Convergence conv = {});

/// prior(j) proportional to max(word_count, 1)^-beta, normalized.
std::vector<double> divrank_prior_from_length(const CitationSet& cs,
                                              double beta = kDefaultLengthPriorBeta);

/// Descending score, ascending index on ties.
Ordering ordering_from_scores(const RankScores& scores);

/// First pick maximizes total similarity; each later pick minimizes its maximum
/// similarity to the picks so far. Ties go to the lower index.
Ordering mmr_order(const SimilarityGraph& g);

/// Seeded Fisher-Yates shuffle of 0..n-1.
Ordering random_order(std::size_t n, std::uint64_t seed);
inline Ordering random_order(const CitationSet& cs, std::uint64_t seed) {
    return random_order(cs.size(), seed);
}

/// `node_id<TAB>score` sorted descending, 6 decimals.
void write_scores_tsv(std::ostream& out, const SimilarityGraph& g, const RankScores& scores);

}  // namespace clexrank
