#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "clexrank/community.hpp"
#include "clexrank/corpus_io.hpp"
#include "clexrank/graph.hpp"
#include "clexrank/rank.hpp"

namespace clexrank {

inline constexpr std::size_t kUnlimitedBudget = std::numeric_limits<std::size_t>::max();

struct SummaryEntry {
    std::string id;
    std::string text;
    std::size_t words = 0;
    bool truncated = false;
    std::optional<std::size_t> cluster;

    bool operator==(const SummaryEntry&) const = default;
};

struct Summary {
    std::vector<SummaryEntry> entries;
    std::size_t total_words = 0;
    std::string method;
    std::size_t budget = 0;
    std::string target_id;
    std::optional<std::uint64_t> seed;

    bool operator==(const Summary&) const = default;
};

/// Appends sentences until the word budget is met; the last one is cut at the budget.
class SummaryBuilder {
public:
    SummaryBuilder(const CitationSet& cs, std::size_t budget, std::string method);

    bool full() const { return summary_.total_words >= summary_.budget; }
    /// Returns false (and adds nothing) once the budget is exhausted.
    bool add(std::size_t sentence, std::optional<std::size_t> cluster = std::nullopt);
    Summary finish() &&;

private:
    const CitationSet& cs_;
    Summary summary_;
};

Summary assemble_from_ordering(const CitationSet& cs, const Ordering& order, std::size_t budget);

struct ClusteredSummaryOptions {
    double lexrank_threshold = kDefaultLexRankThreshold;
    double lexrank_damping = kDefaultLexRankDamping;
    /// Test hook: put every sentence in one cluster instead of running CNM.
    bool force_single_cluster = false;
};

/// Clusters in decreasing size; ties by larger internal weight, then lower index.
std::vector<std::size_t> cluster_visit_order(const SimilarityGraph& g, const Clustering& c);

/// Round-robin over clusters, taking each cluster's next most LexRank-salient
/// sentence (LexRank on the cluster-induced subgraph).
Summary c_lexrank_summary(const CitationSet& cs, const SimilarityGraph& g, std::size_t budget,
                          const ClusteredSummaryOptions& options = {});
Summary c_lexrank_summary(const CitationSet& cs, const SimilarityGraph& g,
                          const Clustering& clustering, std::size_t budget,
                          const ClusteredSummaryOptions& options = {});

/// Same cluster order as C-LexRank, uniformly random pick within each cluster.
Summary c_rr_summary(const CitationSet& cs, const SimilarityGraph& g, std::size_t budget,
                     std::uint64_t seed);
Summary c_rr_summary(const CitationSet& cs, const SimilarityGraph& g,
                     const Clustering& clustering, std::size_t budget, std::uint64_t seed);

/// `# method=<m> budget=<b> words=<n>` then one sentence per line.
void write_summary_text(std::ostream& out, const Summary& s);
nlohmann::json summary_to_json(const Summary& s);
Summary summary_from_json(const nlohmann::json& j);

}  // namespace clexrank
