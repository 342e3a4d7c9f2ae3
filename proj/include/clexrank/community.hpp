#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "clexrank/graph.hpp"

namespace clexrank {

struct Clustering {
    /// Cluster index per vertex, dense in [0, cluster_count).
    std::vector<std::size_t> assignment;
    std::size_t cluster_count = 0;
    /// Modularity of the assignment; 0 for graphs without edge weight.
    double q = 0.0;

    std::vector<std::vector<std::size_t>> members() const;
};

/// Relabels clusters densely in order of first appearance.
std::vector<std::size_t> normalize_labels(std::span<const std::size_t> labels);

/// Weighted modularity sum_i e_ii - sum_i a_i^2. Throws std::domain_error when
/// the graph has no vertices or no edge weight.
double modularity(const SimilarityGraph& g, std::span<const std::size_t> assignment);

/// Greedy agglomerative modularity maximization (Clauset-Newman-Moore).
/// Starts from singletons, merges the pair with the largest positive gain,
/// lowest (i, j) on ties, and stops when no merge increases Q.
Clustering cluster_cnm(const SimilarityGraph& g);

/// Wraps an arbitrary assignment as a Clustering, computing its modularity.
Clustering make_clustering(const SimilarityGraph& g, std::span<const std::size_t> assignment);

/// (1/N) sum_k max_j |w_k & c_j|. Both label vectors are per vertex.
double purity(std::span<const std::size_t> clusters, std::span<const std::size_t> classes);
/// I / ((H(clusters) + H(classes)) / 2) with natural logs; 1 when both entropies are 0.
double nmi(std::span<const std::size_t> clusters, std::span<const std::size_t> classes);

double purity(const Clustering& clustering, std::span<const std::string> classes);
double nmi(const Clustering& clustering, std::span<const std::string> classes);

/// `# Q=<value>` header then `node_id<TAB>cluster_index` rows.
void write_clustering_tsv(std::ostream& out, const SimilarityGraph& g, const Clustering& c);

}  // namespace clexrank
