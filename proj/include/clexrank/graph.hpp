#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "clexrank/corpus_io.hpp"
#include "clexrank/idf.hpp"

namespace clexrank {

/// Weighted undirected sentence graph stored as a dense symmetric matrix.
/// Weights lie in [0, 1] and the diagonal is zero.
class SimilarityGraph {
public:
    SimilarityGraph() = default;
    /// weights is row-major n*n; throws ValidationError on asymmetry, a nonzero
    /// diagonal, or a value outside [0, 1].
    SimilarityGraph(std::vector<std::string> nodes, std::vector<double> weights);

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    const std::string& node(std::size_t i) const { return nodes_[i]; }
    std::span<const std::string> nodes() const { return nodes_; }

    double weight(std::size_t i, std::size_t j) const { return weights_[i * nodes_.size() + j]; }
    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(weights_).subspan(i * nodes_.size(), nodes_.size());
    }
    /// Sum of incident edge weights.
    double strength(std::size_t i) const;
    /// Undirected edges counted once.
    double total_weight() const;

    /// Subgraph on the given vertices, in the given order.
    SimilarityGraph induced(std::span<const std::size_t> vertices) const;

    /// Neighbor lists of the graph with an edge iff weight > threshold.
    std::vector<std::vector<std::size_t>> binarize(double threshold) const;
    std::size_t edge_count(double threshold) const;

private:
    std::vector<std::string> nodes_;
    std::vector<double> weights_;
};

/// w(i, j) = cosine of the TF-IDF vectors of the sentences' tokens. No thresholding.
SimilarityGraph build_citation_summary_network(const CitationSet& cs, const IdfTable& idf);

/// Mean local clustering coefficient of the binarized graph; c_i = 0 when
/// degree < 2, and C = 0 for the empty graph.
double clustering_coefficient(const SimilarityGraph& g, double threshold);

struct PathStats {
    /// Mean hop distance over connected pairs; +inf when no pair is connected.
    double mean_length = 0.0;
    double disconnected_fraction = 0.0;
    std::size_t connected_pairs = 0;
    std::size_t total_pairs = 0;
};

PathStats average_shortest_path(const SimilarityGraph& g, double threshold);

/// Undirected DOT of the binarized graph; edge labels use 4 decimals.
void write_dot(std::ostream& out, const SimilarityGraph& g, double threshold);

}  // namespace clexrank
