#include "clexrank/graph.hpp"

#include <cstdio>
#include <deque>
#include <limits>

#include "clexrank/errors.hpp"
#include "clexrank/lexical.hpp"

namespace clexrank {

SimilarityGraph::SimilarityGraph(std::vector<std::string> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    const std::size_t n = nodes_.size();
    if (weights_.size() != n * n) throw ValidationError("weight matrix must be n*n");
    for (std::size_t i = 0; i < n; ++i) {
        if (weight(i, i) != 0.0) throw ValidationError("graph diagonal must be zero");
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = weight(i, j);
            if (!(w >= 0.0 && w <= 1.0)) throw ValidationError("edge weight outside [0, 1]");
            if (w != weight(j, i)) throw ValidationError("weight matrix must be symmetric");
        }
    }
}

double SimilarityGraph::strength(std::size_t i) const {
    double s = 0.0;
    for (double w : row(i)) s += w;
    return s;
}

double SimilarityGraph::total_weight() const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) s += weight(i, j);
    }
    return s;
}

SimilarityGraph SimilarityGraph::induced(std::span<const std::size_t> vertices) const {
    const std::size_t m = vertices.size();
    std::vector<std::string> nodes;
    nodes.reserve(m);
    std::vector<double> w(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
        nodes.push_back(nodes_[vertices[a]]);
        for (std::size_t b = 0; b < m; ++b) {
            if (a != b) w[a * m + b] = weight(vertices[a], vertices[b]);
        }
    }
    return SimilarityGraph(std::move(nodes), std::move(w));
}

std::vector<std::vector<std::size_t>> SimilarityGraph::binarize(double threshold) const {
    std::vector<std::vector<std::size_t>> adj(size());
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            if (i != j && weight(i, j) > threshold) adj[i].push_back(j);
        }
    }
    return adj;
}

std::size_t SimilarityGraph::edge_count(double threshold) const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) count += weight(i, j) > threshold ? 1 : 0;
    }
    return count;
}

SimilarityGraph build_citation_summary_network(const CitationSet& cs, const IdfTable& idf) {
    const std::size_t n = cs.size();
    std::vector<TermVector> vectors;
    vectors.reserve(n);
    std::vector<std::string> nodes;
    nodes.reserve(n);
    for (const auto& s : cs.sentences) {
        vectors.push_back(tfidf_vector(s.tokens, idf));
        nodes.push_back(s.id);
    }
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double c = cosine_similarity(vectors[i], vectors[j]);
            w[i * n + j] = c;
            w[j * n + i] = c;
        }
    }
    return SimilarityGraph(std::move(nodes), std::move(w));
}

double clustering_coefficient(const SimilarityGraph& g, double threshold) {
    if (g.empty()) return 0.0;
    const auto adj = g.binarize(threshold);
    double total = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& nb = adj[i];
        const std::size_t k = nb.size();
        if (k < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) links += g.weight(nb[a], nb[b]) > threshold ? 1 : 0;
        }
        total += static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1) / 2.0);
    }
    return total / static_cast<double>(g.size());
}

PathStats average_shortest_path(const SimilarityGraph& g, double threshold) {
    PathStats stats;
    const std::size_t n = g.size();
    stats.total_pairs = n < 2 ? 0 : n * (n - 1) / 2;
    const auto adj = g.binarize(threshold);
    std::size_t sum = 0;
    std::vector<std::size_t> dist(n);
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[src] = 0;
        std::deque<std::size_t> queue{src};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto v : adj[u]) {
                if (dist[v] == unseen) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (std::size_t dst = src + 1; dst < n; ++dst) {
            if (dist[dst] != unseen) {
                ++stats.connected_pairs;
                sum += dist[dst];
            }
        }
    }
    stats.mean_length = stats.connected_pairs == 0
                            ? std::numeric_limits<double>::infinity()
                            : static_cast<double>(sum) / static_cast<double>(stats.connected_pairs);
    stats.disconnected_fraction =
        stats.total_pairs == 0 ? 0.0
                               : static_cast<double>(stats.total_pairs - stats.connected_pairs) /
                                     static_cast<double>(stats.total_pairs);
    return stats;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

void write_dot(std::ostream& out, const SimilarityGraph& g, double threshold) {
    out << "graph citation_summary_network {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        out << "  " << i << " [label=" << dot_quote(g.node(i)) << "];\n";
    }
    char buf[32];
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (g.weight(i, j) > threshold) {
                std::snprintf(buf, sizeof buf, "%.4f", g.weight(i, j));
                out << "  " << i << " -- " << j << " [label=\"" << buf << "\"];\n";
            }
        }
    }
    out << "}\n";
}

}  // namespace clexrank
