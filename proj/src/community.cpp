#include "clexrank/community.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "clexrank/errors.hpp"

namespace clexrank {

std::vector<std::vector<std::size_t>> Clustering::members() const {
    std::vector<std::vector<std::size_t>> out(cluster_count);
    for (std::size_t v = 0; v < assignment.size(); ++v) out[assignment[v]].push_back(v);
    return out;
}

std::vector<std::size_t> normalize_labels(std::span<const std::size_t> labels) {
    std::unordered_map<std::size_t, std::size_t> remap;
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (auto l : labels) {
        auto [it, inserted] = remap.try_emplace(l, remap.size());
        out.push_back(it->second);
    }
    return out;
}

double modularity(const SimilarityGraph& g, std::span<const std::size_t> assignment) {
    if (g.empty()) throw std::domain_error("modularity undefined: graph has no vertices");
    if (assignment.size() != g.size()) throw std::invalid_argument("assignment must cover every vertex");
    const auto labels = normalize_labels(assignment);
    const std::size_t k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    // One pass accumulates W, inside and crossing weight, so that a single
    // cluster has inside == W bit for bit and scores exactly 0.
    double total = 0.0;
    std::vector<double> inside(k, 0.0);
    std::vector<double> crossing(k, 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const double w = g.weight(i, j);
            total += w;
            if (labels[i] == labels[j]) {
                inside[labels[i]] += w;
            } else {
                crossing[labels[i]] += w;
                crossing[labels[j]] += w;
            }
        }
    }
    if (!(total > 0.0)) throw std::domain_error("modularity undefined: graph has no edge weight");

    double q = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        const double a = (inside[c] + crossing[c] / 2.0) / total;
        q += inside[c] / total - a * a;
    }
    return q;
}

Clustering make_clustering(const SimilarityGraph& g, std::span<const std::size_t> assignment) {
    Clustering c;
    c.assignment = normalize_labels(assignment);
    c.cluster_count = c.assignment.empty() ? 0 : *std::max_element(c.assignment.begin(), c.assignment.end()) + 1;
    c.q = g.total_weight() > 0.0 ? modularity(g, c.assignment) : 0.0;
    return c;
}

namespace {

// Agglomeration state. Communities are labeled by their smallest vertex, so
// merging j into i with i < j keeps labels stable. e holds half the fraction of
// edge weight between two communities (Newman's convention, so sum e = 1).
class Agglomeration {
public:
    explicit Agglomeration(const SimilarityGraph& g)
        : e_(g.size()), a_(g.size()), best_(g.size()), active_(g.size(), true), parent_(g.size()) {
        const double two_w = 2.0 * g.total_weight();
        for (std::size_t i = 0; i < g.size(); ++i) {
            parent_[i] = i;
            a_[i] = g.strength(i) / two_w;
            q_ -= a_[i] * a_[i];
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (i != j && g.weight(i, j) > 0.0) e_[i][j] = g.weight(i, j) / two_w;
            }
        }
        for (std::size_t i = 0; i < g.size(); ++i) refresh(i);
    }

    // Merges the best pair if it raises Q; returns false at a local maximum.
    bool step() {
        std::size_t bi = kNone;
        for (std::size_t i = 0; i < best_.size(); ++i) {
            if (!active_[i] || best_[i].partner == kNone) continue;
            if (bi == kNone || best_[i].gain > best_[bi].gain + kTieTolerance) bi = i;
        }
        if (bi == kNone || !(best_[bi].gain > kMinGain)) return false;
        merge(bi, best_[bi].partner);
        return true;
    }

    double q() const { return q_; }

    std::vector<std::size_t> labels() const {
        std::vector<std::size_t> out(parent_.size());
        for (std::size_t v = 0; v < parent_.size(); ++v) out[v] = find(v);
        return out;
    }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    static constexpr double kTieTolerance = 1e-13;
    static constexpr double kMinGain = 1e-12;

    struct Best {
        double gain = 0.0;
        std::size_t partner = kNone;
    };

    double gain(std::size_t i, std::size_t j, double eij) const { return 2.0 * (eij - a_[i] * a_[j]); }

    // Best merge among pairs (i, j) with j > i; std::map iterates j ascending.
    void refresh(std::size_t i) {
        Best b;
        for (const auto& [j, eij] : e_[i]) {
            if (j < i) continue;
            const double dq = gain(i, j, eij);
            if (b.partner == kNone || dq > b.gain + kTieTolerance) b = {dq, j};
        }
        best_[i] = b;
    }

    void merge(std::size_t i, std::size_t j) {
        q_ += gain(i, j, e_[i].at(j));
        for (const auto& [k, ejk] : e_[j]) {
            if (k == i) continue;
            e_[i][k] += ejk;
            e_[k].erase(j);
            e_[k][i] += ejk;
        }
        e_[i].erase(j);
        e_[j].clear();
        a_[i] += a_[j];
        a_[j] = 0.0;
        active_[j] = false;
        best_[j] = {};
        parent_[j] = i;
        refresh(i);
        for (const auto& [k, eik] : e_[i]) {
            if (k < i) refresh(k);
        }
        // Pairs (k, j) stored at k < j may have pointed at j.
        for (std::size_t k = 0; k < best_.size(); ++k) {
            if (active_[k] && best_[k].partner == j) refresh(k);
        }
    }

    std::size_t find(std::size_t v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    std::vector<std::map<std::size_t, double>> e_;
    std::vector<double> a_;
    std::vector<Best> best_;
    std::vector<bool> active_;
    std::vector<std::size_t> parent_;
    double q_ = 0.0;
};

}  // namespace

Clustering cluster_cnm(const SimilarityGraph& g) {
    Clustering c;
    if (g.empty()) return c;
    if (!(g.total_weight() > 0.0)) {
        // Nothing connects: every vertex is its own community.
        std::vector<std::size_t> singletons(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) singletons[i] = i;
        c.assignment = normalize_labels(singletons);
        c.cluster_count = g.size();
        c.q = 0.0;
        return c;
    }
    Agglomeration agg(g);
    while (agg.step()) {
    }
    c.assignment = normalize_labels(agg.labels());
    c.cluster_count = *std::max_element(c.assignment.begin(), c.assignment.end()) + 1;
    c.q = agg.q();
    return c;
}

namespace {

struct Contingency {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> joint;
    std::map<std::size_t, std::size_t> rows;
    std::map<std::size_t, std::size_t> cols;
    std::size_t n = 0;
};

Contingency tabulate(std::span<const std::size_t> clusters, std::span<const std::size_t> classes) {
    if (clusters.size() != classes.size()) throw std::invalid_argument("cluster and class labels differ in length");
    Contingency t;
    t.n = clusters.size();
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        ++t.joint[{clusters[i], classes[i]}];
        ++t.rows[clusters[i]];
        ++t.cols[classes[i]];
    }
    return t;
}

double entropy(const std::map<std::size_t, std::size_t>& counts, double n) {
    double h = 0.0;
    for (const auto& [label, count] : counts) {
        const double p = static_cast<double>(count) / n;
        h -= p * std::log(p);
    }
    return h;
}

std::vector<std::size_t> intern(std::span<const std::string> labels) {
    std::map<std::string, std::size_t> ids;
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(ids.try_emplace(l, ids.size()).first->second);
    return out;
}

}  // namespace

double purity(std::span<const std::size_t> clusters, std::span<const std::size_t> classes) {
    const auto t = tabulate(clusters, classes);
    if (t.n == 0) return 1.0;
    std::map<std::size_t, std::size_t> majority;
    for (const auto& [key, count] : t.joint) majority[key.first] = std::max(majority[key.first], count);
    std::size_t correct = 0;
    for (const auto& [cluster, count] : majority) correct += count;
    return static_cast<double>(correct) / static_cast<double>(t.n);
}

double nmi(std::span<const std::size_t> clusters, std::span<const std::size_t> classes) {
    const auto t = tabulate(clusters, classes);
    if (t.n == 0) return 1.0;
    const double n = static_cast<double>(t.n);
    const double h = entropy(t.rows, n) + entropy(t.cols, n);
    if (h == 0.0) return 1.0;
    double mi = 0.0;
    for (const auto& [key, count] : t.joint) {
        const double c = static_cast<double>(count);
        const double rows = static_cast<double>(t.rows.at(key.first));
        const double cols = static_cast<double>(t.cols.at(key.second));
        mi += c / n * std::log(n * c / (rows * cols));
    }
    return std::clamp(mi / (h / 2.0), 0.0, 1.0);
}

double purity(const Clustering& clustering, std::span<const std::string> classes) {
    const auto ids = intern(classes);
    return purity(clustering.assignment, ids);
}

double nmi(const Clustering& clustering, std::span<const std::string> classes) {
    const auto ids = intern(classes);
    return nmi(clustering.assignment, ids);
}

void write_clustering_tsv(std::ostream& out, const SimilarityGraph& g, const Clustering& c) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", c.q);
    out << "# Q=" << buf << '\n';
    for (std::size_t v = 0; v < g.size(); ++v) out << g.node(v) << '\t' << c.assignment[v] << '\n';
}

}  // namespace clexrank
