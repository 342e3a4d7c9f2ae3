#include "clexrank/rank.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "clexrank/random.hpp"

namespace clexrank {

namespace {

double l1_distance(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

void normalize_in_place(std::vector<double>& v) {
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    if (sum > 0.0) {
        for (auto& x : v) x /= sum;
    }
}

}  // namespace

RankScores lexrank(const SimilarityGraph& g, double threshold, double damping, Convergence conv) {
    if (g.empty()) throw std::invalid_argument("lexrank: empty graph");
    const std::size_t n = g.size();
    const auto adj = g.binarize(threshold);
    const double teleport = (1.0 - damping) / static_cast<double>(n);

    RankScores out;
    out.method = "lexrank";
    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    for (out.iterations = 0; out.iterations < conv.max_iterations;) {
        double dangling = 0.0;
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (adj[i].empty()) {
                dangling += p[i];
                continue;
            }
            const double share = p[i] / static_cast<double>(adj[i].size());
            for (auto j : adj[i]) next[j] += share;
        }
        const double spread = dangling / static_cast<double>(n);
        for (auto& x : next) x = teleport + damping * (x + spread);
        ++out.iterations;
        out.residual = l1_distance(next, p);
        p.swap(next);
        if (out.residual < conv.tolerance) break;
    }
    normalize_in_place(p);
    out.scores = std::move(p);
    return out;
}

RankScores divrank(const SimilarityGraph& g, double lambda, double alpha, std::span<const double> prior,
                   Convergence conv) {
    if (g.empty()) throw std::invalid_argument("divrank: empty graph");
    const std::size_t n = g.size();

    std::vector<double> pstar(n, 1.0 / static_cast<double>(n));
    if (!prior.empty()) {
        if (prior.size() != n) throw std::invalid_argument("divrank: prior size must match graph size");
        double sum = 0.0;
        for (double x : prior) {
            if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("divrank: prior must be non-negative");
            sum += x;
        }
        if (!(sum > 0.0)) throw std::invalid_argument("divrank: prior must not be all zero");
        for (std::size_t i = 0; i < n; ++i) pstar[i] = prior[i] / sum;
    }

    // Sparse rows of p0, self loop included.
    struct Step {
        std::size_t to;
        double prob;
    };
    std::vector<std::vector<Step>> p0(n);
    for (std::size_t u = 0; u < n; ++u) {
        const double deg = g.strength(u);
        if (!(deg > 0.0)) {
            p0[u].push_back({u, 1.0});
            continue;
        }
        p0[u].push_back({u, 1.0 - alpha});
        for (std::size_t v = 0; v < n; ++v) {
            if (v != u && g.weight(u, v) > 0.0) p0[u].push_back({v, alpha * g.weight(u, v) / deg});
        }
    }

    RankScores out;
    out.method = prior.empty() ? "divrank" : "divrank-prior";
    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    for (out.iterations = 0; out.iterations < conv.max_iterations;) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double reinforced = 0.0;
            for (const auto& s : p0[i]) reinforced += s.prob * p[s.to];
            const double mass = p[i] / reinforced;
            for (const auto& s : p0[i]) next[s.to] += mass * s.prob * p[s.to];
        }
        for (std::size_t j = 0; j < n; ++j) next[j] = (1.0 - lambda) * pstar[j] + lambda * next[j];
        ++out.iterations;
        out.residual = l1_distance(next, p);
        p.swap(next);
        if (out.residual < conv.tolerance) break;
    }
    normalize_in_place(p);
    out.scores = std::move(p);
    return out;
}

std::vector<double> divrank_prior_from_length(const CitationSet& cs, double beta) {
    std::vector<double> w;
    w.reserve(cs.size());
    for (const auto& s : cs.sentences) {
        const double len = static_cast<double>(std::max<std::size_t>(s.word_count, 1));
        w.push_back(std::pow(len, -beta));
    }
    normalize_in_place(w);
    return w;
}

Ordering ordering_from_scores(const RankScores& scores) {
    Ordering o;
    o.method = scores.method;
    o.order.resize(scores.scores.size());
    std::iota(o.order.begin(), o.order.end(), std::size_t{0});
    std::stable_sort(o.order.begin(), o.order.end(),
                     [&](std::size_t a, std::size_t b) { return scores.scores[a] > scores.scores[b]; });
    return o;
}

Ordering mmr_order(const SimilarityGraph& g) {
    Ordering o;
    o.method = "mmr";
    const std::size_t n = g.size();
    if (n == 0) return o;
    std::vector<bool> picked(n, false);
    std::size_t first = 0;
    double best_total = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double total = g.strength(i);
        if (total > best_total) {
            best_total = total;
            first = i;
        }
    }
    std::vector<double> max_sim(n, 0.0);
    auto take = [&](std::size_t v) {
        picked[v] = true;
        o.order.push_back(v);
        for (std::size_t i = 0; i < n; ++i) max_sim[i] = std::max(max_sim[i], g.weight(i, v));
    };
    take(first);
    while (o.order.size() < n) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (picked[i]) continue;
            if (best == n || max_sim[i] < max_sim[best]) best = i;
        }
        take(best);
    }
    return o;
}

Ordering random_order(std::size_t n, std::uint64_t seed) {
    Ordering o;
    o.method = "random";
    o.seed = seed;
    o.order.resize(n);
    std::iota(o.order.begin(), o.order.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_index(rng, i));
        std::swap(o.order[i - 1], o.order[j]);
    }
    return o;
}

void write_scores_tsv(std::ostream& out, const SimilarityGraph& g, const RankScores& scores) {
    char buf[48];
    for (auto v : ordering_from_scores(scores).order) {
        std::snprintf(buf, sizeof buf, "%.6f", scores.scores[v]);
        out << g.node(v) << '\t' << buf << '\n';
    }
}

}  // namespace clexrank
