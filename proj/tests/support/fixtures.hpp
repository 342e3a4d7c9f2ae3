#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "clexrank/corpus_io.hpp"
#include "clexrank/graph.hpp"
#include "clexrank/random.hpp"

namespace fixtures {

inline std::string data_dir() { return CLEXRANK_DATA_DIR; }
inline std::string w05_citations() { return data_dir() + "/w05-0622/W05-0622.jsonl"; }
inline std::string w05_factoids() { return data_dir() + "/w05-0622/factoids.tsv"; }
inline std::string stopwords() { return data_dir() + "/stopwords.txt"; }

inline std::vector<std::string> node_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
    return names;
}

using Edges = std::vector<std::tuple<std::size_t, std::size_t, double>>;

inline clexrank::SimilarityGraph graph(std::size_t n, const Edges& edges) {
    std::vector<double> w(n * n, 0.0);
    for (auto [i, j, x] : edges) {
        w[i * n + j] = x;
        w[j * n + i] = x;
    }
    return clexrank::SimilarityGraph(node_names(n), std::move(w));
}

inline clexrank::SimilarityGraph from_matrix(const std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    std::vector<double> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = m[i][j];
    return clexrank::SimilarityGraph(node_names(n), std::move(w));
}

/// Symmetric random weights; each pair is an edge with probability density,
/// weight uniform in (0, 1].
inline clexrank::SimilarityGraph random_graph(std::size_t n, double density, clexrank::Rng& rng) {
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (clexrank::uniform_real(rng) < density) {
                const double x = 1.0 - clexrank::uniform_real(rng);
                w[i * n + j] = x;
                w[j * n + i] = x;
            }
        }
    }
    return clexrank::SimilarityGraph(node_names(n), std::move(w));
}

inline Edges clique(std::size_t first, std::size_t size, double weight) {
    Edges e;
    for (std::size_t i = first; i < first + size; ++i)
        for (std::size_t j = i + 1; j < first + size; ++j) e.emplace_back(i, j, weight);
    return e;
}

/// Two 4-cliques {0..3} and {4..7} joined by one weak edge 3-7. Each clique has
/// a hub (0 and 4) with stronger spokes; clique A is denser than clique B.
inline clexrank::SimilarityGraph two_cliques_weak_bridge() {
    Edges e;
    for (std::size_t j = 1; j < 4; ++j) e.emplace_back(0, j, 0.9);
    e.emplace_back(1, 2, 0.6);
    e.emplace_back(1, 3, 0.6);
    e.emplace_back(2, 3, 0.6);
    for (std::size_t j = 5; j < 8; ++j) e.emplace_back(4, j, 0.7);
    e.emplace_back(5, 6, 0.5);
    e.emplace_back(5, 7, 0.5);
    e.emplace_back(6, 7, 0.5);
    e.emplace_back(3, 7, 0.05);
    return graph(8, e);
}

struct Planted {
    clexrank::SimilarityGraph graph;
    std::vector<std::size_t> groups;
};

/// groups x size vertices in shuffled order. Within-group weights are
/// within * U(0.75, 1.25), across-group weights across * U(0, 2), capped at 1.
inline Planted planted_partition(std::size_t groups, std::size_t size, double within, double across,
                                 std::uint64_t seed) {
    clexrank::Rng rng(seed);
    const std::size_t n = groups * size;
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) label[i] = i / size;
    for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[clexrank::uniform_index(rng, i)]);
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double x = label[i] == label[j] ? within * (0.75 + 0.5 * clexrank::uniform_real(rng))
                                                  : across * 2.0 * clexrank::uniform_real(rng);
            w[i * n + j] = w[j * n + i] = std::min(1.0, x);
        }
    }
    return {clexrank::SimilarityGraph(node_names(n), std::move(w)), label};
}

struct SyntheticSet {
    clexrank::CitationSet cs;
    /// Factoid rows (sentence_id, factoid_id).
    std::vector<std::pair<std::string, std::string>> factoids;
};

/// A citation set with planted factoid communities. Each factoid has its own
/// 8-word topic vocabulary; its sentences carry 4-6 distinct topic words plus
/// generic filler. Filler follows a Zipf law over 300 words, as function and
/// common content words do in real text. Off-topic sentences (no factoid) are
/// filler plus, half the time, one stray topic word.
inline SyntheticSet synthetic_citation_set(std::uint64_t seed) {
    clexrank::Rng rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) { return lo + clexrank::uniform_index(rng, hi - lo + 1); };
    constexpr std::size_t generic_vocab = 300, topic_vocab = 8;
    std::vector<double> zipf_cdf(generic_vocab);
    double acc = 0.0;
    for (std::size_t r = 0; r < generic_vocab; ++r) zipf_cdf[r] = acc += 1.0 / static_cast<double>(r + 1);
    auto filler = [&](std::string& s, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            const double u = clexrank::uniform_real(rng) * acc;
            const auto r = static_cast<std::size_t>(std::upper_bound(zipf_cdf.begin(), zipf_cdf.end(), u) - zipf_cdf.begin());
            s += " g" + std::to_string(std::min(r, generic_vocab - 1));
        }
    };
    auto topic_word = [](std::size_t f, std::size_t w) { return " t" + std::to_string(f) + "w" + std::to_string(w); };

    const std::size_t communities = pick(3, 5);
    std::vector<std::pair<std::string, int>> drafts;  // text, factoid (-1 for none)
    for (std::size_t f = 0; f < communities; ++f) {
        const std::size_t sentences = pick(2, 7);
        for (std::size_t k = 0; k < sentences; ++k) {
            std::string s = "Target (2005)";
            std::vector<std::size_t> words(topic_vocab);
            std::iota(words.begin(), words.end(), std::size_t{0});
            for (std::size_t i = topic_vocab; i > 1; --i) std::swap(words[i - 1], words[clexrank::uniform_index(rng, i)]);
            const std::size_t topical = pick(4, 6);
            for (std::size_t i = 0; i < topical; ++i) s += topic_word(f, words[i]);
            filler(s, pick(8, 16));
            drafts.emplace_back(s, static_cast<int>(f));
        }
    }
    const std::size_t off_topic = pick(2, 5);
    for (std::size_t k = 0; k < off_topic; ++k) {
        std::string s = "Target (2005)";
        if (clexrank::uniform_index(rng, 2) == 0) {
            s += topic_word(clexrank::uniform_index(rng, communities), clexrank::uniform_index(rng, topic_vocab));
        }
        filler(s, pick(12, 24));
        drafts.emplace_back(s, -1);
    }
    for (std::size_t i = drafts.size(); i > 1; --i) std::swap(drafts[i - 1], drafts[clexrank::uniform_index(rng, i)]);

    SyntheticSet out;
    std::vector<clexrank::Sentence> sentences;
    for (std::size_t i = 0; i < drafts.size(); ++i) {
        clexrank::Sentence s;
        s.id = "s" + std::to_string(i + 1);
        s.text = drafts[i].first;
        s.source_doc = "synthetic";
        sentences.push_back(s);
        if (drafts[i].second >= 0) out.factoids.emplace_back(s.id, "f" + std::to_string(drafts[i].second));
    }
    out.cs = clexrank::make_citation_set("synthetic-" + std::to_string(seed), clexrank::SourceKind::citations,
                                         std::move(sentences));
    return out;
}

inline clexrank::IdfTable self_idf(const clexrank::CitationSet& cs) {
    std::vector<std::vector<std::string>> docs;
    for (const auto& s : cs.sentences) docs.push_back(s.tokens);
    return clexrank::IdfTable::from_documents(docs);
}

}  // namespace fixtures
