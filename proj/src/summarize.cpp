#include "clexrank/summarize.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "clexrank/errors.hpp"
#include "clexrank/lexical.hpp"
#include "clexrank/random.hpp"

namespace clexrank {

SummaryBuilder::SummaryBuilder(const CitationSet& cs, std::size_t budget, std::string method) : cs_(cs) {
    summary_.method = std::move(method);
    summary_.budget = budget;
    summary_.target_id = cs.target_id;
}

bool SummaryBuilder::add(std::size_t sentence, std::optional<std::size_t> cluster) {
    if (full()) return false;
    const auto& s = cs_.sentences.at(sentence);
    const std::size_t remaining = summary_.budget - summary_.total_words;
    SummaryEntry e;
    e.id = s.id;
    e.cluster = cluster;
    if (s.word_count <= remaining) {
        e.text = s.text;
        e.words = s.word_count;
    } else {
        const auto words = whitespace_words(s.text);
        for (std::size_t i = 0; i < remaining; ++i) {
            if (i > 0) e.text.push_back(' ');
            e.text.append(words[i]);
        }
        e.words = remaining;
        e.truncated = true;
    }
    summary_.total_words += e.words;
    summary_.entries.push_back(std::move(e));
    return true;
}

Summary SummaryBuilder::finish() && { return std::move(summary_); }

Summary assemble_from_ordering(const CitationSet& cs, const Ordering& order, std::size_t budget) {
    if (order.order.size() != cs.size()) throw ValidationError("ordering does not cover the citation set");
    SummaryBuilder b(cs, budget, order.method);
    for (auto v : order.order) {
        if (!b.add(v)) break;
    }
    auto s = std::move(b).finish();
    s.seed = order.seed;
    return s;
}

std::vector<std::size_t> cluster_visit_order(const SimilarityGraph& g, const Clustering& c) {
    const auto members = c.members();
    std::vector<double> internal(c.cluster_count, 0.0);
    for (std::size_t k = 0; k < c.cluster_count; ++k) {
        const auto& m = members[k];
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t b = a + 1; b < m.size(); ++b) internal[k] += g.weight(m[a], m[b]);
        }
    }
    std::vector<std::size_t> order(c.cluster_count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (members[x].size() != members[y].size()) return members[x].size() > members[y].size();
        if (internal[x] != internal[y]) return internal[x] > internal[y];
        return x < y;
    });
    return order;
}

namespace {

Clustering single_cluster(const SimilarityGraph& g) {
    std::vector<std::size_t> all(g.size(), 0);
    return make_clustering(g, all);
}

}  // namespace

Summary c_lexrank_summary(const CitationSet& cs, const SimilarityGraph& g, std::size_t budget,
                          const ClusteredSummaryOptions& options) {
    const auto clustering = options.force_single_cluster ? single_cluster(g) : cluster_cnm(g);
    return c_lexrank_summary(cs, g, clustering, budget, options);
}

Summary c_lexrank_summary(const CitationSet& cs, const SimilarityGraph& g, const Clustering& clustering,
                          std::size_t budget, const ClusteredSummaryOptions& options) {
    if (cs.size() != g.size() || clustering.assignment.size() != g.size()) {
        throw ValidationError("citation set, graph and clustering sizes differ");
    }
    const auto members = clustering.members();
    std::vector<std::vector<std::size_t>> ranked(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        const auto sub = g.induced(members[k]);
        const auto local = ordering_from_scores(lexrank(sub, options.lexrank_threshold, options.lexrank_damping));
        for (auto v : local.order) ranked[k].push_back(members[k][v]);
    }
    const auto visit = cluster_visit_order(g, clustering);
    SummaryBuilder b(cs, budget, "c-lexrank");
    for (std::size_t round = 0; !b.full(); ++round) {
        bool any = false;
        for (auto k : visit) {
            if (round >= ranked[k].size()) continue;
            any = true;
            if (!b.add(ranked[k][round], k)) break;
        }
        if (!any) break;
    }
    return std::move(b).finish();
}

Summary c_rr_summary(const CitationSet& cs, const SimilarityGraph& g, std::size_t budget, std::uint64_t seed) {
    return c_rr_summary(cs, g, cluster_cnm(g), budget, seed);
}

Summary c_rr_summary(const CitationSet& cs, const SimilarityGraph& g, const Clustering& clustering,
                     std::size_t budget, std::uint64_t seed) {
    if (cs.size() != g.size() || clustering.assignment.size() != g.size()) {
        throw ValidationError("citation set, graph and clustering sizes differ");
    }
    auto pools = clustering.members();
    const auto visit = cluster_visit_order(g, clustering);
    Rng rng(seed);
    SummaryBuilder b(cs, budget, "c-rr");
    while (!b.full()) {
        bool any = false;
        for (auto k : visit) {
            auto& pool = pools[k];
            if (pool.empty()) continue;
            any = true;
            if (b.full()) break;
            const auto pick = static_cast<std::size_t>(uniform_index(rng, pool.size()));
            const auto v = pool[pick];
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
            b.add(v, k);
        }
        if (!any) break;
    }
    auto s = std::move(b).finish();
    s.seed = seed;
    return s;
}

void write_summary_text(std::ostream& out, const Summary& s) {
    out << "# method=" << s.method << " budget=" << s.budget << " words=" << s.total_words << '\n';
    for (const auto& e : s.entries) out << e.text << '\n';
}

nlohmann::json summary_to_json(const Summary& s) {
    nlohmann::ordered_json j;
    j["method"] = s.method;
    j["target_id"] = s.target_id;
    j["budget"] = s.budget;
    j["total_words"] = s.total_words;
    if (s.seed) j["seed"] = *s.seed;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : s.entries) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["text"] = e.text;
        je["words"] = e.words;
        je["truncated"] = e.truncated;
        if (e.cluster) je["cluster"] = *e.cluster;
        j["entries"].push_back(std::move(je));
    }
    return nlohmann::json::parse(j.dump());
}

Summary summary_from_json(const nlohmann::json& j) {
    try {
        Summary s;
        s.method = j.at("method").get<std::string>();
        s.target_id = j.value("target_id", std::string{});
        s.budget = j.at("budget").get<std::size_t>();
        if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
        for (const auto& je : j.at("entries")) {
            SummaryEntry e;
            e.id = je.at("id").get<std::string>();
            e.text = je.at("text").get<std::string>();
            e.words = je.contains("words") ? je["words"].get<std::size_t>() : count_words(e.text);
            e.truncated = je.value("truncated", false);
            if (je.contains("cluster")) e.cluster = je["cluster"].get<std::size_t>();
            s.total_words += e.words;
            s.entries.push_back(std::move(e));
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("summary json: ") + e.what());
    }
}

}  // namespace clexrank
