#include "clexrank/eval.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "clexrank/errors.hpp"
#include "clexrank/lexical.hpp"

namespace clexrank {

std::size_t Pyramid::tier_of(const std::string& factoid) const {
    for (const auto& [tier, factoids] : tiers) {
        if (factoids.contains(factoid)) return tier;
    }
    return 0;
}

std::size_t Pyramid::factoid_count() const {
    std::size_t n = 0;
    for (const auto& [tier, factoids] : tiers) n += factoids.size();
    return n;
}

Pyramid build_pyramid(const FactoidAnnotation& ann) {
    std::map<std::string, std::size_t> occurrences;
    for (const auto& [sentence, factoids] : ann.sentence_factoids) {
        for (const auto& f : factoids) ++occurrences[f];
    }
    Pyramid p;
    for (const auto& [f, count] : occurrences) {
        p.tiers[count].insert(f);
        p.top_tier = std::max(p.top_tier, count);
    }
    return p;
}

double pyramid_max(const Pyramid& pyramid, std::size_t x) {
    // Tiers from the top down: take whole tiers while they fit, then fill the
    // remainder from tier j, the highest tier whose cumulative count reaches x.
    double max = 0.0;
    std::size_t taken = 0;
    for (auto it = pyramid.tiers.rbegin(); it != pyramid.tiers.rend() && taken < x; ++it) {
        const auto [tier, factoids] = *it;
        const std::size_t take = std::min(factoids.size(), x - taken);
        max += static_cast<double>(tier) * static_cast<double>(take);
        taken += take;
    }
    return max;
}

namespace {

double weighted_max(const std::map<std::string, double>& weights, std::size_t x) {
    std::vector<double> w;
    w.reserve(weights.size());
    for (const auto& [f, v] : weights) w.push_back(v);
    std::sort(w.begin(), w.end(), std::greater<>());
    double max = 0.0;
    for (std::size_t i = 0; i < std::min(x, w.size()); ++i) max += w[i];
    return max;
}

}  // namespace

PyramidReport pyramid_score(const Summary& summary, const FactoidAnnotation& ann, const Pyramid& pyramid) {
    PyramidReport r;
    r.method = summary.method;
    r.budget = summary.budget;
    r.x = summary.entries.size();
    std::set<std::string> covered;
    for (const auto& e : summary.entries) {
        auto it = ann.sentence_factoids.find(e.id);
        if (it == ann.sentence_factoids.end()) {
            throw ValidationError("summary sentence '" + e.id + "' is not in the annotated citation set");
        }
        covered.insert(it->second.begin(), it->second.end());
    }
    r.factoids_covered = covered.size();
    for (const auto& f : covered) {
        r.d += ann.factoid_weights ? ann.factoid_weights->at(f) : static_cast<double>(pyramid.tier_of(f));
    }
    r.max = ann.factoid_weights ? weighted_max(*ann.factoid_weights, r.x) : pyramid_max(pyramid, r.x);
    r.score = r.max > 0.0 ? std::min(r.d, r.max) / r.max : 1.0;
    return r;
}

double ngram_kappa(const NuggetSpanAnnotation& a, const NuggetSpanAnnotation& b, const CitationSet& cs,
                   std::size_t n, ChanceModel model) {
    if (n == 0) throw ValidationError("n-gram order must be >= 1");
    static const std::vector<Span> none;
    auto spans_of = [](const NuggetSpanAnnotation& ann, const std::string& id) -> const std::vector<Span>& {
        auto it = ann.spans.find(id);
        return it == ann.spans.end() ? none : it->second;
    };
    auto inside = [](const std::vector<Span>& spans, std::size_t start, std::size_t end) {
        return std::any_of(spans.begin(), spans.end(),
                           [&](const Span& s) { return s.start <= start && end <= s.end; });
    };

    std::size_t units = 0, agree = 0, in_a = 0, in_b = 0;
    for (const auto& s : cs.sentences) {
        const auto words = whitespace_words(s.text);
        if (words.size() < n) continue;
        const auto& sa = spans_of(a, s.id);
        const auto& sb = spans_of(b, s.id);
        std::vector<char> la(words.size()), lb(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) {
            const auto start = static_cast<std::size_t>(words[i].data() - s.text.data());
            const auto end = start + words[i].size();
            la[i] = inside(sa, start, end);
            lb[i] = inside(sb, start, end);
        }
        for (std::size_t i = 0; i + n <= words.size(); ++i) {
            const bool wa = std::all_of(la.begin() + i, la.begin() + i + n, [](char c) { return c != 0; });
            const bool wb = std::all_of(lb.begin() + i, lb.begin() + i + n, [](char c) { return c != 0; });
            ++units;
            agree += wa == wb ? 1 : 0;
            in_a += wa ? 1 : 0;
            in_b += wb ? 1 : 0;
        }
    }
    if (units == 0) throw ValidationError("no units: no sentence has " + std::to_string(n) + " tokens");

    const double total = static_cast<double>(units);
    const double observed = static_cast<double>(agree) / total;
    const double pa = static_cast<double>(in_a) / total;
    const double pb = static_cast<double>(in_b) / total;
    double chance = 0.0;
    if (model == ChanceModel::cohen) {
        chance = pa * pb + (1.0 - pa) * (1.0 - pb);
    } else {
        const double p = (pa + pb) / 2.0;
        chance = p * p + (1.0 - p) * (1.0 - p);
    }
    if (chance >= 1.0) return 1.0;
    return (observed - chance) / (1.0 - chance);
}

std::vector<std::string> rouge_tokens(std::string_view text) {
    static const TokenizerOptions options{};
    return tokenize(text, options);
}

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts ngrams(const std::vector<std::string>& tokens, std::size_t n) {
    NgramCounts counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                          tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
    }
    return counts;
}

struct Overlap {
    std::size_t matches = 0;
    std::size_t total = 0;
    double recall() const { return static_cast<double>(matches) / static_cast<double>(total); }
};

Overlap overlap(const NgramCounts& candidate, const NgramCounts& reference) {
    Overlap o;
    for (const auto& [gram, count] : reference) {
        o.total += count;
        auto it = candidate.find(gram);
        if (it != candidate.end()) o.matches += std::min(count, it->second);
    }
    return o;
}

}  // namespace

double rouge_n(std::string_view candidate, std::span<const std::string> references, std::size_t n, bool jackknife) {
    if (n == 0) throw ValidationError("n-gram order must be >= 1");
    if (references.empty()) throw ValidationError("rouge needs at least one reference");
    if (jackknife && references.size() < 2) throw ValidationError("jackknifing needs at least two references");
    const auto cand = ngrams(rouge_tokens(candidate), n);
    std::vector<Overlap> per_ref;
    for (std::size_t r = 0; r < references.size(); ++r) {
        const auto ref = ngrams(rouge_tokens(references[r]), n);
        if (ref.empty()) throw ValidationError("reference " + std::to_string(r + 1) + " has no " + std::to_string(n) + "-grams");
        per_ref.push_back(overlap(cand, ref));
    }
    if (!jackknife) {
        Overlap pooled;
        for (const auto& o : per_ref) {
            pooled.matches += o.matches;
            pooled.total += o.total;
        }
        return pooled.recall();
    }
    double sum = 0.0;
    for (std::size_t held_out = 0; held_out < per_ref.size(); ++held_out) {
        double best = 0.0;
        for (std::size_t r = 0; r < per_ref.size(); ++r) {
            if (r != held_out) best = std::max(best, per_ref[r].recall());
        }
        sum += best;
    }
    return sum / static_cast<double>(per_ref.size());
}

}  // namespace clexrank
