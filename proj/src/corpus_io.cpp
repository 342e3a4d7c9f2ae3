#include "clexrank/corpus_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace clexrank {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return fields;
}

// Calls fn(fields, line_no) for each non-blank, non-comment line.
template <typename Fn>
void for_each_tsv_row(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        fn(split_tabs(line), line_no);
    }
}

std::size_t parse_offset(const std::string& field, std::size_t line_no) {
    if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("span line " + std::to_string(line_no) + ": bad offset '" + field + "'");
    }
    return static_cast<std::size_t>(std::stoull(field));
}

bool on_codepoint_boundary(std::string_view text, std::size_t offset) {
    if (offset >= text.size()) return offset == text.size();
    return (static_cast<unsigned char>(text[offset]) & 0xC0) != 0x80;
}

std::ifstream open_or_throw(const std::filesystem::path& path, std::string_view what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + std::string(what) + " " + path.string());
    return in;
}

}  // namespace

std::string_view to_string(SourceKind kind) {
    switch (kind) {
        case SourceKind::citations: return "citations";
        case SourceKind::abstracts: return "abstracts";
        case SourceKind::full_papers: return "full_papers";
    }
    return "citations";
}

SourceKind parse_source_kind(std::string_view name) {
    if (name == "citations") return SourceKind::citations;
    if (name == "abstracts") return SourceKind::abstracts;
    if (name == "full_papers" || name == "full-papers") return SourceKind::full_papers;
    throw ValidationError("unknown source kind '" + std::string(name) + "'");
}

std::optional<std::size_t> CitationSet::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (sentences[i].id == id) return i;
    }
    return std::nullopt;
}

CitationSet make_citation_set(std::string target_id, SourceKind kind,
                              std::vector<Sentence> sentences, const TokenizerOptions& tokenizer) {
    if (sentences.empty()) throw ValidationError("citation set '" + target_id + "' has no sentences");
    std::unordered_set<std::string> ids;
    for (auto& s : sentences) {
        if (s.id.empty()) throw ValidationError("sentence with empty id");
        if (!ids.insert(s.id).second) throw ValidationError("duplicate sentence id '" + s.id + "'");
        s.tokens = tokenize(s.text, tokenizer);
        s.word_count = count_words(s.text);
    }
    return CitationSet{std::move(target_id), std::move(sentences), kind};
}

CitationSet parse_citation_set(std::istream& in, std::string target_id, SourceKind kind,
                               const TokenizerOptions& tokenizer) {
    std::vector<Sentence> sentences;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("text") || !j["id"].is_string() ||
            !j["text"].is_string()) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected object with string fields \"id\" and \"text\"");
        }
        Sentence s;
        s.id = j["id"].get<std::string>();
        s.text = j["text"].get<std::string>();
        if (j.contains("source_doc")) {
            if (!j["source_doc"].is_string()) {
                throw ParseError("line " + std::to_string(line_no) + ": \"source_doc\" must be a string");
            }
            s.source_doc = j["source_doc"].get<std::string>();
        }
        sentences.push_back(std::move(s));
    }
    if (sentences.empty()) throw ValidationError("no sentences");
    return make_citation_set(std::move(target_id), kind, std::move(sentences), tokenizer);
}

CitationSet load_citation_set(const std::filesystem::path& path, SourceKind kind,
                              const TokenizerOptions& tokenizer) {
    auto in = open_or_throw(path, "citation set");
    try {
        return parse_citation_set(in, path.stem().string(), kind, tokenizer);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

void write_citation_set(std::ostream& out, const CitationSet& cs) {
    for (const auto& s : cs.sentences) {
        nlohmann::ordered_json j;
        j["id"] = s.id;
        j["text"] = s.text;
        j["source_doc"] = s.source_doc;
        out << j.dump() << '\n';
    }
}

const std::set<std::string>& FactoidAnnotation::factoids_of(const std::string& sentence_id) const {
    static const std::set<std::string> none;
    auto it = sentence_factoids.find(sentence_id);
    return it == sentence_factoids.end() ? none : it->second;
}

FactoidAnnotation parse_factoid_annotation(std::istream& in, const CitationSet& cs,
                                           std::istream* weights) {
    FactoidAnnotation ann;
    for (const auto& s : cs.sentences) ann.sentence_factoids[s.id];
    for_each_tsv_row(in, [&](const std::vector<std::string>& f, std::size_t line_no) {
        if (f.size() != 2 || f[0].empty() || f[1].empty()) {
            throw ParseError("factoid line " + std::to_string(line_no) +
                             ": expected sentence_id<TAB>factoid_id");
        }
        auto it = ann.sentence_factoids.find(f[0]);
        if (it == ann.sentence_factoids.end()) {
            throw ValidationError("factoid line " + std::to_string(line_no) + ": unknown sentence id '" +
                                  f[0] + "'");
        }
        it->second.insert(f[1]);
        ann.factoid_ids.insert(f[1]);
    });
    if (weights != nullptr) {
        std::map<std::string, double> w;
        for_each_tsv_row(*weights, [&](const std::vector<std::string>& f, std::size_t line_no) {
            if (f.size() != 2) {
                throw ParseError("weight line " + std::to_string(line_no) + ": expected factoid_id<TAB>weight");
            }
            double value = 0.0;
            std::istringstream vs(f[1]);
            if (!(vs >> value) || !(vs >> std::ws).eof()) {
                throw ParseError("weight line " + std::to_string(line_no) + ": bad number '" + f[1] + "'");
            }
            if (!ann.factoid_ids.contains(f[0])) {
                throw ValidationError("weight line " + std::to_string(line_no) + ": unknown factoid id '" +
                                      f[0] + "'");
            }
            if (!(value > 0.0) || !std::isfinite(value)) {
                throw ValidationError("weight line " + std::to_string(line_no) + ": weight must be positive");
            }
            w[f[0]] = value;
        });
        for (const auto& id : ann.factoid_ids) {
            if (!w.contains(id)) throw ValidationError("factoid '" + id + "' has no weight");
        }
        ann.factoid_weights = std::move(w);
    }
    return ann;
}

FactoidAnnotation load_factoid_annotation(const std::filesystem::path& path, const CitationSet& cs,
                                          const std::optional<std::filesystem::path>& weights_path) {
    auto in = open_or_throw(path, "factoid annotation");
    if (!weights_path) return parse_factoid_annotation(in, cs, nullptr);
    auto win = open_or_throw(*weights_path, "factoid weight file");
    return parse_factoid_annotation(in, cs, &win);
}

std::map<std::string, NuggetSpanAnnotation> parse_nugget_spans(std::istream& in, const CitationSet& cs) {
    std::map<std::string, NuggetSpanAnnotation> out;
    for_each_tsv_row(in, [&](const std::vector<std::string>& f, std::size_t line_no) {
        if (f.size() != 4 || f[0].empty()) {
            throw ParseError("span line " + std::to_string(line_no) +
                             ": expected annotator<TAB>sentence_id<TAB>start<TAB>end");
        }
        auto idx = cs.index_of(f[1]);
        if (!idx) {
            throw ValidationError("span line " + std::to_string(line_no) + ": unknown sentence id '" + f[1] + "'");
        }
        Span span{parse_offset(f[2], line_no), parse_offset(f[3], line_no)};
        const auto& text = cs.sentences[*idx].text;
        if (span.start >= span.end || span.end > text.size()) {
            throw ValidationError("span line " + std::to_string(line_no) + ": span [" + f[2] + "," + f[3] +
                                  ") outside sentence bounds");
        }
        if (!on_codepoint_boundary(text, span.start) || !on_codepoint_boundary(text, span.end)) {
            throw ValidationError("span line " + std::to_string(line_no) + ": offset splits a UTF-8 codepoint");
        }
        auto& ann = out[f[0]];
        ann.annotator = f[0];
        ann.spans[f[1]].push_back(span);
    });
    for (auto& [name, ann] : out) {
        for (auto& [id, spans] : ann.spans) {
            std::sort(spans.begin(), spans.end(),
                      [](const Span& a, const Span& b) { return a.start != b.start ? a.start < b.start : a.end < b.end; });
            std::vector<Span> merged;
            for (const auto& s : spans) {
                if (!merged.empty() && s.start <= merged.back().end) {
                    merged.back().end = std::max(merged.back().end, s.end);
                } else {
                    merged.push_back(s);
                }
            }
            spans = std::move(merged);
        }
    }
    return out;
}

std::map<std::string, NuggetSpanAnnotation> load_nugget_spans(const std::filesystem::path& path,
                                                              const CitationSet& cs) {
    auto in = open_or_throw(path, "nugget span file");
    return parse_nugget_spans(in, cs);
}

std::string load_reference_summary(const std::filesystem::path& path) {
    auto in = open_or_throw(path, "reference summary");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void RunConfig::validate() const {
    auto open_unit = [](double v, const char* name) {
        if (!(v > 0.0 && v < 1.0)) throw ValidationError(std::string(name) + " must lie in (0, 1)");
    };
    open_unit(lexrank_damping, "lexrank_damping");
    open_unit(divrank_lambda, "divrank_lambda");
    open_unit(divrank_alpha, "divrank_alpha");
    if (!(lexrank_edge_threshold >= 0.0 && lexrank_edge_threshold <= 1.0)) {
        throw ValidationError("lexrank_edge_threshold must lie in [0, 1]");
    }
    if (!(graph_threshold >= 0.0 && graph_threshold <= 1.0)) {
        throw ValidationError("graph_threshold must lie in [0, 1]");
    }
    if (!(divrank_beta >= 0.0) || !std::isfinite(divrank_beta)) {
        throw ValidationError("divrank_beta must be >= 0");
    }
    if (summary_budget_words == 0) throw ValidationError("summary_budget_words must be > 0");
    if (random_trials == 0) throw ValidationError("random_trials must be > 0");
}

}  // namespace clexrank
