#include "clexrank/cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "clexrank/cli/config.hpp"
#include "clexrank/cli/manifest.hpp"
#include "clexrank/community.hpp"
#include "clexrank/corpus_io.hpp"
#include "clexrank/errors.hpp"
#include "clexrank/eval.hpp"
#include "clexrank/graph.hpp"
#include "clexrank/rank.hpp"
#include "clexrank/summarize.hpp"

namespace clexrank::cli {

namespace {

using ojson = nlohmann::ordered_json;

const std::vector<std::string> kMethods = {"c-lexrank", "c-rr", "lexrank", "mmr", "divrank", "divrank-prior", "random"};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fixed(double v, int decimals = 6) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Options shared by every command that reads a citation set.
struct CorpusArgs {
    std::string in;
    std::string source_kind = "citations";
    std::string idf;
    std::string stopwords;
    std::string config;
};

void add_corpus_options(CLI::App* cmd, CorpusArgs& a) {
    cmd->add_option("--in", a.in, "Citation set (JSON lines)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--source-kind", a.source_kind, "citations | abstracts | full_papers")
        ->check(CLI::IsMember({"citations", "abstracts", "full_papers", "full-papers"}));
    cmd->add_option("--idf", a.idf, "IDF table (term<TAB>idf); derived from the input set when omitted")
        ->check(CLI::ExistingFile);
    cmd->add_option("--stopwords", a.stopwords, "Stopword list, one word per line")->check(CLI::ExistingFile);
    cmd->add_option("--config", a.config, "key = value run configuration")->check(CLI::ExistingFile);
}

struct Loaded {
    RunConfig config;
    std::set<std::string> config_keys;
    CitationSet cs;
    IdfTable idf;
    SimilarityGraph graph;
    RunManifest manifest;
};

// Resolves configuration (defaults < config file < flags) and loads the corpus.
// apply_flags runs between config-file loading and validation.
template <typename ApplyFlags>
Loaded load_corpus(const CorpusArgs& a, const std::string& command, ApplyFlags&& apply_flags, StageTimer& timer) {
    Loaded l;
    l.manifest.command = command;
    timer.start("load");
    if (!a.config.empty()) {
        auto lc = load_config(a.config);
        l.config = lc.config;
        l.config_keys = lc.keys;
        l.manifest.add_input(a.config);
    }
    if (!a.stopwords.empty()) l.config.stopwords_path = a.stopwords;
    apply_flags(l.config);
    l.config.validate();
    if (l.config.stopwords_path) {
        l.config.tokenizer.stopwords = load_stopwords(*l.config.stopwords_path);
        l.manifest.add_input(*l.config.stopwords_path);
    }
    l.cs = load_citation_set(a.in, parse_source_kind(a.source_kind), l.config.tokenizer);
    l.manifest.add_input(a.in);
    if (!a.idf.empty()) {
        l.idf = load_idf_table(a.idf);
        l.manifest.add_input(a.idf);
    } else {
        std::vector<std::vector<std::string>> docs;
        for (const auto& s : l.cs.sentences) docs.push_back(s.tokens);
        l.idf = IdfTable::from_documents(docs);
    }
    timer.start("graph");
    l.graph = build_citation_summary_network(l.cs, l.idf);
    timer.stop();
    l.manifest.config = l.config;
    return l;
}

std::vector<Summary> read_summaries(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    std::vector<Summary> out;
    if (j.contains("summaries")) {
        for (const auto& s : j["summaries"]) out.push_back(summary_from_json(s));
    } else {
        out.push_back(summary_from_json(j));
    }
    if (out.empty()) throw ValidationError(path.string() + ": no summaries");
    return out;
}

// A candidate for ROUGE: summary JSON (entries joined) or plain text with the
// `#` header skipped.
std::vector<std::pair<std::string, std::string>> read_candidates(const std::filesystem::path& path) {
    std::vector<std::pair<std::string, std::string>> out;
    if (path.extension() == ".json") {
        for (const auto& s : read_summaries(path)) {
            std::string text;
            for (const auto& e : s.entries) text += e.text + "\n";
            out.emplace_back(s.method, std::move(text));
        }
        return out;
    }
    std::istringstream in(read_file(path));
    std::string line, text, method = path.stem().string();
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            if (auto pos = line.find("method="); pos != std::string::npos) {
                method = line.substr(pos + 7, line.find(' ', pos) - pos - 7);
            }
            continue;
        }
        text += line + "\n";
    }
    out.emplace_back(method, std::move(text));
    return out;
}

ojson pyramid_json(const PyramidReport& r) {
    ojson j;
    j["x"] = r.x;
    j["factoids_covered"] = r.factoids_covered;
    j["D"] = r.d;
    j["Max"] = r.max;
    j["P"] = r.score;
    return j;
}

double mean(const std::vector<double>& v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

void validate_summary_ids(const Summary& s, const CitationSet& cs) {
    for (const auto& e : s.entries) {
        if (!cs.index_of(e.id)) {
            throw ValidationError("summary sentence '" + e.id + "' does not exist in citation set '" + cs.target_id + "'");
        }
    }
}

// ---- summarize ----------------------------------------------------------------

struct SummarizeArgs {
    CorpusArgs corpus;
    std::string method;
    std::optional<std::size_t> budget;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::string factoids;
    std::string weights;
    std::string out;
    bool timings = false;
};

Summary run_method(const std::string& method, const Loaded& l, const Clustering& clustering, std::size_t budget,
                   std::uint64_t seed) {
    const auto& c = l.config;
    Summary s;
    if (method == "c-lexrank") {
        s = c_lexrank_summary(l.cs, l.graph, clustering, budget, {c.lexrank_edge_threshold, c.lexrank_damping, false});
    } else if (method == "c-rr") {
        s = c_rr_summary(l.cs, l.graph, clustering, budget, seed);
    } else if (method == "lexrank") {
        s = assemble_from_ordering(l.cs, ordering_from_scores(lexrank(l.graph, c.lexrank_edge_threshold, c.lexrank_damping)), budget);
    } else if (method == "mmr") {
        s = assemble_from_ordering(l.cs, mmr_order(l.graph), budget);
    } else if (method == "divrank") {
        s = assemble_from_ordering(l.cs, ordering_from_scores(divrank(l.graph, c.divrank_lambda, c.divrank_alpha)), budget);
    } else if (method == "divrank-prior") {
        const auto prior = divrank_prior_from_length(l.cs, c.divrank_beta);
        s = assemble_from_ordering(l.cs, ordering_from_scores(divrank(l.graph, c.divrank_lambda, c.divrank_alpha, prior)), budget);
    } else if (method == "random") {
        s = assemble_from_ordering(l.cs, random_order(l.cs, seed), budget);
    } else {
        throw UsageError("unknown method '" + method + "'");
    }
    s.method = method;
    return s;
}

int cmd_summarize(const SummarizeArgs& a, std::ostream& out) {
    const bool stochastic = a.method == "random" || a.method == "c-rr";
    StageTimer timer;
    auto l = load_corpus(a.corpus, "summarize", [&](RunConfig& c) {
        if (a.budget) c.summary_budget_words = *a.budget;
        if (a.seed) c.random_seed = *a.seed;
        if (a.trials) c.random_trials = *a.trials;
    }, timer);
    if (stochastic && !a.seed && !l.config_keys.contains("random_seed")) {
        throw UsageError("method '" + a.method + "' needs --seed (or random_seed in --config)");
    }
    const bool trials_set = a.trials || l.config_keys.contains("random_trials");
    const std::size_t trials = stochastic && trials_set ? l.config.random_trials : 1;
    const std::size_t budget = l.config.summary_budget_words;

    std::optional<FactoidAnnotation> ann;
    std::optional<Pyramid> pyramid;
    if (!a.factoids.empty()) {
        ann = load_factoid_annotation(a.factoids, l.cs,
                                      a.weights.empty() ? std::nullopt : std::optional<std::filesystem::path>(a.weights));
        pyramid = build_pyramid(*ann);
        l.manifest.add_input(a.factoids);
        if (!a.weights.empty()) l.manifest.add_input(a.weights);
    }

    timer.start("cluster");
    const bool clustered = a.method == "c-lexrank" || a.method == "c-rr";
    const Clustering clustering = clustered ? cluster_cnm(l.graph) : Clustering{};
    timer.start("summarize");
    std::vector<Summary> summaries;
    for (std::size_t t = 0; t < trials; ++t) {
        summaries.push_back(run_method(a.method, l, clustering, budget, l.config.random_seed + t));
    }
    timer.stop();

    std::ostringstream text;
    std::vector<double> scores;
    ojson json_summaries = ojson::array();
    for (std::size_t t = 0; t < summaries.size(); ++t) {
        if (t > 0) text << '\n';
        write_summary_text(text, summaries[t]);
        ojson j = ojson::parse(summary_to_json(summaries[t]).dump());
        if (ann) {
            const auto r = pyramid_score(summaries[t], *ann, *pyramid);
            scores.push_back(r.score);
            j["pyramid"] = pyramid_json(r);
        }
        json_summaries.push_back(std::move(j));
    }
    ojson doc;
    if (summaries.size() == 1) {
        doc = json_summaries[0];
    } else {
        doc["method"] = a.method;
        doc["target_id"] = l.cs.target_id;
        doc["budget"] = budget;
        doc["trials"] = summaries.size();
        if (ann) doc["mean_pyramid"] = mean(scores);
        doc["summaries"] = std::move(json_summaries);
    }

    const std::string prefix = a.out.empty() ? l.cs.target_id + "." + a.method + "." + std::to_string(budget) : a.out;
    OutputSet files;
    files.add(prefix + ".txt", text.str());
    files.add(prefix + ".json", doc.dump(2) + "\n");
    l.manifest.outputs = files.paths();
    l.manifest.record_timings = a.timings;
    l.manifest.timings = timer.stages();
    const std::string manifest_path = prefix + ".manifest.json";
    files.add(manifest_path, l.manifest.to_json().dump(2) + "\n");
    files.commit();

    if (ann) {
        if (summaries.size() == 1) out << "pyramid\t" << fixed(scores[0]) << '\n';
        else out << "mean_pyramid\t" << fixed(mean(scores)) << "\ttrials\t" << summaries.size() << '\n';
    }
    out << manifest_path << '\n';
    return kExitOk;
}

// ---- graph-stats / cluster ---------------------------------------------------

struct GraphArgs {
    CorpusArgs corpus;
    std::optional<double> threshold;
    std::string dot;
    std::string out;
};

int cmd_graph_stats(const GraphArgs& a, std::ostream& out) {
    StageTimer timer;
    auto l = load_corpus(a.corpus, "graph-stats", [&](RunConfig& c) {
        if (a.threshold) c.graph_threshold = *a.threshold;
    }, timer);
    const auto& g = l.graph;
    const double thr = l.config.graph_threshold;
    const auto paths = average_shortest_path(g, thr);
    const auto clustering = cluster_cnm(g);
    const bool q_defined = g.total_weight() > 0.0;

    std::ostringstream s;
    s << "target\t" << l.cs.target_id << '\n';
    s << "nodes\t" << g.size() << '\n';
    s << "threshold\t" << fixed(thr) << '\n';
    s << "edges\t" << g.edge_count(thr) << '\n';
    s << "clustering_coefficient\t" << fixed(clustering_coefficient(g, thr)) << '\n';
    s << "avg_shortest_path\t" << fixed(paths.mean_length) << '\n';
    s << "disconnected_fraction\t" << fixed(paths.disconnected_fraction) << '\n';
    s << "clusters\t" << clustering.cluster_count << '\n';
    s << "modularity\t" << (q_defined ? fixed(clustering.q) : std::string("undefined")) << '\n';
    if (g.size() == 1) s << "note\tsingle vertex: C and path length are trivially 0, modularity undefined\n";
    else if (!q_defined) s << "note\tno edge weight: modularity undefined\n";

    OutputSet files;
    if (!a.out.empty()) files.add(a.out, s.str());
    if (!a.dot.empty()) {
        std::ostringstream d;
        write_dot(d, g, thr);
        files.add(a.dot, d.str());
    }
    files.commit();
    out << s.str();
    return kExitOk;
}

struct ClusterArgs {
    CorpusArgs corpus;
    std::string out;
};

int cmd_cluster(const ClusterArgs& a, std::ostream& out) {
    StageTimer timer;
    auto l = load_corpus(a.corpus, "cluster", [](RunConfig&) {}, timer);
    const auto clustering = cluster_cnm(l.graph);
    std::ostringstream s;
    write_clustering_tsv(s, l.graph, clustering);
    if (a.out.empty()) {
        out << s.str();
    } else {
        OutputSet files;
        files.add(a.out, s.str());
        files.commit();
        out << a.out << '\n';
    }
    return kExitOk;
}

// ---- evaluate ----------------------------------------------------------------

void emit_report(const std::string& prefix, const std::string& tsv, const ojson& json, std::ostream& out) {
    if (prefix.empty()) {
        out << tsv;
        return;
    }
    OutputSet files;
    files.add(prefix + ".tsv", tsv);
    files.add(prefix + ".json", json.dump(2) + "\n");
    files.commit();
    out << tsv;
}

struct PyramidArgs {
    CorpusArgs corpus;
    std::string factoids;
    std::string weights;
    std::vector<std::string> summaries;
    std::string out;
};

int cmd_eval_pyramid(const PyramidArgs& a, std::ostream& out) {
    StageTimer timer;
    auto l = load_corpus(a.corpus, "evaluate pyramid", [](RunConfig&) {}, timer);
    const auto ann = load_factoid_annotation(a.factoids, l.cs,
                                             a.weights.empty() ? std::nullopt : std::optional<std::filesystem::path>(a.weights));
    const auto pyr = build_pyramid(ann);
    std::ostringstream tsv;
    tsv << "method\tbudget\ttrials\tcovered\tD\tMax\tpyramid\n";
    ojson json;
    json["target_id"] = l.cs.target_id;
    json["pyramid_tiers"] = ojson::object();
    for (const auto& [tier, factoids] : pyr.tiers) json["pyramid_tiers"][std::to_string(tier)] = factoids;
    json["cells"] = ojson::array();
    for (const auto& path : a.summaries) {
        const auto summaries = read_summaries(path);
        std::vector<double> p, covered, d, mx;
        ojson detail = ojson::array();
        for (const auto& s : summaries) {
            validate_summary_ids(s, l.cs);
            const auto r = pyramid_score(s, ann, pyr);
            p.push_back(r.score);
            covered.push_back(static_cast<double>(r.factoids_covered));
            d.push_back(r.d);
            mx.push_back(r.max);
            detail.push_back(pyramid_json(r));
        }
        const auto& first = summaries.front();
        tsv << first.method << '\t' << first.budget << '\t' << summaries.size() << '\t' << fixed(mean(covered), 2) << '\t'
            << fixed(mean(d), 2) << '\t' << fixed(mean(mx), 2) << '\t' << fixed(mean(p)) << '\n';
        ojson cell;
        cell["summary_file"] = path;
        cell["method"] = first.method;
        cell["budget"] = first.budget;
        cell["mean_pyramid"] = mean(p);
        cell["detail"] = std::move(detail);
        json["cells"].push_back(std::move(cell));
    }
    emit_report(a.out, tsv.str(), json, out);
    return kExitOk;
}

struct RougeArgs {
    std::vector<std::string> summaries;
    std::vector<std::string> refs;
    std::vector<std::size_t> orders{1, 2};
    bool jackknife = false;
    std::string out;
};

int cmd_eval_rouge(const RougeArgs& a, std::ostream& out) {
    std::vector<std::string> refs;
    for (const auto& r : a.refs) refs.push_back(load_reference_summary(r));
    std::ostringstream tsv;
    tsv << "method";
    for (auto n : a.orders) tsv << "\trouge-" << n;
    tsv << '\n';
    ojson json;
    json["references"] = a.refs;
    json["jackknife"] = a.jackknife;
    json["cells"] = ojson::array();
    for (const auto& path : a.summaries) {
        const auto candidates = read_candidates(path);
        tsv << candidates.front().first;
        ojson cell;
        cell["summary_file"] = path;
        cell["method"] = candidates.front().first;
        for (auto n : a.orders) {
            std::vector<double> scores;
            for (const auto& [method, text] : candidates) scores.push_back(rouge_n(text, refs, n, a.jackknife));
            tsv << '\t' << fixed(mean(scores));
            cell["rouge-" + std::to_string(n)] = mean(scores);
        }
        tsv << '\n';
        json["cells"].push_back(std::move(cell));
    }
    emit_report(a.out, tsv.str(), json, out);
    return kExitOk;
}

struct KappaArgs {
    CorpusArgs corpus;
    std::vector<std::string> spans;
    std::vector<std::string> annotators;
    std::string model;
    std::string out;
};

int cmd_eval_kappa(const KappaArgs& a, std::ostream& out) {
    StageTimer timer;
    auto l = load_corpus(a.corpus, "evaluate kappa", [&](RunConfig& c) {
        if (a.model == "cohen") c.kappa_chance_model = ChanceModel::cohen;
        if (a.model == "scott") c.kappa_chance_model = ChanceModel::scott;
    }, timer);
    std::map<std::string, NuggetSpanAnnotation> all;
    for (const auto& path : a.spans) {
        for (auto& [name, ann] : load_nugget_spans(path, l.cs)) {
            if (!all.emplace(name, std::move(ann)).second) {
                throw ValidationError("annotator '" + name + "' appears in more than one span file");
            }
        }
    }
    std::vector<std::string> names = a.annotators;
    if (names.empty()) {
        for (const auto& [name, ann] : all) names.push_back(name);
    }
    if (names.size() != 2) {
        throw ValidationError("kappa needs exactly two annotators, found " + std::to_string(names.size()) +
                              " (use --annotators A,B)");
    }
    for (const auto& n : names) {
        if (!all.contains(n)) throw ValidationError("no spans for annotator '" + n + "'");
    }
    // An annotator with no rows still needs an (empty) annotation.
    const auto& ka = all.at(names[0]);
    const auto& kb = all.at(names[1]);
    static const char* kLabels[] = {"unigram", "bigram", "trigram"};
    std::ostringstream tsv;
    tsv << "target\tannotators\tunigram\tbigram\ttrigram\n";
    tsv << l.cs.target_id << '\t' << names[0] << " vs " << names[1];
    ojson json;
    json["target_id"] = l.cs.target_id;
    json["annotators"] = names;
    json["chance_model"] = l.config.kappa_chance_model == ChanceModel::cohen ? "cohen" : "scott";
    for (std::size_t n = 1; n <= 3; ++n) {
        const double k = ngram_kappa(ka, kb, l.cs, n, l.config.kappa_chance_model);
        tsv << '\t' << fixed(k, 3);
        json[kLabels[n - 1]] = k;
    }
    tsv << '\n';
    emit_report(a.out, tsv.str(), json, out);
    return kExitOk;
}

struct ClusteringEvalArgs {
    CorpusArgs corpus;
    std::string factoids;
    std::string clusters;
    std::string out;
};

std::vector<std::size_t> read_cluster_tsv(const std::filesystem::path& path, const CitationSet& cs) {
    std::istringstream in(read_file(path));
    std::vector<std::optional<std::size_t>> labels(cs.size());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError(path.string() + " line " + std::to_string(line_no) + ": expected node_id<TAB>cluster");
        const auto idx = cs.index_of(line.substr(0, tab));
        if (!idx) throw ValidationError(path.string() + " line " + std::to_string(line_no) + ": unknown sentence id");
        const auto value = line.substr(tab + 1);
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError(path.string() + " line " + std::to_string(line_no) + ": bad cluster index");
        }
        labels[*idx] = std::stoull(value);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i]) throw ValidationError(path.string() + ": sentence '" + cs.sentences[i].id + "' has no cluster");
        out.push_back(*labels[i]);
    }
    return out;
}

int cmd_eval_clustering(const ClusteringEvalArgs& a, std::ostream& out) {
    StageTimer timer;
    auto l = load_corpus(a.corpus, "evaluate clustering", [](RunConfig&) {}, timer);
    const auto ann = load_factoid_annotation(a.factoids, l.cs);
    // Gold class: the sentence's lexicographically smallest factoid, "-" for none.
    std::vector<std::string> classes;
    for (const auto& s : l.cs.sentences) {
        const auto& f = ann.factoids_of(s.id);
        classes.push_back(f.empty() ? "-" : *f.begin());
    }
    const Clustering c = a.clusters.empty() ? cluster_cnm(l.graph) : make_clustering(l.graph, read_cluster_tsv(a.clusters, l.cs));
    const double p = purity(c, classes);
    const double m = nmi(c, classes);
    std::ostringstream tsv;
    tsv << "target\tclusters\tmodularity\tpurity\tnmi\n";
    tsv << l.cs.target_id << '\t' << c.cluster_count << '\t' << fixed(c.q) << '\t' << fixed(p) << '\t' << fixed(m) << '\n';
    ojson json;
    json["target_id"] = l.cs.target_id;
    json["clusters"] = c.cluster_count;
    json["modularity"] = c.q;
    json["purity"] = p;
    json["nmi"] = m;
    json["assignment"] = c.assignment;
    emit_report(a.out, tsv.str(), json, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Citation-based extractive summarization and evaluation", "clexrank"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    SummarizeArgs sa;
    auto* summarize = app.add_subcommand("summarize", "Build a word-budgeted extractive summary");
    add_corpus_options(summarize, sa.corpus);
    summarize->add_option("--method", sa.method, "c-lexrank | c-rr | lexrank | mmr | divrank | divrank-prior | random")
        ->required()
        ->check(CLI::IsMember(kMethods));
    summarize->add_option("--budget", sa.budget, "Summary length in words")->check(CLI::PositiveNumber);
    summarize->add_option("--seed", sa.seed, "Seed for random and c-rr");
    summarize->add_option("--trials", sa.trials, "Number of seeded runs for random and c-rr")->check(CLI::PositiveNumber);
    summarize->add_option("--factoids", sa.factoids, "Factoid annotation; adds pyramid scores")->check(CLI::ExistingFile);
    summarize->add_option("--weights", sa.weights, "Factoid weights (factoid_id<TAB>weight)")->check(CLI::ExistingFile);
    summarize->add_option("--out", sa.out, "Output prefix (default <target>.<method>.<budget>)");
    summarize->add_flag("--timings", sa.timings, "Record per-stage timings in the manifest");

    GraphArgs ga;
    auto* graph_stats = app.add_subcommand("graph-stats", "Small-world statistics and modularity of the network");
    add_corpus_options(graph_stats, ga.corpus);
    graph_stats->add_option("--threshold", ga.threshold, "Edge iff cosine > threshold")->check(CLI::Range(0.0, 1.0));
    graph_stats->add_option("--dot", ga.dot, "Write the binarized graph as DOT");
    graph_stats->add_option("--out", ga.out, "Also write the statistics to this file");

    ClusterArgs ca;
    auto* cluster = app.add_subcommand("cluster", "Greedy modularity clustering of the network");
    add_corpus_options(cluster, ca.corpus);
    cluster->add_option("--out", ca.out, "Clustering TSV (default stdout)");

    auto* evaluate = app.add_subcommand("evaluate", "Score summaries or annotations");
    evaluate->require_subcommand(1);

    PyramidArgs pa;
    auto* pyramid = evaluate->add_subcommand("pyramid", "Pyramid score against a factoid annotation");
    add_corpus_options(pyramid, pa.corpus);
    pyramid->add_option("--factoids", pa.factoids)->required()->check(CLI::ExistingFile);
    pyramid->add_option("--weights", pa.weights)->check(CLI::ExistingFile);
    pyramid->add_option("--summary", pa.summaries, "Summary JSON files")->required()->check(CLI::ExistingFile);
    pyramid->add_option("--out", pa.out, "Report prefix (<prefix>.tsv, <prefix>.json)");

    RougeArgs ra;
    auto* rouge = evaluate->add_subcommand("rouge", "ROUGE-N recall against reference summaries");
    rouge->add_option("--summary", ra.summaries, "Summary files (.json or text)")->required()->check(CLI::ExistingFile);
    rouge->add_option("--ref", ra.refs, "Reference summaries")->required()->check(CLI::ExistingFile);
    rouge->add_option("--n", ra.orders, "N-gram orders")->delimiter(',')->check(CLI::Range(1, 4));
    rouge->add_flag("--jackknife", ra.jackknife, "Leave-one-reference-out averaging");
    rouge->add_option("--out", ra.out, "Report prefix");

    KappaArgs ka;
    auto* kappa = evaluate->add_subcommand("kappa", "N-gram kappa between two nugget annotations");
    add_corpus_options(kappa, ka.corpus);
    kappa->add_option("--spans", ka.spans, "Nugget span files")->required()->check(CLI::ExistingFile);
    kappa->add_option("--annotators", ka.annotators, "The two annotators to compare")->delimiter(',');
    kappa->add_option("--model", ka.model, "cohen | scott")->check(CLI::IsMember({"cohen", "scott"}));
    kappa->add_option("--out", ka.out, "Report prefix");

    ClusteringEvalArgs ea;
    auto* clustering = evaluate->add_subcommand("clustering", "Purity and NMI against factoid classes");
    add_corpus_options(clustering, ea.corpus);
    clustering->add_option("--factoids", ea.factoids)->required()->check(CLI::ExistingFile);
    clustering->add_option("--clusters", ea.clusters, "Clustering TSV (default: run CNM)")->check(CLI::ExistingFile);
    clustering->add_option("--out", ea.out, "Report prefix");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (summarize->parsed()) return cmd_summarize(sa, out);
        if (graph_stats->parsed()) return cmd_graph_stats(ga, out);
        if (cluster->parsed()) return cmd_cluster(ca, out);
        if (pyramid->parsed()) return cmd_eval_pyramid(pa, out);
        if (rouge->parsed()) return cmd_eval_rouge(ra, out);
        if (kappa->parsed()) return cmd_eval_kappa(ka, out);
        if (clustering->parsed()) return cmd_eval_clustering(ea, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    err << "usage error: no command\n";
    return kExitUsage;
}

}  // namespace clexrank::cli
