#include <doctest.h>

#include <sstream>

#include "clexrank/corpus_io.hpp"
#include "support/fixtures.hpp"

using namespace clexrank;

namespace {

CitationSet tiny_set() {
    std::istringstream in(R"({"id":"a","text":"Alpha beta."}
{"id":"b","text":"Gamma delta epsilon.","source_doc":"p2"}
)");
    return parse_citation_set(in, "T", SourceKind::citations);
}

}  // namespace

TEST_CASE("W05-0622 fixture loads nine sentences keyed by the file stem") {
    auto cs = load_citation_set(fixtures::w05_citations(), SourceKind::citations);
    CHECK(cs.target_id == "W05-0622");
    CHECK(cs.size() == 9);
    CHECK(cs.sentences.front().id == "s1");
    CHECK(cs.sentences.back().id == "s9");
    CHECK(cs.index_of("s4") == 3);
    CHECK_FALSE(cs.index_of("s10").has_value());
}

TEST_CASE("citation set parsing") {
    auto cs = tiny_set();
    CHECK(cs.size() == 2);
    CHECK(cs.sentences[0].tokens == std::vector<std::string>{"alpha", "beta"});
    CHECK(cs.sentences[1].word_count == 3);
    CHECK(cs.sentences[1].source_doc == "p2");

    SUBCASE("empty input") {
        std::istringstream in("\n  \n");
        CHECK_THROWS_WITH_AS(parse_citation_set(in, "T", SourceKind::citations), "no sentences", ValidationError);
    }
    SUBCASE("duplicate ids") {
        std::istringstream in("{\"id\":\"s1\",\"text\":\"x\"}\n{\"id\":\"s1\",\"text\":\"y\"}\n");
        CHECK_THROWS_AS(parse_citation_set(in, "T", SourceKind::citations), ValidationError);
    }
    SUBCASE("malformed line names its line number") {
        std::istringstream in("{\"id\":\"s1\",\"text\":\"x\"}\n{not json\n");
        try {
            parse_citation_set(in, "T", SourceKind::citations);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("missing text field") {
        std::istringstream in("{\"id\":\"s1\"}\n");
        CHECK_THROWS_AS(parse_citation_set(in, "T", SourceKind::citations), ParseError);
    }
    SUBCASE("round trip") {
        std::ostringstream out;
        write_citation_set(out, cs);
        std::istringstream back(out.str());
        CHECK(parse_citation_set(back, "T", SourceKind::citations) == cs);
    }
}

TEST_CASE("missing file is a parse error") {
    CHECK_THROWS_AS(load_citation_set("/nonexistent/x.jsonl", SourceKind::citations), ParseError);
}

TEST_CASE("source kinds") {
    CHECK(parse_source_kind("abstracts") == SourceKind::abstracts);
    CHECK(parse_source_kind("full-papers") == SourceKind::full_papers);
    CHECK(to_string(SourceKind::full_papers) == "full_papers");
    CHECK_THROWS_AS(parse_source_kind("tweets"), ValidationError);
}

TEST_CASE("W05-0622 factoid annotation") {
    auto cs = load_citation_set(fixtures::w05_citations(), SourceKind::citations);
    auto ann = load_factoid_annotation(fixtures::w05_factoids(), cs);
    CHECK(ann.factoid_ids == std::set<std::string>{"f1", "f2", "f3"});
    CHECK(ann.sentence_factoids.size() == 9);
    CHECK(ann.factoids_of("s6") == std::set<std::string>{"f1", "f2"});
    CHECK(ann.factoids_of("s9").empty());
    CHECK_FALSE(ann.factoid_weights.has_value());
}

TEST_CASE("factoid annotation errors and weights") {
    auto cs = tiny_set();
    SUBCASE("unknown sentence id") {
        std::istringstream in("s99\tf1\n");
        CHECK_THROWS_AS(parse_factoid_annotation(in, cs), ValidationError);
    }
    SUBCASE("zero factoids is legal") {
        std::istringstream in("# nothing\n");
        auto ann = parse_factoid_annotation(in, cs);
        CHECK(ann.factoid_ids.empty());
        CHECK(ann.sentence_factoids.size() == 2);
    }
    SUBCASE("wrong column count") {
        std::istringstream in("a\tf1\textra\n");
        CHECK_THROWS_AS(parse_factoid_annotation(in, cs), ParseError);
    }
    SUBCASE("weights") {
        std::istringstream in("a\tf1\nb\tf2\n");
        std::istringstream w("f1\t2.5\nf2\t1\n");
        auto ann = parse_factoid_annotation(in, cs, &w);
        REQUIRE(ann.factoid_weights.has_value());
        CHECK(ann.factoid_weights->at("f1") == 2.5);
    }
    SUBCASE("weight for an unknown factoid") {
        std::istringstream in("a\tf1\n");
        std::istringstream w("f1\t1\nf9\t1\n");
        CHECK_THROWS_AS(parse_factoid_annotation(in, cs, &w), ValidationError);
    }
    SUBCASE("non-positive weight") {
        std::istringstream in("a\tf1\n");
        std::istringstream w("f1\t0\n");
        CHECK_THROWS_AS(parse_factoid_annotation(in, cs, &w), ValidationError);
    }
    SUBCASE("missing weight") {
        std::istringstream in("a\tf1\nb\tf2\n");
        std::istringstream w("f1\t1\n");
        CHECK_THROWS_AS(parse_factoid_annotation(in, cs, &w), ValidationError);
    }
}

TEST_CASE("nugget spans") {
    auto cs = tiny_set();  // a = "Alpha beta." (11 bytes)
    SUBCASE("overlapping spans merge and sort") {
        std::istringstream in("x\ta\t6\t10\nx\ta\t0\t5\nx\ta\t3\t7\ny\tb\t0\t5\n");
        auto spans = parse_nugget_spans(in, cs);
        REQUIRE(spans.size() == 2);
        CHECK(spans["x"].spans["a"] == std::vector<Span>{{0, 10}});
        CHECK(spans["y"].annotator == "y");
    }
    SUBCASE("out of bounds") {
        std::istringstream in("x\ta\t0\t12\n");
        CHECK_THROWS_AS(parse_nugget_spans(in, cs), ValidationError);
    }
    SUBCASE("empty span") {
        std::istringstream in("x\ta\t4\t4\n");
        CHECK_THROWS_AS(parse_nugget_spans(in, cs), ValidationError);
    }
    SUBCASE("non-numeric offset") {
        std::istringstream in("x\ta\tfour\t8\n");
        CHECK_THROWS_AS(parse_nugget_spans(in, cs), ParseError);
    }
    SUBCASE("unknown sentence") {
        std::istringstream in("x\tzz\t0\t1\n");
        CHECK_THROWS_AS(parse_nugget_spans(in, cs), ValidationError);
    }
    SUBCASE("offset inside a multibyte codepoint") {
        std::istringstream src("{\"id\":\"u\",\"text\":\"café au lait\"}\n");
        auto ucs = parse_citation_set(src, "U", SourceKind::citations);
        std::istringstream bad("x\tu\t0\t4\n");
        CHECK_THROWS_AS(parse_nugget_spans(bad, ucs), ValidationError);
        std::istringstream good("x\tu\t0\t5\n");
        CHECK_NOTHROW(parse_nugget_spans(good, ucs));
    }
}

TEST_CASE("W05-0622 nugget file covers the annotated sentences") {
    auto cs = load_citation_set(fixtures::w05_citations(), SourceKind::citations);
    auto spans = load_nugget_spans(fixtures::data_dir() + "/w05-0622/nuggets.tsv", cs);
    REQUIRE(spans.contains("underline"));
    CHECK(spans["underline"].spans.size() == 8);
    CHECK(cs.sentences[1].text.substr(144, 18) == "pipelined approach");
}

TEST_CASE("run config validation") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    c.lexrank_damping = 1.0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c = {};
    c.summary_budget_words = 0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c = {};
    c.graph_threshold = -0.1;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c = {};
    c.random_trials = 0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
}
