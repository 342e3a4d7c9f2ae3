#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "clexrank/corpus_io.hpp"
#include "clexrank/idf.hpp"
#include "clexrank/lexical.hpp"
#include "support/fixtures.hpp"

using namespace clexrank;

using Tokens = std::vector<std::string>;

TEST_CASE("tokenize") {
    TokenizerOptions opt;
    CHECK(tokenize("Three New Probabilistic Models", opt) == Tokens{"three", "new", "probabilistic", "models"});
    CHECK(tokenize("", opt).empty());
    CHECK(tokenize("O(n3) parsing algorithm", opt) == Tokens{"on3", "parsing", "algorithm"});
    CHECK(tokenize("  ( ) -- ", opt).empty());
    CHECK(tokenize("Café naïve", opt) == Tokens{"café", "naïve"});

    SUBCASE("stopwords apply after normalization") {
        opt.stopwords = {"the", "al"};
        CHECK(tokenize("The model of Cohn et al. (2005)", opt) == Tokens{"model", "of", "cohn", "et", "2005"});
    }
    SUBCASE("options off") {
        opt.lowercase = false;
        opt.strip_punctuation = false;
        CHECK(tokenize("O(n3) Parsing", opt) == Tokens{"O(n3)", "Parsing"});
    }
}

TEST_CASE("whitespace words") {
    CHECK(count_words("  a  b\tc\n") == 3);
    CHECK(count_words("") == 0);
    auto w = whitespace_words("x, y");
    REQUIRE(w.size() == 2);
    CHECK(w[0] == "x,");
}

TEST_CASE("stopword file") {
    auto sw = load_stopwords(fixtures::stopwords());
    CHECK(sw.contains("the"));
    CHECK(sw.contains("al"));
    CHECK_FALSE(sw.contains("parsing"));
}

TEST_CASE("idf table") {
    std::istringstream in("the\t0.01\nparsing\t4.2\n");
    auto idf = parse_idf_table(in);
    CHECK(idf.lookup("parsing") == 4.2);
    CHECK(idf.lookup("the") == 0.01);
    CHECK(idf.lookup("zyzzyva") == idf.default_idf());
    CHECK(idf.default_idf() == 4.2);

    std::istringstream neg("w -1.0\n");
    CHECK_THROWS_AS(parse_idf_table(neg), ValidationError);
    std::istringstream bad("w\tabc\n");
    CHECK_THROWS_AS(parse_idf_table(bad), ParseError);
    CHECK(IdfTable{}.lookup("x") == 1.0);
}

TEST_CASE("idf from documents") {
    std::vector<Tokens> docs{{"a", "b"}, {"a", "c"}, {"a", "a"}};
    auto idf = IdfTable::from_documents(docs);
    CHECK(idf.lookup("a") == doctest::Approx(0.0));
    CHECK(idf.lookup("b") == doctest::Approx(std::log(3.0)));
    CHECK(idf.lookup("unseen") == doctest::Approx(std::log(3.0)));
}

TEST_CASE("tfidf vector") {
    IdfTable idf({{"a", 2.0}, {"b", 3.0}});
    Tokens t{"a", "a", "b"};
    auto v = tfidf_vector(t, idf);
    CHECK(v.weight("a") == 4.0);
    CHECK(v.weight("b") == 3.0);
    CHECK(v.norm() == doctest::Approx(5.0));
    auto e = tfidf_vector(Tokens{}, idf);
    CHECK(e.empty());
    CHECK(e.norm() == 0.0);

    TermVector merged({{"z", 1.0}, {"a", 0.0}, {"z", 2.0}});
    REQUIRE(merged.entries().size() == 1);
    CHECK(merged.weight("z") == 3.0);
}

TEST_CASE("cosine") {
    TermVector u({{"a", 1.0}, {"b", 1.0}});
    TermVector v({{"a", 1.0}});
    TermVector w({{"c", 5.0}});
    CHECK(cosine_similarity(u, u) == doctest::Approx(1.0));
    CHECK(cosine_similarity(u, w) == 0.0);
    CHECK(cosine_similarity(u, v) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(cosine_similarity(u, TermVector{}) == 0.0);
    CHECK(cosine_similarity(u, v) == cosine_similarity(v, u));
    CHECK(cosine_similarity(u.scaled(7.0), v.scaled(0.5)) == doctest::Approx(cosine_similarity(u, v)));
    CHECK(dot(u, v) == 1.0);
}

TEST_CASE("W05-0622 sentences 9 and 2 overlap lexically") {
    TokenizerOptions opt;
    opt.stopwords = load_stopwords(fixtures::stopwords());
    auto cs = load_citation_set(fixtures::w05_citations(), SourceKind::citations, opt);
    const auto& s2 = cs.sentences[1].tokens;
    const auto& s9 = cs.sentences[8].tokens;
    std::set<std::string> a(s2.begin(), s2.end()), shared;
    for (const auto& t : s9)
        if (a.contains(t)) shared.insert(t);
    CHECK(shared.contains("cohn"));
    CHECK(shared.contains("blunsom"));
    CHECK(shared.contains("2005"));
    CHECK(shared.size() == 3);
    // Plain TF sees the overlap. An idf derived from this set zeroes it, since
    // every sentence cites the same paper.
    CHECK(cosine_similarity(tfidf_vector(s2, IdfTable{}), tfidf_vector(s9, IdfTable{})) > 0.0);
    auto idf = fixtures::self_idf(cs);
    for (const auto& t : shared) CHECK(idf.lookup(t) == 0.0);
    CHECK(cosine_similarity(tfidf_vector(s2, idf), tfidf_vector(s9, idf)) == 0.0);
}
