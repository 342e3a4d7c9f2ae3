#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "clexrank/community.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace clexrank;

using Labels = std::vector<std::size_t>;

namespace {

SimilarityGraph two_cliques() {
    auto e = fixtures::clique(0, 4, 1.0);
    auto f = fixtures::clique(4, 4, 1.0);
    e.insert(e.end(), f.begin(), f.end());
    return fixtures::graph(8, e);
}

}  // namespace

TEST_CASE("modularity reference values") {
    auto g = two_cliques();
    CHECK(modularity(g, Labels(8, 0)) == 0.0);
    CHECK(modularity(g, Labels{0, 0, 0, 0, 1, 1, 1, 1}) == doctest::Approx(0.5));
    CHECK(modularity(g, Labels{0, 1, 2, 3, 4, 5, 6, 7}) < 0.0);
    CHECK_THROWS_AS(modularity(SimilarityGraph{}, Labels{}), std::domain_error);
    CHECK_THROWS_AS(modularity(fixtures::graph(3, {}), Labels{0, 1, 2}), std::domain_error);
}

TEST_CASE("single-cluster modularity is exactly zero") {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        auto g = fixtures::random_graph(2 + uniform_index(rng, 15), 0.6, rng);
        if (g.total_weight() == 0.0) continue;
        CHECK(modularity(g, Labels(g.size(), 0)) == 0.0);
    }
}

TEST_CASE("random assignments average to the exact expectation") {
    auto g = two_cliques();
    auto w = oracle::dense(g);
    double exact = 0.0;
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
        Labels l(8);
        for (std::size_t i = 0; i < 8; ++i) l[i] = (mask >> i) & 1u;
        exact += oracle::modularity_triple_sum(w, l);
    }
    exact /= 256.0;
    Rng rng(99);
    double mc = 0.0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        Labels l(8);
        for (auto& x : l) x = uniform_index(rng, 2);
        mc += modularity(g, l);
    }
    mc /= trials;
    CHECK(mc == doctest::Approx(exact).epsilon(0.02));
    CHECK(std::abs(exact) < 0.1);
}

TEST_CASE("modularity matches direct evaluation on small graphs") {
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        auto g = fixtures::random_graph(1 + uniform_index(rng, 8), 0.5, rng);
        if (g.total_weight() == 0.0) continue;
        auto w = oracle::dense(g);
        for (int k = 0; k < 10; ++k) {
            Labels l(g.size());
            for (auto& x : l) x = uniform_index(rng, 4);
            CHECK(modularity(g, l) == doctest::Approx(oracle::modularity_triple_sum(w, normalize_labels(l))).epsilon(1e-12));
        }
    }
}

TEST_CASE("normalize labels") {
    CHECK(normalize_labels(Labels{7, 7, 2, 9, 2}) == Labels{0, 0, 1, 2, 1});
    CHECK(normalize_labels(Labels{}).empty());
}

TEST_CASE("cnm") {
    SUBCASE("single node") {
        auto c = cluster_cnm(fixtures::graph(1, {}));
        CHECK(c.cluster_count == 1);
        CHECK(c.assignment == Labels{0});
    }
    SUBCASE("edgeless graph stays in singletons") {
        auto c = cluster_cnm(fixtures::graph(3, {}));
        CHECK(c.cluster_count == 3);
        CHECK(c.q == 0.0);
    }
    SUBCASE("two disconnected cliques, confirmed optimal by exhaustive search") {
        auto g = two_cliques();
        auto c = cluster_cnm(g);
        CHECK(c.assignment == Labels{0, 0, 0, 0, 1, 1, 1, 1});
        CHECK(c.q == doctest::Approx(oracle::best_modularity(oracle::dense(g))).epsilon(1e-12));
        auto m = c.members();
        REQUIRE(m.size() == 2);
        CHECK(m[1] == Labels{4, 5, 6, 7});
    }
    SUBCASE("reported q equals recomputed modularity") {
        Rng rng(23);
        for (int t = 0; t < 100; ++t) {
            auto g = fixtures::random_graph(2 + uniform_index(rng, 20), 0.3, rng);
            if (g.total_weight() == 0.0) continue;
            auto c = cluster_cnm(g);
            CHECK(std::abs(c.q - modularity(g, c.assignment)) < 1e-10);
            CHECK(c.q >= -1e-12);
            CHECK(normalize_labels(c.assignment) == c.assignment);
        }
    }
    SUBCASE("never far from the optimum on tiny graphs") {
        Rng rng(29);
        for (int t = 0; t < 20; ++t) {
            auto g = fixtures::random_graph(6, 0.5, rng);
            if (g.total_weight() == 0.0) continue;
            CHECK(cluster_cnm(g).q <= oracle::best_modularity(oracle::dense(g)) + 1e-12);
        }
    }
    SUBCASE("relabeling vertices permutes the result") {
        auto g = two_cliques();
        std::vector<std::size_t> perm{5, 2, 7, 0, 3, 6, 1, 4};
        auto h = g.induced(perm);
        auto cg = cluster_cnm(g), ch = cluster_cnm(h);
        CHECK(ch.q == doctest::Approx(cg.q));
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b)
                CHECK((ch.assignment[a] == ch.assignment[b]) == (cg.assignment[perm[a]] == cg.assignment[perm[b]]));
    }
}

TEST_CASE("W05-0622 fixture clusters with positive modularity") {
    TokenizerOptions opt;
    opt.stopwords = load_stopwords(fixtures::stopwords());
    auto cs = load_citation_set(fixtures::w05_citations(), SourceKind::citations, opt);
    auto g = build_citation_summary_network(cs, fixtures::self_idf(cs));
    auto c = cluster_cnm(g);
    CHECK(c.cluster_count >= 2);
    CHECK(c.q > 0.0);
    // The pipelined-approach pair s2, s5 ends up together.
    CHECK(c.assignment[1] == c.assignment[4]);
}

TEST_CASE("purity and nmi reference values") {
    CHECK(purity(Labels{0, 0, 1, 1}, Labels{0, 0, 1, 1}) == 1.0);
    CHECK(purity(Labels{0, 0, 1, 1}, Labels{0, 1, 0, 1}) == 0.5);
    CHECK(nmi(Labels{0, 0, 1, 1}, Labels{3, 3, 5, 5}) == doctest::Approx(1.0));
    CHECK(nmi(Labels{0, 0, 1, 1}, Labels{0, 1, 0, 1}) == doctest::Approx(0.0));
    CHECK(nmi(Labels{0, 0, 0}, Labels{1, 1, 1}) == 1.0);

    Clustering c;
    c.assignment = {0, 0, 1, 1};
    c.cluster_count = 2;
    std::vector<std::string> classes{"f1", "f1", "f2", "-"};
    CHECK(purity(c, classes) == 0.75);
    CHECK(nmi(c, classes) == doctest::Approx(oracle::nmi_direct(c.assignment, Labels{0, 0, 1, 2})));
}

TEST_CASE("purity and nmi agree with the formulas over all partitions of five items") {
    std::vector<Labels> parts;
    oracle::for_each_partition(5, [&](const Labels& p) { parts.push_back(p); });
    CHECK(parts.size() == 52);
    for (const auto& a : parts) {
        for (const auto& b : parts) {
            CHECK(std::abs(purity(a, b) - oracle::purity_direct(a, b)) <= 1e-12);
            CHECK(std::abs(nmi(a, b) - oracle::nmi_direct(a, b)) <= 1e-12);
        }
    }
}

TEST_CASE("clustering tsv") {
    auto g = two_cliques();
    std::ostringstream out;
    write_clustering_tsv(out, g, cluster_cnm(g));
    CHECK(out.str().rfind("# Q=0.500000\n", 0) == 0);
    CHECK(out.str().find("n7\t1\n") != std::string::npos);
}
