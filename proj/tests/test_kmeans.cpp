#include <algorithm>
#include <set>

#include "auxclust/kmeans.hpp"
#include "auxclust/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace auxclust;

namespace {

TermVector make(std::initializer_list<std::pair<const char*, double>> entries) {
    TermVector v;
    for (const auto& [term, w] : entries) v.set(term, w);
    return v;
}

std::vector<TermVector> random_corpus(Rng& rng, std::size_t n) {
    std::vector<TermVector> docs;
    for (std::size_t d = 0; d < n; ++d) {
        TermVector v;
        std::size_t terms = rng.below(6);  // occasionally empty
        for (std::size_t t = 0; t < terms; ++t) {
            v.add("w" + std::to_string(rng.below(10)), 1.0 + static_cast<double>(rng.below(3)));
        }
        docs.push_back(v);
    }
    return docs;
}

// Canonical form of a 2-cluster assignment: the set of documents sharing
// document 0's cluster.
std::set<int> side_of_doc0(const ClusterState& state) {
    std::set<int> side;
    for (std::size_t d = 0; d < state.assignment.size(); ++d) {
        if (state.assignment[d] == state.assignment[0]) side.insert(static_cast<int>(d));
    }
    return side;
}

}  // namespace

TEST_CASE("seed_clusters with k = n gives a bijection") {
    std::vector<TermVector> docs = {make({{"a", 1}}), make({{"b", 1}})};
    ClusterState state = seed_clusters(docs, {.k = 2, .seed = 5});
    validate_partition(state, docs.size());
    CHECK(state.assignment[0] != state.assignment[1]);
}

TEST_CASE("seed_clusters with k = 1 puts everything in cluster 0") {
    std::vector<TermVector> docs(5, make({{"a", 1}}));
    ClusterState state = seed_clusters(docs, {.k = 1, .seed = 9});
    for (int c : state.assignment) CHECK(c == 0);
    CHECK(state.centroids[0].member_count == 5);
}

TEST_CASE("seeding is deterministic in the seed") {
    Rng rng(23);
    std::vector<TermVector> docs = random_corpus(rng, 9);
    ClusterState a = seed_clusters(docs, {.k = 3, .seed = 42});
    ClusterState b = seed_clusters(docs, {.k = 3, .seed = 42});
    CHECK(a.assignment == b.assignment);
    for (int c = 0; c < 3; ++c) CHECK(a.centroids[c].vector == b.centroids[c].vector);
}

TEST_CASE("seed_clusters rejects k = 0 and k > corpus size") {
    std::vector<TermVector> docs = {make({{"a", 1}})};
    CHECK_THROWS_AS(seed_clusters(docs, {.k = 0, .seed = 1}), std::invalid_argument);
    CHECK_THROWS_AS(seed_clusters(docs, {.k = 2, .seed = 1}), std::invalid_argument);
}

TEST_CASE("assign_step takes the argmax and breaks ties toward the lowest cluster") {
    std::vector<TermVector> docs = {make({{"a", 3}})};
    ClusterState state;
    state.k = 2;
    state.assignment = {1};
    state.centroids.resize(2);

    // Clearly distinct similarities.
    state.centroids[0].vector = make({{"a", 1}});
    state.centroids[1].vector = make({{"a", 1}, {"b", 9}});
    state.centroids[1].member_count = 1;
    CHECK(assign_step(state, docs) == 1);
    CHECK(state.assignment[0] == 0);

    // Parallel centroids tie at similarity 1; lowest index wins.
    state.assignment = {1};
    state.centroids[0] = {make({{"a", 1}}), 0};
    state.centroids[1] = {make({{"a", 2}}), 1};
    assign_step(state, docs);
    CHECK(state.assignment[0] == 0);
}

TEST_CASE("assign_step at a fixed point moves nothing and changes nothing") {
    Rng rng(29);
    std::vector<TermVector> docs = random_corpus(rng, 10);
    ClusterState state = run_kmeans(docs, {.k = 3, .max_iterations = 50, .seed = 7});
    ClusterState before = state;
    CHECK(assign_step(state, docs) == 0);
    CHECK(state.assignment == before.assignment);
    // Monotone stop: a second pass is still at the fixed point.
    CHECK(assign_step(state, docs) == 0);
}

TEST_CASE("update_centroids recomputes means") {
    std::vector<TermVector> docs = {make({{"a", 2}}), make({{"a", 4}}), make({{"b", 7}})};
    ClusterState state;
    state.k = 2;
    state.assignment = {0, 0, 1};
    state.centroids.resize(2);
    state.centroids[0].member_count = 2;
    state.centroids[1].member_count = 1;
    update_centroids(state, docs);
    CHECK(state.centroids[0].vector == make({{"a", 3}}));
    CHECK(state.centroids[1].vector == make({{"b", 7}}));  // singleton keeps its member's vector
    CHECK(state.centroids[0].member_count == 2);
}

TEST_CASE("update_centroids repairs an emptied cluster with the least similar document") {
    std::vector<TermVector> docs = {make({{"a", 1}}), make({{"a", 1}}), make({{"b", 1}})};
    ClusterState state;
    state.k = 2;
    state.assignment = {0, 0, 0};
    state.centroids.resize(2);
    state.centroids[0].member_count = 3;
    update_centroids(state, docs);
    validate_partition(state, docs.size());
    CHECK(state.assignment == std::vector<int>{0, 0, 1});
    CHECK(state.centroids[1].vector == docs[2]);
    CHECK(state.centroids[0].vector == make({{"a", 1}}));
}

TEST_CASE("run_kmeans recovers the unique best bipartition of the 4-doc corpus") {
    // Documents {a,a,b}, {a,a}, {x,y}, {x,x,y}.
    std::vector<TermVector> docs = {make({{"a", 2}, {"b", 1}}), make({{"a", 2}}), make({{"x", 1}, {"y", 1}}),
                                    make({{"x", 2}, {"y", 1}})};

    // Oracle: {0,1} vs {2,3} is the unique bipartition maximizing total
    // member-to-centroid similarity. Masks with bit0 = 0 enumerate each
    // bipartition once.
    const unsigned planted = 0b1100;
    double planted_score = oracle::bipartition_score(docs, planted);
    for (unsigned mask = 2; mask <= 14; mask += 2) {
        if (mask == planted) continue;
        CHECK(oracle::bipartition_score(docs, mask) < planted_score);
    }

    for (std::uint64_t seed : {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}) {
        ClusterState state = run_kmeans(docs, {.k = 2, .max_iterations = 50, .seed = seed});
        CHECK(side_of_doc0(state) == std::set<int>{0, 1});
    }
}

TEST_CASE("run_kmeans with k = n keeps distinct documents in singleton clusters") {
    std::vector<TermVector> docs = {make({{"a", 1}}), make({{"b", 1}}), make({{"c", 1}}), make({{"d", 1}})};
    // Oracle: from singleton seeding every document already sits at its
    // argmax (self-similarity 1, orthogonal otherwise), so no reassignment
    // can improve.
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (std::size_t e = 0; e < docs.size(); ++e) {
            if (d != e) CHECK(cosine_similarity(docs[d], docs[e]) < cosine_similarity(docs[d], docs[d]));
        }
    }
    ClusterState state = run_kmeans(docs, {.k = 4, .max_iterations = 50, .seed = 3});
    validate_partition(state, docs.size());
    for (const auto& c : state.centroids) CHECK(c.member_count == 1);
}

TEST_CASE("run_kmeans with k = 1 ends at the corpus mean") {
    std::vector<TermVector> docs = {make({{"a", 1}, {"b", 1}}), make({{"b", 1}, {"c", 1}})};
    ClusterState state = run_kmeans(docs, {.k = 1, .max_iterations = 50, .seed = 0});
    CHECK(state.centroids[0].vector == make({{"a", 0.5}, {"b", 1}, {"c", 0.5}}));
}

TEST_CASE("run_kmeans is deterministic and respects max_iterations") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 4 + rng.below(9);
        std::vector<TermVector> docs = random_corpus(rng, n);
        int k = 1 + static_cast<int>(rng.below(4));
        if (static_cast<std::size_t>(k) > n) k = static_cast<int>(n);
        KMeansConfig config{.k = k, .max_iterations = 7, .seed = rng.next()};

        int iterations = 0;
        ClusterState a = run_kmeans(docs, config, [&](const ClusterState& s, int) {
            ++iterations;
            validate_partition(s, docs.size());
        });
        CHECK(iterations <= config.max_iterations);
        CHECK(a.iteration <= config.max_iterations);

        ClusterState b = run_kmeans(docs, config);
        CHECK(a.assignment == b.assignment);
        for (int c = 0; c < k; ++c) CHECK(a.centroids[c].vector == b.centroids[c].vector);
    }
}
