#include <cmath>

#include "auxclust/rng.hpp"
#include "auxclust/term_vector.hpp"
#include "doctest.h"

using namespace auxclust;

namespace {

TermVector make(std::initializer_list<std::pair<const char*, double>> entries) {
    TermVector v;
    for (const auto& [term, w] : entries) v.set(term, w);
    return v;
}

TermVector random_vector(Rng& rng, int max_terms, double max_weight) {
    TermVector v;
    int n = static_cast<int>(rng.below(max_terms + 1));
    for (int i = 0; i < n; ++i) {
        v.set("t" + std::to_string(rng.below(12)), 1.0 + rng.unit() * (max_weight - 1.0));
    }
    return v;
}

}  // namespace

TEST_CASE("term_frequency_vector counts raw occurrences") {
    Document doc;
    doc.terms = {"a", "b", "a"};
    CHECK(term_frequency_vector(doc) == make({{"a", 2}, {"b", 1}}));

    doc.terms = {};
    CHECK(term_frequency_vector(doc).empty());

    doc.terms = {"x", "y", "z", "x", "x"};
    CHECK(term_frequency_vector(doc) == make({{"x", 3}, {"y", 1}, {"z", 1}}));
}

TEST_CASE("zero weights are never stored") {
    TermVector v;
    v.set("a", 1.0);
    v.set("a", 0.0);
    CHECK(v.empty());
    v.add("b", 2.0);
    v.add("b", -2.0);
    CHECK(v.empty());
    CHECK(v.norm() == 0.0);
}

TEST_CASE("cosine similarity matches the definition") {
    TermVector u = make({{"a", 3}, {"b", 4}});
    CHECK(cosine_similarity(u, u) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(cosine_similarity(make({{"a", 1}}), make({{"b", 1}})) == 0.0);

    // dot = 1, norms sqrt(2) and 1
    CHECK(cosine_similarity(make({{"a", 1}, {"b", 1}}), make({{"a", 1}})) ==
          doctest::Approx(0.70710678).epsilon(1e-9));
}

TEST_CASE("cosine of the zero vector is defined as 0") {
    CHECK(cosine_similarity(TermVector{}, make({{"a", 2}})) == 0.0);
    CHECK(cosine_similarity(TermVector{}, TermVector{}) == 0.0);
}

TEST_CASE("mean_vector averages per term with missing terms as 0") {
    std::vector<TermVector> vs = {make({{"a", 2}}), make({{"a", 4}})};
    CHECK(mean_vector(vs) == make({{"a", 3}}));

    vs = {make({{"a", 1}, {"b", 1}}), make({{"b", 1}, {"c", 1}})};
    CHECK(mean_vector(vs) == make({{"a", 0.5}, {"b", 1}, {"c", 0.5}}));

    vs = {make({{"a", 1}})};
    CHECK(mean_vector(vs) == make({{"a", 1}}));
}

TEST_CASE("mean_vector rejects an empty list") {
    std::vector<TermVector> vs;
    CHECK_THROWS_WITH_AS(mean_vector(vs), doctest::Contains("empty cluster"), std::invalid_argument);
}

TEST_CASE("cosine properties: symmetry, scale invariance, bounds") {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        TermVector u = random_vector(rng, 8, 5.0);
        TermVector v = random_vector(rng, 8, 5.0);

        double uv = cosine_similarity(u, v);
        CHECK(uv == cosine_similarity(v, u));
        CHECK(uv >= 0.0);
        CHECK(uv <= 1.0);

        double c = 0.5 + rng.unit() * 4.0;
        TermVector scaled;
        for (const auto& [term, w] : u.entries()) scaled.set(term, c * w);
        CHECK(cosine_similarity(scaled, v) == doctest::Approx(uv).epsilon(1e-9));
    }
}

TEST_CASE("mean of n copies of v equals v") {
    Rng rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        TermVector v = random_vector(rng, 8, 5.0);
        std::size_t n = 1 + rng.below(6);
        std::vector<TermVector> copies(n, v);
        TermVector mean = mean_vector(copies);
        REQUIRE(mean.size() == v.size());
        for (const auto& [term, w] : v.entries()) {
            CHECK(mean.at(term) == doctest::Approx(w).epsilon(1e-12));
        }
    }
}
