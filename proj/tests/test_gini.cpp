#include <cmath>

#include "auxclust/gini.hpp"
#include "auxclust/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace auxclust;

namespace {

// Documents that only need attributes and a cluster assignment.
struct Instance {
    std::vector<Document> docs;
    ClusterState state;
};

Instance make_instance(int k, const std::vector<int>& assignment,
                       const std::vector<std::set<Attribute>>& attrs) {
    Instance inst;
    inst.state.k = k;
    inst.state.assignment = assignment;
    inst.state.centroids.resize(k);
    for (int c : assignment) inst.state.centroids[c].member_count++;
    for (std::size_t d = 0; d < assignment.size(); ++d) {
        Document doc;
        doc.doc_id = "doc" + std::to_string(d);
        doc.attributes = d < attrs.size() ? attrs[d] : std::set<Attribute>{};
        inst.docs.push_back(std::move(doc));
    }
    return inst;
}

Instance random_instance(Rng& rng, int max_docs, int max_k, int max_attrs) {
    int k = 1 + static_cast<int>(rng.below(max_k));
    int n = k + static_cast<int>(rng.below(max_docs - k + 1));
    std::vector<int> assignment(n);
    for (int d = 0; d < n; ++d) assignment[d] = d < k ? d : static_cast<int>(rng.below(k));

    int attr_pool = 1 + static_cast<int>(rng.below(max_attrs));
    std::vector<std::set<Attribute>> attrs(n);
    for (int d = 0; d < n; ++d) {
        for (int a = 0; a < attr_pool; ++a) {
            if (rng.below(2) == 0) attrs[d].insert({"a" + std::to_string(a), "v"});
        }
    }
    return make_instance(k, assignment, attrs);
}

const Attribute kR{"r", "x"};

}  // namespace

TEST_CASE("presence fractions: symmetric attribute spreads evenly") {
    // 2 clusters of 4 docs each; r in half of each cluster's docs.
    Instance inst = make_instance(2, {0, 0, 0, 0, 1, 1, 1, 1},
                                  {{kR}, {kR}, {}, {}, {kR}, {kR}, {}, {}});
    AttributeStats stats = presence_fractions(inst.state, inst.docs);
    CHECK(stats.presence_fractions.at(kR)[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(stats.presence_fractions.at(kR)[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(stats.presence_counts.at(kR) == std::vector<int>{2, 2});
}

TEST_CASE("presence fractions: fully concentrated attribute") {
    Instance inst = make_instance(2, {0, 0, 1, 1}, {{kR}, {kR}, {}, {}});
    AttributeStats stats = presence_fractions(inst.state, inst.docs);
    CHECK(stats.presence_fractions.at(kR)[0] == 1.0);
    CHECK(stats.presence_fractions.at(kR)[1] == 0.0);
}

TEST_CASE("presence fractions: the two-step worked example") {
    // Clusters sized (5,5); r in 3 docs of cluster 0 and 1 doc of cluster 1:
    // f = (0.6, 0.2), Pr = (0.75, 0.25).
    std::vector<int> assignment = {0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
    std::vector<std::set<Attribute>> attrs(10);
    attrs[0] = attrs[1] = attrs[2] = {kR};
    attrs[5] = {kR};
    Instance inst = make_instance(2, assignment, attrs);
    AttributeStats stats = presence_fractions(inst.state, inst.docs);
    CHECK(stats.presence_fractions.at(kR)[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(stats.presence_fractions.at(kR)[1] == doctest::Approx(0.25).epsilon(1e-12));

    stats.gini = gini_index(stats);
    CHECK(stats.gini.at(kR) == doctest::Approx(0.625).epsilon(1e-12));
}

TEST_CASE("gini of an even split is 0.5, of full concentration 1.0") {
    Instance even = make_instance(2, {0, 0, 1, 1}, {{kR}, {}, {kR}, {}});
    AttributeStats stats = presence_fractions(even.state, even.docs);
    stats.gini = gini_index(stats);
    CHECK(stats.gini.at(kR) == doctest::Approx(0.5).epsilon(1e-12));

    Instance conc = make_instance(2, {0, 0, 1, 1}, {{kR}, {kR}, {}, {}});
    stats = presence_fractions(conc.state, conc.docs);
    stats.gini = gini_index(stats);
    CHECK(stats.gini.at(kR) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("select_usable thresholds and falls back to all") {
    const Attribute author{"author", "verne"};
    const Attribute language{"language", "English"};
    // author concentrated in cluster 0 (gini 1), language split evenly (gini 0.5).
    Instance inst = make_instance(2, {0, 0, 1, 1},
                                  {{author, language}, {author}, {language}, {}});
    AttributeStats stats = presence_fractions(inst.state, inst.docs);
    stats.gini = gini_index(stats);
    REQUIRE(stats.gini.at(author) == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(stats.gini.at(language) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK(select_usable(stats, 0.75) == std::set<Attribute>{author});
    CHECK_FALSE(stats.fallback_all_usable);

    CHECK(select_usable(stats, 0.0) == std::set<Attribute>{author, language});

    CHECK(select_usable(stats, 0.99999) == std::set<Attribute>{author});  // exact gini 1.0 passes

    auto usable = select_usable(stats, 1.5);  // nothing reaches it
    CHECK(usable == std::set<Attribute>{author, language});
    CHECK(stats.fallback_all_usable);
}

TEST_CASE("a corpus without attributes is flagged") {
    Instance inst = make_instance(2, {0, 1}, {});
    AttributeStats stats = presence_fractions(inst.state, inst.docs);
    CHECK(stats.no_attributes);
    CHECK(stats.presence_counts.empty());
    stats.gini = gini_index(stats);
    CHECK(select_usable(stats, 0.5).empty());
    CHECK_FALSE(stats.fallback_all_usable);
}

TEST_CASE("presence fractions normalize to 1 and gini stays within [1/k, 1]") {
    Rng rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        Instance inst = random_instance(rng, 12, 4, 5);
        AttributeStats stats = presence_fractions(inst.state, inst.docs);
        stats.gini = gini_index(stats);
        for (const auto& [attr, fractions] : stats.presence_fractions) {
            double sum = 0.0;
            for (double p : fractions) sum += p;
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
        for (const auto& [attr, g] : stats.gini) {
            CHECK(g >= 1.0 / inst.state.k - 1e-9);
            CHECK(g <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("uniform within-cluster fractions hit the 1/k floor exactly") {
    // r in exactly half of each of 3 clusters of size 4.
    std::vector<int> assignment;
    std::vector<std::set<Attribute>> attrs;
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < 4; ++i) {
            assignment.push_back(c);
            attrs.push_back(i < 2 ? std::set<Attribute>{kR} : std::set<Attribute>{});
        }
    }
    Instance inst = make_instance(3, assignment, attrs);
    AttributeStats stats = presence_fractions(inst.state, inst.docs);
    stats.gini = gini_index(stats);
    CHECK(stats.gini.at(kR) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("gini matches the document-enumerating oracle on random corpora") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        Instance inst = random_instance(rng, 12, 4, 5);
        AttributeStats stats = presence_fractions(inst.state, inst.docs);
        stats.gini = gini_index(stats);
        auto expected = oracle::gini_scores(inst.docs, inst.state.assignment, inst.state.k);
        REQUIRE(stats.gini.size() == expected.size());
        for (const auto& [attr, g] : expected) {
            CHECK(stats.gini.at(attr) == doctest::Approx(g).epsilon(1e-9));
        }
    }
}
