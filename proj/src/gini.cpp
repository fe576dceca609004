#include "auxclust/gini.hpp"

namespace auxclust {

AttributeStats presence_fractions(const ClusterState& state, const std::vector<Document>& corpus) {
    AttributeStats stats;
    stats.k = state.k;
    stats.cluster_sizes.assign(state.k, 0);
    for (int c : state.assignment) stats.cluster_sizes[c]++;

    for (std::size_t d = 0; d < corpus.size(); ++d) {
        int c = state.assignment[d];
        for (const auto& attr : corpus[d].attributes) {
            auto [it, inserted] = stats.presence_counts.try_emplace(attr, std::vector<int>(state.k, 0));
            it->second[c]++;
        }
    }
    stats.no_attributes = stats.presence_counts.empty();

    for (const auto& [attr, counts] : stats.presence_counts) {
        std::vector<double> within(state.k, 0.0);  // f_rj: fraction of cluster j's documents containing r
        double total = 0.0;
        for (int j = 0; j < state.k; ++j) {
            within[j] = static_cast<double>(counts[j]) / static_cast<double>(stats.cluster_sizes[j]);
            total += within[j];
        }
        for (int j = 0; j < state.k; ++j) within[j] /= total;  // total > 0: r occurs somewhere
        stats.presence_fractions.emplace(attr, std::move(within));
    }
    return stats;
}

std::map<Attribute, double> gini_index(const AttributeStats& stats) {
    std::map<Attribute, double> gini;
    for (const auto& [attr, fractions] : stats.presence_fractions) {
        double g = 0.0;
        for (double p : fractions) g += p * p;
        gini.emplace(attr, g);
    }
    return gini;
}

std::set<Attribute> select_usable(AttributeStats& stats, double threshold) {
    stats.threshold = threshold;
    stats.usable.clear();
    stats.fallback_all_usable = false;
    for (const auto& [attr, g] : stats.gini) {
        if (g >= threshold) stats.usable.insert(attr);
    }
    if (stats.usable.empty() && !stats.gini.empty()) {
        for (const auto& [attr, g] : stats.gini) stats.usable.insert(attr);
        stats.fallback_all_usable = true;
    }
    return stats.usable;
}

AttributeStats compute_attribute_stats(const ClusterState& state, const std::vector<Document>& corpus,
                                       double threshold) {
    AttributeStats stats = presence_fractions(state, corpus);
    stats.gini = gini_index(stats);
    select_usable(stats, threshold);
    return stats;
}

}  // namespace auxclust
