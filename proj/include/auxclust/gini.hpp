#pragma once

#include <map>
#include <set>
#include <vector>

#include "auxclust/kmeans.hpp"

namespace auxclust {

// Cross-cluster concentration statistics for every attribute occurring in
// the corpus. presence_fractions[r][j] sums to 1 over clusters for every
// occurring attribute r; gini[r] = sum of squared fractions, in [1/k, 1].
struct AttributeStats {
    int k = 0;
    std::vector<std::size_t> cluster_sizes;
    std::map<Attribute, std::vector<int>> presence_counts;        // F_rj: documents of cluster j containing r
    std::map<Attribute, std::vector<double>> presence_fractions;  // Pr_j, normalized over clusters
    std::map<Attribute, double> gini;
    std::set<Attribute> usable;
    double threshold = 0.0;
    bool no_attributes = false;      // corpus carries no auxiliary information at all
    bool fallback_all_usable = false;  // every score fell below threshold; kept all instead
};

// Counts binary per-document presence of each attribute per cluster and
// normalizes the within-cluster fractions across clusters. Sets
// no_attributes when the corpus has none.
AttributeStats presence_fractions(const ClusterState& state, const std::vector<Document>& corpus);

// gini(r) = sum over clusters of Pr_j^2. 1/k means uniform spread (useless
// attribute), 1 means fully concentrated in one cluster.
std::map<Attribute, double> gini_index(const AttributeStats& stats);

// usable = { r : gini(r) >= threshold }. When that set would be empty but
// attributes exist, all attributes are kept and fallback_all_usable is set,
// so downstream refinement degrades gracefully instead of aborting.
std::set<Attribute> select_usable(AttributeStats& stats, double threshold);

// presence_fractions + gini_index + select_usable in one call.
AttributeStats compute_attribute_stats(const ClusterState& state, const std::vector<Document>& corpus,
                                       double threshold);

}  // namespace auxclust
