#pragma once

#include <vector>

#include "auxclust/kmeans.hpp"

namespace auxclust {

// Fraction of documents falling in their cluster's majority gold class.
double purity(const std::vector<int>& clusters, const std::vector<int>& classes);

// Mutual information normalized by the arithmetic mean of the two
// entropies, natural log. A 0/0 is 1 when both partitions are single-class
// and 0 otherwise.
double nmi(const std::vector<int>& a, const std::vector<int>& b);

// Per-cluster mean member-to-centroid cosine. Centroids are recomputed from
// the given vectors so stale centroids cannot skew the measure.
std::vector<double> cluster_cohesion(const std::vector<int>& assignment, int k,
                                     const std::vector<TermVector>& vectors);

struct StageMetrics {
    double purity = 0.0;
    double nmi = 0.0;
    double mean_cohesion = 0.0;
    std::vector<double> cohesion;  // per cluster
};

struct EvaluationReport {
    StageMetrics stage1;
    StageMetrics final;
    double purity_delta = 0.0;  // final - stage1
    double nmi_delta = 0.0;
};

}  // namespace auxclust
