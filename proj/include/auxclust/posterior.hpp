#pragma once

#include <map>
#include <vector>

#include "auxclust/gini.hpp"

namespace auxclust {

// Smoothed Bernoulli naive Bayes over the usable attribute set. Laplace
// smoothing keeps every likelihood strictly inside (0,1), so log scores are
// always finite.
struct PosteriorModel {
    struct Likelihood {
        std::vector<double> log_present;  // log P(r | C_j)
        std::vector<double> log_absent;   // log (1 - P(r | C_j))
    };
    int k = 0;
    std::vector<double> log_prior;              // log(|C_j| / N)
    std::map<Attribute, Likelihood> likelihoods;  // usable attributes only
    double alpha = 1.0;
};

// priors from cluster sizes; P(r|C_j) = (F_rj + alpha) / (|C_j| + 2*alpha).
// Presence counts are taken from the state's current assignment, so refits
// after reassignment passes stay consistent. Throws when stats.usable is
// empty ("refinement skipped: no usable attributes").
PosteriorModel fit_posterior_model(const ClusterState& state, const std::vector<Document>& corpus,
                                   const AttributeStats& stats, double alpha);

// P(cluster | document's usable attributes), exp-normalized to sum to 1.
std::vector<double> posterior(const Document& doc, const PosteriorModel& model);

struct RefineConfig {
    double alpha = 1.0;
    int max_passes = 10;
};

struct RefineResult {
    ClusterState state;
    bool refined = false;  // false when the stage was skipped (no usable attributes)
    int total_moves = 0;
    int passes = 0;
};

// Repeatedly reassigns every document to its argmax-posterior cluster
// (ties -> current cluster, then lowest index), refitting the model between
// passes, until a pass moves nothing or max_passes is reached. Empty
// clusters are repaired the same way as in k-means. Centroids are
// recomputed once at the end for retrieval use. Degenerate stats (no
// attributes anywhere) skip the stage and return the input unrefined.
RefineResult refine_assignments(const ClusterState& state, const std::vector<Document>& corpus,
                                const std::vector<TermVector>& vectors, const AttributeStats& stats,
                                const RefineConfig& config);

}  // namespace auxclust
