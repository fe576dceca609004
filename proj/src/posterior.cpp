#include "auxclust/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auxclust {

PosteriorModel fit_posterior_model(const ClusterState& state, const std::vector<Document>& corpus,
                                   const AttributeStats& stats, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be > 0");
    if (stats.usable.empty()) throw std::runtime_error("refinement skipped: no usable attributes");

    PosteriorModel model;
    model.k = state.k;
    model.alpha = alpha;

    std::vector<std::size_t> sizes(state.k, 0);
    for (int c : state.assignment) sizes[c]++;

    const double n = static_cast<double>(corpus.size());
    model.log_prior.resize(state.k);
    for (int j = 0; j < state.k; ++j) {
        model.log_prior[j] = std::log(static_cast<double>(sizes[j]) / n);
    }

    // Presence counts against the state's current assignment, not the
    // (possibly stale) counts inside stats.
    std::map<Attribute, std::vector<int>> counts;
    for (const auto& attr : stats.usable) counts.emplace(attr, std::vector<int>(state.k, 0));
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        int c = state.assignment[d];
        for (const auto& attr : corpus[d].attributes) {
            auto it = counts.find(attr);
            if (it != counts.end()) it->second[c]++;
        }
    }

    for (const auto& [attr, f] : counts) {
        PosteriorModel::Likelihood lik;
        lik.log_present.resize(state.k);
        lik.log_absent.resize(state.k);
        for (int j = 0; j < state.k; ++j) {
            double p = (f[j] + alpha) / (static_cast<double>(sizes[j]) + 2.0 * alpha);
            lik.log_present[j] = std::log(p);
            lik.log_absent[j] = std::log(1.0 - p);
        }
        model.likelihoods.emplace(attr, std::move(lik));
    }
    return model;
}

std::vector<double> posterior(const Document& doc, const PosteriorModel& model) {
    std::vector<double> score = model.log_prior;
    for (const auto& [attr, lik] : model.likelihoods) {
        const auto& term = doc.has_attribute(attr) ? lik.log_present : lik.log_absent;
        for (int j = 0; j < model.k; ++j) score[j] += term[j];
    }

    double max_score = *std::max_element(score.begin(), score.end());
    double total = 0.0;
    for (int j = 0; j < model.k; ++j) {
        score[j] = std::exp(score[j] - max_score);
        total += score[j];
    }
    for (int j = 0; j < model.k; ++j) score[j] /= total;
    return score;
}

namespace {

// Argmax with ties resolved to the current cluster first, lowest index next.
int pick_cluster(const std::vector<double>& probs, int current) {
    double best = *std::max_element(probs.begin(), probs.end());
    if (probs[current] == best) return current;
    for (int j = 0; j < static_cast<int>(probs.size()); ++j) {
        if (probs[j] == best) return j;
    }
    return current;
}

}  // namespace

RefineResult refine_assignments(const ClusterState& state, const std::vector<Document>& corpus,
                                const std::vector<TermVector>& vectors, const AttributeStats& stats,
                                const RefineConfig& config) {
    RefineResult result;
    result.state = state;
    if (stats.no_attributes || stats.usable.empty()) return result;

    for (int pass = 1; pass <= config.max_passes; ++pass) {
        PosteriorModel model = fit_posterior_model(result.state, corpus, stats, config.alpha);
        int moves = 0;
        for (std::size_t d = 0; d < corpus.size(); ++d) {
            int target = pick_cluster(posterior(corpus[d], model), result.state.assignment[d]);
            if (target != result.state.assignment[d]) {
                result.state.centroids[result.state.assignment[d]].member_count--;
                result.state.centroids[target].member_count++;
                result.state.assignment[d] = target;
                ++moves;
            }
        }
        moves += repair_empty_clusters(result.state, vectors, /*recompute_centroids=*/false);
        result.total_moves += moves;
        result.passes = pass;
        if (moves == 0) break;
    }

    update_centroids(result.state, vectors);
    result.refined = true;
    return result;
}

}  // namespace auxclust
