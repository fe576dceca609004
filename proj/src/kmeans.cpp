#include "auxclust/kmeans.hpp"

#include <numeric>
#include <stdexcept>

#include "auxclust/rng.hpp"

namespace auxclust {

std::vector<std::vector<int>> ClusterState::members() const {
    std::vector<std::vector<int>> m(k);
    for (std::size_t d = 0; d < assignment.size(); ++d) {
        m[assignment[d]].push_back(static_cast<int>(d));
    }
    return m;
}

ClusterState seed_clusters(const std::vector<TermVector>& docs, const KMeansConfig& config) {
    const auto n = docs.size();
    if (config.k < 1) throw std::invalid_argument("k must be >= 1");
    if (static_cast<std::size_t>(config.k) > n) throw std::invalid_argument("k exceeds corpus size");

    Rng rng(config.seed);

    // Partial Fisher-Yates draws k distinct seed documents.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> seed_of(n, -1);
    for (int c = 0; c < config.k; ++c) {
        std::size_t j = c + rng.below(n - c);
        std::swap(order[c], order[j]);
        seed_of[order[c]] = c;
    }

    ClusterState state;
    state.k = config.k;
    state.centroids.resize(config.k);
    state.assignment.resize(n);
    for (int c = 0; c < config.k; ++c) {
        state.centroids[c].vector = docs[order[c]];
    }
    // Non-seed documents are placed randomly; the first assign_step corrects them.
    for (std::size_t d = 0; d < n; ++d) {
        state.assignment[d] = seed_of[d] >= 0 ? seed_of[d] : static_cast<int>(rng.below(config.k));
    }
    for (int c : state.assignment) state.centroids[c].member_count++;
    return state;
}

int assign_step(ClusterState& state, const std::vector<TermVector>& docs) {
    int moves = 0;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        int best = 0;
        double best_sim = cosine_similarity(docs[d], state.centroids[0].vector);
        for (int c = 1; c < state.k; ++c) {
            double sim = cosine_similarity(docs[d], state.centroids[c].vector);
            if (sim > best_sim) {
                best_sim = sim;
                best = c;
            }
        }
        if (best != state.assignment[d]) {
            state.centroids[state.assignment[d]].member_count--;
            state.centroids[best].member_count++;
            state.assignment[d] = best;
            ++moves;
        }
    }
    return moves;
}

int repair_empty_clusters(ClusterState& state, const std::vector<TermVector>& docs, bool recompute_centroids) {
    int moved = 0;
    auto member_lists = state.members();
    for (int empty = 0; empty < state.k; ++empty) {
        if (!member_lists[empty].empty()) continue;

        int victim = -1;
        double victim_sim = 0.0;
        for (std::size_t d = 0; d < docs.size(); ++d) {
            int c = state.assignment[d];
            if (member_lists[c].size() < 2) continue;
            double sim = cosine_similarity(docs[d], state.centroids[c].vector);
            if (victim < 0 || sim < victim_sim) {
                victim = static_cast<int>(d);
                victim_sim = sim;
            }
        }
        if (victim < 0) throw std::logic_error("empty cluster repair found no movable document");

        int from = state.assignment[victim];
        state.assignment[victim] = empty;
        state.centroids[from].member_count--;
        state.centroids[empty].member_count++;
        std::erase(member_lists[from], victim);
        member_lists[empty].push_back(victim);
        ++moved;

        if (recompute_centroids) {
            std::vector<const TermVector*> rest;
            for (int d : member_lists[from]) rest.push_back(&docs[d]);
            state.centroids[from].vector = mean_vector(std::span<const TermVector* const>(rest));
            state.centroids[empty].vector = docs[victim];
        }
    }
    return moved;
}

void update_centroids(ClusterState& state, const std::vector<TermVector>& docs) {
    auto member_lists = state.members();
    for (int c = 0; c < state.k; ++c) {
        state.centroids[c].member_count = member_lists[c].size();
        if (member_lists[c].empty()) {
            state.centroids[c].vector = TermVector{};
            continue;
        }
        std::vector<const TermVector*> vecs;
        vecs.reserve(member_lists[c].size());
        for (int d : member_lists[c]) vecs.push_back(&docs[d]);
        state.centroids[c].vector = mean_vector(std::span<const TermVector* const>(vecs));
    }
    repair_empty_clusters(state, docs, /*recompute_centroids=*/true);
}

ClusterState run_kmeans(const std::vector<TermVector>& docs, const KMeansConfig& config,
                        const IterationObserver& observer) {
    ClusterState state = seed_clusters(docs, config);
    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        int moves = assign_step(state, docs);
        update_centroids(state, docs);
        state.iteration = iter;
        if (observer) observer(state, moves);
        if (moves <= config.min_moves) break;
    }
    return state;
}

void validate_partition(const ClusterState& state, std::size_t n_docs) {
    if (state.k < 1) throw std::logic_error("partition invalid: k < 1");
    if (state.centroids.size() != static_cast<std::size_t>(state.k)) {
        throw std::logic_error("partition invalid: centroid count != k");
    }
    if (state.assignment.size() != n_docs) {
        throw std::logic_error("partition invalid: assignment size != corpus size");
    }
    std::vector<std::size_t> counts(state.k, 0);
    for (int c : state.assignment) {
        if (c < 0 || c >= state.k) throw std::logic_error("partition invalid: cluster index out of range");
        counts[c]++;
    }
    std::size_t total = 0;
    for (int c = 0; c < state.k; ++c) {
        if (counts[c] != state.centroids[c].member_count) {
            throw std::logic_error("partition invalid: centroid member_count mismatch");
        }
        if (counts[c] == 0) throw std::logic_error("partition invalid: empty cluster");
        total += counts[c];
    }
    if (total != n_docs) throw std::logic_error("partition invalid: member counts do not sum to corpus size");
}

}  // namespace auxclust
