#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "auxclust/term_vector.hpp"

namespace auxclust {

struct KMeansConfig {
    int k = 2;
    int max_iterations = 50;
    std::uint64_t seed = 0;
    int min_moves = 0;  // stop once an assignment pass moves <= this many documents
};

// Partition of the corpus into k clusters. Documents are addressed by their
// position in the corpus vector, which load_corpus keeps sorted by doc_id,
// so "lowest doc_id" tie-breaks reduce to lowest position.
struct ClusterState {
    int k = 0;
    std::vector<Centroid> centroids;  // size k
    std::vector<int> assignment;      // per document, cluster index in [0, k)
    int iteration = 0;

    std::vector<std::vector<int>> members() const;
};

// Picks k distinct documents (deterministic PRNG, see rng.hpp) as initial
// centroids; every other document lands in a uniformly random cluster.
ClusterState seed_clusters(const std::vector<TermVector>& docs, const KMeansConfig& config);

// Moves every document to its most cosine-similar centroid (ties -> lowest
// cluster index). Returns the number of documents that changed cluster.
int assign_step(ClusterState& state, const std::vector<TermVector>& docs);

// Recomputes each centroid as the mean of its members and repairs empty
// clusters by adopting the globally least-centroid-similar document.
void update_centroids(ClusterState& state, const std::vector<TermVector>& docs);

// Moves the document least similar to its current centroid (ties -> lowest
// position, i.e. lowest doc_id) into each empty cluster. Only documents in
// clusters with >= 2 members are candidates, so no new hole opens. Returns
// the number of moves; recomputes centroids of the touched clusters when
// recompute_centroids is set.
int repair_empty_clusters(ClusterState& state, const std::vector<TermVector>& docs, bool recompute_centroids);

using IterationObserver = std::function<void(const ClusterState& state, int moves)>;

// Alternates assign_step / update_centroids from a seeded state until a pass
// moves <= min_moves documents or max_iterations is reached. Deterministic
// given (docs order, config). The observer, when given, runs after every
// iteration.
ClusterState run_kmeans(const std::vector<TermVector>& docs, const KMeansConfig& config,
                        const IterationObserver& observer = {});

// Throws std::logic_error if the state is not a valid partition of n_docs
// documents: every document assigned to one cluster in range, member counts
// summing to n_docs, and no empty cluster.
void validate_partition(const ClusterState& state, std::size_t n_docs);

}  // namespace auxclust
