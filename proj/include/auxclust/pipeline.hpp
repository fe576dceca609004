#pragma once

#include <map>
#include <string>
#include <vector>

#include "auxclust/index.hpp"
#include "auxclust/metrics.hpp"
#include "auxclust/posterior.hpp"

namespace auxclust {

struct PipelineOptions {
    ParseConfig parse;
    KMeansConfig kmeans;
    double gini_threshold = -1.0;  // < 0 resolves to 1.5/k, 50% above the uniform floor
    double alpha = 1.0;
    int refine_passes = 10;
    LabelMethod label_method = LabelMethod::MostRepeating;
    int labels_per_cluster = 1;
    std::string corpus_path;     // recorded in the index
    std::string stopwords_file;  // recorded in the index; empty = built-in list
};

// corpus_io -> vsm -> kmeans_stage -> attribute_gini -> posterior_refine ->
// labeling, assembled into a persistable index. corpus must be sorted by
// doc_id (load_corpus guarantees this). load_warnings are carried into the
// index warning list. An attribute-free corpus skips refinement and keeps
// the stage-1 partition, flagged unrefined.
ClusterIndex run_pipeline(const std::vector<Document>& corpus, const std::vector<ParseIssue>& load_warnings,
                          const PipelineOptions& options);

struct QueryHit {
    int rank = 0;
    std::string doc_id;
    double similarity = 0.0;
    std::set<std::string> classes;
};

struct QueryResult {
    int cluster = -1;  // routed cluster; -1 in global mode
    std::vector<QueryHit> hits;
};

// Tokenizes the query with the index's stopword set, routes it to the most
// centroid-similar cluster and ranks that cluster's members by cosine
// (global = rank all documents instead). Throws when the query has no
// indexable terms.
QueryResult query_index(const ClusterIndex& index, const std::string& text, int top_n, bool global);

// Reads a "doc_id,class" CSV with header.
std::map<std::string, std::string> load_truth(const std::filesystem::path& path);

// Purity/NMI/cohesion for both stages. Throws if any indexed document is
// missing from the truth map, listing the absent ids.
EvaluationReport evaluate_index(const ClusterIndex& index, const std::map<std::string, std::string>& truth);

}  // namespace auxclust
