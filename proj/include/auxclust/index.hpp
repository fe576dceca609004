#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "auxclust/gini.hpp"
#include "auxclust/labeling.hpp"

namespace auxclust {

inline constexpr int kIndexFormatVersion = 1;

// Snapshot of every flag that shaped a cluster run, persisted so queries
// reuse the same tokenization and reruns are reproducible.
struct IndexConfig {
    std::string corpus;
    int k = 2;
    std::uint64_t seed = 0;
    int max_iter = 50;
    int min_moves = 0;
    double gini_threshold = 0.0;  // resolved value, not the flag default
    double alpha = 1.0;
    int refine_passes = 10;
    LabelMethod label_method = LabelMethod::MostRepeating;
    int labels_per_cluster = 1;
    std::string markers = "$#";
    std::string stopwords_file;  // empty = built-in default list
    std::vector<std::string> extensions = {".txt"};
};

struct IndexSummary {
    int kmeans_iterations = 0;
    int refine_passes_run = 0;
    int refine_moves = 0;
    bool refined = false;
};

struct DocRecord {
    std::string doc_id;
    std::set<Attribute> attributes;
    TermVector vector;
    int stage1_cluster = 0;
    int final_cluster = 0;
    std::set<std::string> classes;
};

struct ClusterRecord {
    std::size_t size = 0;     // final membership
    TermVector centroid;      // recomputed after refinement, used by queries
    ClusterLabel label_count;
    ClusterLabel label_presence;
};

// The persisted artifact joining documents, clusters, attribute statistics
// and labels. Serialization is canonical: sorted keys, fixed field order,
// doubles at 9 significant digits, LF endings — save/load/save is
// byte-identical.
struct ClusterIndex {
    int format_version = kIndexFormatVersion;
    IndexConfig config;
    IndexSummary summary;
    std::vector<std::string> stopwords;  // sorted
    std::vector<ParseIssue> warnings;
    AttributeStats stats;                // computed on the stage-1 partition; drives selection
    std::vector<ClusterRecord> clusters;
    std::vector<DocRecord> documents;    // sorted by doc_id
};

std::string serialize_index(const ClusterIndex& index);
void save_index(const ClusterIndex& index, const std::filesystem::path& path);

// Both throw std::runtime_error naming the offending field or line on any
// malformed input, and refuse other format versions outright.
ClusterIndex parse_index(const std::string& text);
ClusterIndex load_index(const std::filesystem::path& path);

// Canonical number formatting used across all persisted/reported output:
// shortest form at 9 significant digits.
std::string format_number(double v);

}  // namespace auxclust
