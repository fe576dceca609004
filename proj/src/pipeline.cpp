#include "auxclust/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace auxclust {

ClusterIndex run_pipeline(const std::vector<Document>& corpus, const std::vector<ParseIssue>& load_warnings,
                          const PipelineOptions& options) {
    if (corpus.empty()) throw std::runtime_error("empty corpus");

    std::vector<TermVector> vectors;
    vectors.reserve(corpus.size());
    for (const auto& doc : corpus) vectors.push_back(term_frequency_vector(doc));

    ClusterState stage1 = run_kmeans(vectors, options.kmeans);

    const double threshold =
        options.gini_threshold >= 0.0 ? options.gini_threshold : 1.5 / static_cast<double>(options.kmeans.k);
    AttributeStats stats = compute_attribute_stats(stage1, corpus, threshold);

    ClusterIndex index;
    index.warnings = load_warnings;
    if (stats.fallback_all_usable) {
        index.warnings.push_back({"", "no attribute met the gini threshold; kept all as usable"});
    }

    RefineResult refined = refine_assignments(stage1, corpus, vectors, stats,
                                              {.alpha = options.alpha, .max_passes = options.refine_passes});
    if (!refined.refined) {
        index.warnings.push_back({"", "no auxiliary information in corpus; refinement skipped, result unrefined"});
    }
    const ClusterState& final_state = refined.state;

    // Labels come from the refined partition; presence scores need stats
    // recomputed against it.
    AttributeStats final_stats = presence_fractions(final_state, corpus);
    auto member_lists = final_state.members();
    std::vector<ClusterLabel> labels_count, labels_presence;
    for (int c = 0; c < final_state.k; ++c) {
        std::vector<const Document*> members;
        members.reserve(member_lists[c].size());
        for (int d : member_lists[c]) members.push_back(&corpus[d]);
        labels_count.push_back(label_most_repeating(members, c, options.labels_per_cluster));
        labels_presence.push_back(label_highest_presence(members, final_stats, c, options.labels_per_cluster));
    }
    const auto& labels = options.label_method == LabelMethod::MostRepeating ? labels_count : labels_presence;
    std::vector<ClassAssignment> classes = assign_classes(final_state, corpus, labels, options.labels_per_cluster);

    index.config.corpus = options.corpus_path;
    index.config.k = options.kmeans.k;
    index.config.seed = options.kmeans.seed;
    index.config.max_iter = options.kmeans.max_iterations;
    index.config.min_moves = options.kmeans.min_moves;
    index.config.gini_threshold = threshold;
    index.config.alpha = options.alpha;
    index.config.refine_passes = options.refine_passes;
    index.config.label_method = options.label_method;
    index.config.labels_per_cluster = options.labels_per_cluster;
    index.config.markers = options.parse.markers;
    index.config.stopwords_file = options.stopwords_file;
    index.config.extensions = options.parse.extensions;

    index.summary.kmeans_iterations = stage1.iteration;
    index.summary.refine_passes_run = refined.passes;
    index.summary.refine_moves = refined.total_moves;
    index.summary.refined = refined.refined;

    index.stopwords.assign(options.parse.stopwords.begin(), options.parse.stopwords.end());
    index.stats = std::move(stats);

    for (int c = 0; c < final_state.k; ++c) {
        ClusterRecord record;
        record.size = final_state.centroids[c].member_count;
        record.centroid = final_state.centroids[c].vector;
        record.label_count = labels_count[c];
        record.label_presence = labels_presence[c];
        index.clusters.push_back(std::move(record));
    }

    for (std::size_t d = 0; d < corpus.size(); ++d) {
        DocRecord record;
        record.doc_id = corpus[d].doc_id;
        record.attributes = corpus[d].attributes;
        record.vector = vectors[d];
        record.stage1_cluster = stage1.assignment[d];
        record.final_cluster = final_state.assignment[d];
        record.classes = classes[d].classes;
        index.documents.push_back(std::move(record));
    }
    return index;
}

QueryResult query_index(const ClusterIndex& index, const std::string& text, int top_n, bool global) {
    std::set<std::string> stopwords(index.stopwords.begin(), index.stopwords.end());
    Document query_doc;
    query_doc.terms = tokenize(text, stopwords);
    TermVector query = term_frequency_vector(query_doc);
    if (query.empty()) throw std::runtime_error("query has no indexable terms");

    QueryResult result;
    std::vector<std::size_t> candidates;
    if (global) {
        for (std::size_t d = 0; d < index.documents.size(); ++d) candidates.push_back(d);
    } else {
        int best = 0;
        double best_sim = cosine_similarity(query, index.clusters[0].centroid);
        for (std::size_t c = 1; c < index.clusters.size(); ++c) {
            double sim = cosine_similarity(query, index.clusters[c].centroid);
            if (sim > best_sim) {
                best_sim = sim;
                best = static_cast<int>(c);
            }
        }
        result.cluster = best;
        for (std::size_t d = 0; d < index.documents.size(); ++d) {
            if (index.documents[d].final_cluster == best) candidates.push_back(d);
        }
    }

    std::vector<std::pair<double, std::size_t>> ranked;
    ranked.reserve(candidates.size());
    for (std::size_t d : candidates) {
        ranked.emplace_back(cosine_similarity(query, index.documents[d].vector), d);
    }
    // Similarity descending; doc_id (== document position) ascending on ties.
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    if (top_n >= 0 && ranked.size() > static_cast<std::size_t>(top_n)) ranked.resize(top_n);

    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const DocRecord& doc = index.documents[ranked[i].second];
        result.hits.push_back({static_cast<int>(i) + 1, doc.doc_id, ranked[i].first, doc.classes});
    }
    return result;
}

std::map<std::string, std::string> load_truth(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open truth file: " + path.string());
    std::map<std::string, std::string> truth;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            if (line != "doc_id,class") throw std::runtime_error("truth file must start with header 'doc_id,class'");
            first = false;
            continue;
        }
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad truth line: " + line);
        truth[line.substr(0, comma)] = line.substr(comma + 1);
    }
    if (first) throw std::runtime_error("truth file is empty");
    return truth;
}

EvaluationReport evaluate_index(const ClusterIndex& index, const std::map<std::string, std::string>& truth) {
    std::vector<std::string> missing;
    std::vector<int> stage1, final_clusters, classes;
    std::map<std::string, int> class_ids;
    std::vector<TermVector> vectors;
    for (const auto& doc : index.documents) {
        auto it = truth.find(doc.doc_id);
        if (it == truth.end()) {
            missing.push_back(doc.doc_id);
            continue;
        }
        stage1.push_back(doc.stage1_cluster);
        final_clusters.push_back(doc.final_cluster);
        classes.push_back(class_ids.try_emplace(it->second, static_cast<int>(class_ids.size())).first->second);
        vectors.push_back(doc.vector);
    }
    if (!missing.empty()) {
        std::string msg = "truth file is missing doc ids:";
        for (const auto& id : missing) msg += " " + id;
        throw std::runtime_error(msg);
    }

    const int k = static_cast<int>(index.clusters.size());
    EvaluationReport report;
    auto fill = [&](StageMetrics& m, const std::vector<int>& assignment) {
        m.purity = purity(assignment, classes);
        m.nmi = nmi(assignment, classes);
        m.cohesion = cluster_cohesion(assignment, k, vectors);
        double sum = 0.0;
        for (double c : m.cohesion) sum += c;
        m.mean_cohesion = sum / static_cast<double>(k);
    };
    fill(report.stage1, stage1);
    fill(report.final, final_clusters);
    report.purity_delta = report.final.purity - report.stage1.purity;
    report.nmi_delta = report.final.nmi - report.stage1.nmi;
    return report;
}

}  // namespace auxclust
