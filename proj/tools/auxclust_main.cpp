#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "auxclust/pipeline.hpp"
#include "auxclust/reports.hpp"
#include "auxclust/synth.hpp"

namespace {

struct ClusterArgs {
    std::string corpus;
    std::string out = "index.auxclust";
    auxclust::PipelineOptions options;
    std::string label_method = "count";
    std::string markers = "$#";
    std::string stopwords;
    std::vector<std::string> ext = {".txt"};
    double gini_threshold = -1.0;
};

int run_cluster(const ClusterArgs& args) {
    auxclust::PipelineOptions options = args.options;
    options.parse.markers = args.markers;
    options.parse.extensions = args.ext;
    options.parse.stopwords =
        args.stopwords.empty() ? auxclust::default_stopwords() : auxclust::load_stopwords(args.stopwords);
    options.gini_threshold = args.gini_threshold;
    options.label_method = auxclust::parse_label_method(args.label_method);
    options.corpus_path = args.corpus;
    options.stopwords_file = args.stopwords;

    auxclust::CorpusLoad load = auxclust::load_corpus(args.corpus, options.parse);
    for (const auto& err : load.errors) {
        std::cerr << "warning: " << err.doc_id << ": " << err.message << "\n";
        load.warnings.push_back(err);
    }
    auxclust::ClusterIndex index = auxclust::run_pipeline(load.documents, load.warnings, options);
    auxclust::save_index(index, args.out);

    std::cout << "clustered " << index.documents.size() << " docs into k=" << index.config.k
              << " clusters; refinement moves=" << index.summary.refine_moves
              << (index.summary.refined ? "" : " (skipped: no auxiliary information)")
              << "; usable attributes=" << index.stats.usable.size() << "; index written to " << args.out
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-stage document clustering: content k-means refined by auxiliary attributes"};
    app.require_subcommand(1);

    ClusterArgs cluster_args;
    auto* cluster = app.add_subcommand("cluster", "Cluster a corpus directory and write an index file");
    cluster->add_option("--corpus", cluster_args.corpus, "Corpus directory")->required();
    cluster->add_option("--k", cluster_args.options.kmeans.k, "Number of clusters")->required();
    cluster->add_option("--seed", cluster_args.options.kmeans.seed, "PRNG seed")->required();
    cluster->add_option("--max-iter", cluster_args.options.kmeans.max_iterations, "Max k-means iterations");
    cluster->add_option("--min-moves", cluster_args.options.kmeans.min_moves,
                        "Stop k-means when a pass moves <= this many documents");
    cluster->add_option("--gini-threshold", cluster_args.gini_threshold,
                        "Usable-attribute threshold (default 1.5/k)");
    cluster->add_option("--alpha", cluster_args.options.alpha, "Laplace smoothing constant");
    cluster->add_option("--refine-passes", cluster_args.options.refine_passes, "Max refinement passes");
    cluster->add_option("--label-method", cluster_args.label_method, "count | presence");
    cluster->add_option("--labels-per-cluster", cluster_args.options.labels_per_cluster,
                        "Labels (classes) per cluster");
    cluster->add_option("--stopwords", cluster_args.stopwords, "Stopword file (default: built-in list)");
    cluster->add_option("--markers", cluster_args.markers, "Attribute marker characters");
    cluster->add_option("--ext", cluster_args.ext, "Document file extensions")->delimiter(',');
    cluster->add_option("--out", cluster_args.out, "Index output path");

    std::string index_path, query_text, truth_path;
    int top_n = 10;
    bool global = false;
    auto* query = app.add_subcommand("query", "Rank documents against a text query");
    query->add_option("--index", index_path, "Index file")->required();
    query->add_option("--text", query_text, "Query text")->required();
    query->add_option("--top", top_n, "Number of results");
    query->add_flag("--global", global, "Rank across all documents instead of the best cluster");

    auto* classify = app.add_subcommand("classify", "Print each document's cluster and classes");
    classify->add_option("--index", index_path, "Index file")->required();

    auto* report = app.add_subcommand("report", "Print the gini and label tables");
    report->add_option("--index", index_path, "Index file")->required();

    auto* evaluate = app.add_subcommand("evaluate", "Compare stage-1 and refined clusterings against truth");
    evaluate->add_option("--index", index_path, "Index file")->required();
    evaluate->add_option("--truth", truth_path, "Truth CSV (doc_id,class)")->required();

    auxclust::SynthConfig synth;
    std::string synth_out;
    auto* gen = app.add_subcommand("gen-corpus", "Generate a planted synthetic corpus plus truth.csv");
    gen->add_option("--docs", synth.docs, "Number of documents");
    gen->add_option("--classes", synth.classes, "Number of planted classes");
    gen->add_option("--noise-attrs", synth.noise_attrs, "Number of uniform noise attributes");
    gen->add_option("--seed", synth.seed, "PRNG seed")->required();
    gen->add_option("--terms-per-doc", synth.terms_per_doc, "Body tokens per document");
    gen->add_option("--class-vocab", synth.class_vocab, "Class-specific vocabulary size");
    gen->add_option("--shared-vocab", synth.shared_vocab, "Shared vocabulary size");
    gen->add_option("--overlap", synth.overlap, "Probability a token comes from the shared vocabulary");
    gen->add_option("--out", synth_out, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cluster->parsed()) return run_cluster(cluster_args);
        if (query->parsed()) {
            auto result = auxclust::query_index(auxclust::load_index(index_path), query_text, top_n, global);
            std::cout << auxclust::query_csv(result);
            return 0;
        }
        if (classify->parsed()) {
            std::cout << auxclust::classify_csv(auxclust::load_index(index_path));
            return 0;
        }
        if (report->parsed()) {
            auto index = auxclust::load_index(index_path);
            std::cout << auxclust::gini_report_csv(index) << "\n" << auxclust::labels_report_csv(index);
            return 0;
        }
        if (evaluate->parsed()) {
            auto index = auxclust::load_index(index_path);
            auto truth = auxclust::load_truth(truth_path);
            std::cout << auxclust::evaluation_csv(auxclust::evaluate_index(index, truth));
            return 0;
        }
        if (gen->parsed()) {
            auxclust::write_corpus(auxclust::generate_corpus(synth), synth_out);
            std::cout << "wrote " << synth.docs << " documents and truth.csv to " << synth_out << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
