#include "auxclust/reports.hpp"

#include <sstream>

namespace auxclust {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

namespace {

std::string join_classes(const std::set<std::string>& classes) {
    std::string out;
    for (const auto& c : classes) {
        if (!out.empty()) out.push_back(';');
        out += c;
    }
    return out;
}

}  // namespace

std::string gini_report_csv(const ClusterIndex& index) {
    const AttributeStats& st = index.stats;
    const int k = static_cast<int>(st.cluster_sizes.size());
    std::ostringstream out;
    out << "attribute,gini,usable";
    for (int j = 0; j < k; ++j) out << ",pr_" << j;
    for (int j = 0; j < k; ++j) out << ",count_" << j;
    out << '\n';
    for (const auto& [attr, counts] : st.presence_counts) {
        out << csv_field(attr.label()) << ',' << format_number(st.gini.at(attr)) << ','
            << (st.usable.count(attr) ? 1 : 0);
        for (double p : st.presence_fractions.at(attr)) out << ',' << format_number(p);
        for (int n : counts) out << ',' << n;
        out << '\n';
    }
    return out.str();
}

std::string labels_report_csv(const ClusterIndex& index) {
    std::ostringstream out;
    out << "method,cluster,rank,label,score\n";
    for (std::size_t c = 0; c < index.clusters.size(); ++c) {
        for (const ClusterLabel* label : {&index.clusters[c].label_count, &index.clusters[c].label_presence}) {
            if (label->unlabeled) {
                out << label_method_name(label->method) << ',' << c << ",0,unlabeled,0\n";
                continue;
            }
            for (std::size_t r = 0; r < label->ranked.size(); ++r) {
                out << label_method_name(label->method) << ',' << c << ',' << r << ','
                    << csv_field(label->ranked[r].attr.label()) << ','
                    << format_number(label->ranked[r].score) << '\n';
            }
        }
    }
    return out.str();
}

std::string classify_csv(const ClusterIndex& index) {
    std::ostringstream out;
    out << "doc_id,cluster,classes\n";
    for (const auto& doc : index.documents) {
        out << csv_field(doc.doc_id) << ',' << doc.final_cluster << ','
            << csv_field(join_classes(doc.classes)) << '\n';
    }
    return out.str();
}

std::string query_csv(const QueryResult& result) {
    std::ostringstream out;
    out << "rank,doc_id,similarity,classes\n";
    for (const auto& hit : result.hits) {
        out << hit.rank << ',' << csv_field(hit.doc_id) << ',' << format_number(hit.similarity) << ','
            << csv_field(join_classes(hit.classes)) << '\n';
    }
    return out.str();
}

std::string evaluation_csv(const EvaluationReport& report) {
    std::ostringstream out;
    out << "metric,stage1,final,delta\n";
    out << "purity," << format_number(report.stage1.purity) << ',' << format_number(report.final.purity)
        << ',' << format_number(report.purity_delta) << '\n';
    out << "nmi," << format_number(report.stage1.nmi) << ',' << format_number(report.final.nmi) << ','
        << format_number(report.nmi_delta) << '\n';
    out << "mean_cohesion," << format_number(report.stage1.mean_cohesion) << ','
        << format_number(report.final.mean_cohesion) << ','
        << format_number(report.final.mean_cohesion - report.stage1.mean_cohesion) << '\n';
    for (std::size_t c = 0; c < report.final.cohesion.size(); ++c) {
        out << "cohesion_cluster_" << c << ',' << format_number(report.stage1.cohesion[c]) << ','
            << format_number(report.final.cohesion[c]) << ','
            << format_number(report.final.cohesion[c] - report.stage1.cohesion[c]) << '\n';
    }
    return out.str();
}

}  // namespace auxclust
