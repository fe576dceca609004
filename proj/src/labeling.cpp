#include "auxclust/labeling.hpp"

#include <algorithm>
#include <stdexcept>

namespace auxclust {

std::string label_method_name(LabelMethod m) {
    return m == LabelMethod::MostRepeating ? "count" : "presence";
}

LabelMethod parse_label_method(const std::string& name) {
    if (name == "count") return LabelMethod::MostRepeating;
    if (name == "presence") return LabelMethod::HighestPresence;
    throw std::invalid_argument("unknown label method: " + name + " (expected count or presence)");
}

namespace {

ClusterLabel rank_labels(std::vector<ScoredLabel> scored, int cluster, LabelMethod method, int m) {
    ClusterLabel label;
    label.cluster = cluster;
    label.method = method;
    if (scored.empty()) {
        label.unlabeled = true;
        return label;
    }
    std::sort(scored.begin(), scored.end(), [](const ScoredLabel& a, const ScoredLabel& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.attr.label() < b.attr.label();
    });
    if (static_cast<int>(scored.size()) > m) scored.resize(m);
    label.ranked = std::move(scored);
    return label;
}

}  // namespace

ClusterLabel label_most_repeating(const std::vector<const Document*>& cluster_members, int cluster, int m) {
    if (m < 1) throw std::invalid_argument("labels per cluster must be >= 1");
    std::map<Attribute, int> counts;
    for (const Document* doc : cluster_members) {
        for (const auto& attr : doc->attributes) counts[attr]++;
    }
    std::vector<ScoredLabel> scored;
    scored.reserve(counts.size());
    for (const auto& [attr, n] : counts) scored.push_back({attr, static_cast<double>(n)});
    return rank_labels(std::move(scored), cluster, LabelMethod::MostRepeating, m);
}

ClusterLabel label_highest_presence(const std::vector<const Document*>& cluster_members,
                                    const AttributeStats& stats, int cluster, int m) {
    if (m < 1) throw std::invalid_argument("labels per cluster must be >= 1");
    std::set<Attribute> present;
    for (const Document* doc : cluster_members) {
        present.insert(doc->attributes.begin(), doc->attributes.end());
    }
    std::vector<ScoredLabel> scored;
    scored.reserve(present.size());
    for (const auto& attr : present) {
        scored.push_back({attr, stats.presence_fractions.at(attr)[cluster]});
    }
    return rank_labels(std::move(scored), cluster, LabelMethod::HighestPresence, m);
}

std::vector<ClassAssignment> assign_classes(const ClusterState& state, const std::vector<Document>& corpus,
                                            const std::vector<ClusterLabel>& labels, int m) {
    std::vector<std::set<std::string>> class_sets(state.k);
    for (const auto& label : labels) {
        auto& classes = class_sets[label.cluster];
        if (label.unlabeled) {
            classes.insert("unlabeled");
            continue;
        }
        for (int i = 0; i < m && i < static_cast<int>(label.ranked.size()); ++i) {
            classes.insert(label.ranked[i].attr.label());
        }
    }
    std::vector<ClassAssignment> out;
    out.reserve(corpus.size());
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        out.push_back({corpus[d].doc_id, class_sets[state.assignment[d]]});
    }
    return out;
}

}  // namespace auxclust
