#pragma once

#include <string>
#include <vector>

#include "auxclust/gini.hpp"

namespace auxclust {

enum class LabelMethod { MostRepeating, HighestPresence };

std::string label_method_name(LabelMethod m);  // "count" / "presence"
LabelMethod parse_label_method(const std::string& name);

struct ScoredLabel {
    Attribute attr;
    double score;
};

// The name(s) of one cluster under one labeling rule. ranked holds up to m
// entries sorted by score descending, ties broken lexicographically on
// "key:value"; ranked[0] is the primary label. A cluster none of whose
// members carry attributes gets the "unlabeled" sentinel instead.
struct ClusterLabel {
    int cluster = 0;
    LabelMethod method = LabelMethod::MostRepeating;
    bool unlabeled = false;
    std::vector<ScoredLabel> ranked;

    std::string primary_string() const { return unlabeled ? "unlabeled" : ranked.front().attr.label(); }
};

struct ClassAssignment {
    std::string doc_id;
    std::set<std::string> classes;  // "key:value" strings, or the "unlabeled" sentinel
};

// score(r) = number of member documents containing r.
ClusterLabel label_most_repeating(const std::vector<const Document*>& cluster_members, int cluster, int m);

// score(r) = Pr_j for this cluster, restricted to attributes present in it.
// stats must be computed for the same (final) partition being labeled.
ClusterLabel label_highest_presence(const std::vector<const Document*>& cluster_members,
                                    const AttributeStats& stats, int cluster, int m);

// Projects each cluster's top-m label strings onto its member documents.
std::vector<ClassAssignment> assign_classes(const ClusterState& state, const std::vector<Document>& corpus,
                                            const std::vector<ClusterLabel>& labels, int m);

}  // namespace auxclust
