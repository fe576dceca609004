#include "auxclust/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace auxclust {

namespace {

std::map<int, std::size_t> histogram(const std::vector<int>& xs) {
    std::map<int, std::size_t> h;
    for (int x : xs) h[x]++;
    return h;
}

double entropy(const std::map<int, std::size_t>& h, double n) {
    double e = 0.0;
    for (const auto& [value, count] : h) {
        double p = static_cast<double>(count) / n;
        e -= p * std::log(p);
    }
    return e;
}

}  // namespace

double purity(const std::vector<int>& clusters, const std::vector<int>& classes) {
    if (clusters.size() != classes.size()) throw std::invalid_argument("purity: size mismatch");
    if (clusters.empty()) throw std::invalid_argument("purity: empty input");

    std::map<int, std::map<int, std::size_t>> per_cluster;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        per_cluster[clusters[i]][classes[i]]++;
    }
    std::size_t agree = 0;
    for (const auto& [cluster, class_counts] : per_cluster) {
        std::size_t best = 0;
        for (const auto& [cls, count] : class_counts) best = std::max(best, count);
        agree += best;
    }
    return static_cast<double>(agree) / static_cast<double>(clusters.size());
}

double nmi(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("nmi: size mismatch");
    if (a.empty()) throw std::invalid_argument("nmi: empty input");
    const double n = static_cast<double>(a.size());

    auto ha = histogram(a);
    auto hb = histogram(b);
    std::map<std::pair<int, int>, std::size_t> joint;
    for (std::size_t i = 0; i < a.size(); ++i) joint[{a[i], b[i]}]++;

    double mi = 0.0;
    for (const auto& [pair, count] : joint) {
        double pxy = static_cast<double>(count) / n;
        double px = static_cast<double>(ha.at(pair.first)) / n;
        double py = static_cast<double>(hb.at(pair.second)) / n;
        mi += pxy * std::log(pxy / (px * py));
    }

    double mean_h = 0.5 * (entropy(ha, n) + entropy(hb, n));
    if (mean_h == 0.0) return 1.0;  // both partitions are single-class
    double v = mi / mean_h;
    return std::clamp(v, 0.0, 1.0);
}

std::vector<double> cluster_cohesion(const std::vector<int>& assignment, int k,
                                     const std::vector<TermVector>& vectors) {
    std::vector<std::vector<const TermVector*>> members(k);
    for (std::size_t d = 0; d < assignment.size(); ++d) {
        members[assignment[d]].push_back(&vectors[d]);
    }
    std::vector<double> cohesion(k, 0.0);
    for (int c = 0; c < k; ++c) {
        if (members[c].empty()) continue;
        TermVector centroid = mean_vector(std::span<const TermVector* const>(members[c]));
        double sum = 0.0;
        for (const TermVector* v : members[c]) sum += cosine_similarity(*v, centroid);
        cohesion[c] = sum / static_cast<double>(members[c].size());
    }
    return cohesion;
}

}  // namespace auxclust
