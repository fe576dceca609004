#include "auxclust/term_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auxclust {

double TermVector::norm() const {
    double sum = 0.0;
    for (const auto& [term, w] : entries_) sum += w * w;
    return std::sqrt(sum);
}

double TermVector::dot(const TermVector& other) const {
    const Map& a = entries_.size() <= other.entries_.size() ? entries_ : other.entries_;
    const Map& b = entries_.size() <= other.entries_.size() ? other.entries_ : entries_;
    double sum = 0.0;
    for (const auto& [term, w] : a) {
        auto it = b.find(term);
        if (it != b.end()) sum += w * it->second;
    }
    return sum;
}

TermVector term_frequency_vector(const Document& doc) {
    TermVector v;
    for (const auto& t : doc.terms) v.add(t, 1.0);
    return v;
}

double cosine_similarity(const TermVector& u, const TermVector& v) {
    double nu = u.norm();
    double nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return 0.0;
    double c = u.dot(v) / (nu * nv);
    return std::clamp(c, 0.0, 1.0);
}

TermVector mean_vector(std::span<const TermVector* const> vectors) {
    if (vectors.empty()) throw std::invalid_argument("empty cluster centroid undefined");
    TermVector sum;
    for (const TermVector* v : vectors) {
        for (const auto& [term, w] : v->entries()) sum.add(term, w);
    }
    TermVector mean;
    const double n = static_cast<double>(vectors.size());
    for (const auto& [term, w] : sum.entries()) mean.set(term, w / n);
    return mean;
}

TermVector mean_vector(std::span<const TermVector> vectors) {
    std::vector<const TermVector*> ptrs;
    ptrs.reserve(vectors.size());
    for (const auto& v : vectors) ptrs.push_back(&v);
    return mean_vector(std::span<const TermVector* const>(ptrs));
}

}  // namespace auxclust
