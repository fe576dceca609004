#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "auxclust/corpus.hpp"

namespace auxclust {

// Sparse term -> weight map. Weights are non-negative reals; zero-weight
// entries are never stored. The ordered map gives deterministic iteration,
// which the index serialization and centroid arithmetic rely on.
class TermVector {
public:
    using Map = std::map<std::string, double>;

    TermVector() = default;

    void set(const std::string& term, double weight) {
        if (weight == 0.0) {
            entries_.erase(term);
        } else {
            entries_[term] = weight;
        }
    }

    void add(const std::string& term, double delta) {
        if (delta == 0.0) return;
        auto [it, inserted] = entries_.try_emplace(term, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second == 0.0) entries_.erase(it);
        }
    }

    double at(const std::string& term) const {
        auto it = entries_.find(term);
        return it == entries_.end() ? 0.0 : it->second;
    }

    const Map& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    double norm() const;
    double dot(const TermVector& other) const;

    bool operator==(const TermVector&) const = default;

private:
    Map entries_;
};

// Raw term frequencies of doc.terms.
TermVector term_frequency_vector(const Document& doc);

// dot(u,v) / (|u||v|), clamped to [0,1]; 0 when either vector is empty.
double cosine_similarity(const TermVector& u, const TermVector& v);

// Per-term arithmetic mean. Throws std::invalid_argument on an empty list:
// an empty cluster has no defined centroid and callers must repair first.
TermVector mean_vector(std::span<const TermVector> vectors);
TermVector mean_vector(std::span<const TermVector* const> vectors);

// A cluster centroid: the mean of the member vectors at the time it was
// last computed, plus the member count it was computed from.
struct Centroid {
    TermVector vector;
    std::size_t member_count = 0;
};

}  // namespace auxclust
