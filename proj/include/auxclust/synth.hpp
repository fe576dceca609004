#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace auxclust {

// Knobs for the planted-corpus generator backing the gen-corpus subcommand.
// Each document belongs to one of `classes` round-robin classes, carries the
// perfectly class-aligned attribute genre:<class>, and gets each of the
// `noise_attrs` uniform noise attributes with probability 1/2. Body tokens
// come from a shared vocabulary with probability `overlap` and from the
// class vocabulary otherwise, so higher overlap makes content-only
// clustering harder while the attributes stay fully informative.
struct SynthConfig {
    int docs = 60;
    int classes = 3;
    int noise_attrs = 5;
    std::uint64_t seed = 0;
    int terms_per_doc = 40;
    int class_vocab = 8;
    int shared_vocab = 30;
    double overlap = 0.75;
};

struct SynthCorpus {
    std::vector<std::pair<std::string, std::string>> files;  // (file name, content)
    std::map<std::string, std::string> truth;                // doc_id -> class name
};

SynthCorpus generate_corpus(const SynthConfig& config);

// Writes the corpus files plus truth.csv into dir (created if needed).
void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& dir);

}  // namespace auxclust
