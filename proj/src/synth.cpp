#include "auxclust/synth.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "auxclust/rng.hpp"

namespace auxclust {

SynthCorpus generate_corpus(const SynthConfig& config) {
    if (config.docs < 1 || config.classes < 1) throw std::invalid_argument("gen-corpus: docs and classes must be >= 1");
    if (config.docs < config.classes) throw std::invalid_argument("gen-corpus: need at least one document per class");
    if (config.overlap < 0.0 || config.overlap > 1.0) throw std::invalid_argument("gen-corpus: overlap must be in [0,1]");
    if (config.terms_per_doc < 1 || config.class_vocab < 1 || config.shared_vocab < 1) {
        throw std::invalid_argument("gen-corpus: vocab sizes and terms per doc must be >= 1");
    }

    Rng rng(config.seed);
    SynthCorpus corpus;

    int width = 1;
    for (int n = config.docs - 1; n >= 10; n /= 10) ++width;

    for (int d = 0; d < config.docs; ++d) {
        int cls = d % config.classes;
        std::string cls_name = "class" + std::to_string(cls);

        std::ostringstream name;
        name << "doc";
        std::string num = std::to_string(d);
        name << std::string(width - num.size(), '0') << num << ".txt";

        std::ostringstream text;
        text << "$genre: " << cls_name << "\n";
        for (int a = 0; a < config.noise_attrs; ++a) {
            if (rng.below(2) == 0) text << "$noise" << a << ": 1\n";
        }
        for (int t = 0; t < config.terms_per_doc; ++t) {
            if (rng.unit() < config.overlap) {
                text << "shared" << rng.below(config.shared_vocab);
            } else {
                text << "topic" << cls << "w" << rng.below(config.class_vocab);
            }
            text << ((t + 1) % 10 == 0 ? '\n' : ' ');
        }
        if (config.terms_per_doc % 10 != 0) text << '\n';

        corpus.files.emplace_back(name.str(), text.str());
        corpus.truth.emplace(name.str(), cls_name);
    }
    return corpus;
}

void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [name, content] : corpus.files) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
        out << content;
    }
    std::ofstream truth(dir / "truth.csv", std::ios::binary);
    if (!truth) throw std::runtime_error("cannot write " + (dir / "truth.csv").string());
    truth << "doc_id,class\n";
    for (const auto& [doc_id, cls] : corpus.truth) truth << doc_id << ',' << cls << '\n';
}

}  // namespace auxclust
