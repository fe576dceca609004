#include "auxclust/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace auxclust {

namespace {

bool is_word_byte(unsigned char c) {
    return std::isalnum(c) != 0 || c >= 0x80;
}

std::string trim(std::string_view s) {
    const char* ws = " \t\r\n\v\f";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const std::set<std::string>& stopwords) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty() && stopwords.count(cur) == 0) out.push_back(cur);
        cur.clear();
    };
    for (char ch : text) {
        auto c = static_cast<unsigned char>(ch);
        if (is_word_byte(c)) {
            cur.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
        } else {
            flush();
        }
    }
    flush();
    return out;
}

Document parse_document(std::string_view raw_text, std::string doc_id, const ParseConfig& config,
                        std::vector<ParseIssue>* warnings) {
    auto warn = [&](std::string message) {
        if (warnings) warnings->push_back({doc_id, std::move(message)});
    };

    Document doc;
    doc.doc_id = std::move(doc_id);

    std::string body;
    std::size_t pos = 0;
    bool in_header = true;
    while (pos <= raw_text.size()) {
        auto nl = raw_text.find('\n', pos);
        std::string_view line = raw_text.substr(pos, nl == std::string_view::npos ? raw_text.size() - pos : nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        bool marker_line = in_header && !line.empty() && config.markers.find(line.front()) != std::string::npos;
        if (in_header && !marker_line) in_header = false;

        if (marker_line) {
            std::string_view rest = line.substr(1);
            auto colon = rest.find(':');
            std::string key = colon == std::string_view::npos ? "" : to_lower(trim(rest.substr(0, colon)));
            if (key.empty()) {
                warn("malformed attribute line treated as body: " + std::string(line));
                body.append(line);
                body.push_back('\n');
            } else {
                doc.attributes.insert({key, trim(rest.substr(colon + 1))});
            }
        } else {
            body.append(line);
            body.push_back('\n');
        }

        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }

    doc.terms = tokenize(body, config.stopwords);
    if (doc.terms.empty()) warn("document has no indexable terms");
    return doc;
}

CorpusLoad load_corpus(const std::filesystem::path& dir_path, const ParseConfig& config) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir_path)) {
        throw std::runtime_error("corpus directory not found: " + dir_path.string());
    }

    std::vector<fs::path> candidates;
    for (const auto& entry : fs::recursive_directory_iterator(dir_path)) {
        if (entry.is_directory()) continue;
        std::string ext = entry.path().extension().string();
        if (std::find(config.extensions.begin(), config.extensions.end(), ext) != config.extensions.end()) {
            candidates.push_back(entry.path());
        }
    }
    if (candidates.empty()) throw std::runtime_error("empty corpus: no files matching configured extensions in " + dir_path.string());

    CorpusLoad load;
    std::vector<std::pair<std::string, fs::path>> ids;
    ids.reserve(candidates.size());
    for (const auto& p : candidates) {
        ids.emplace_back(fs::relative(p, dir_path).generic_string(), p);
    }
    std::sort(ids.begin(), ids.end());

    for (const auto& [doc_id, path] : ids) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            load.errors.push_back({doc_id, "unreadable file, skipped"});
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) {
            load.errors.push_back({doc_id, "read failed, skipped"});
            continue;
        }
        load.documents.push_back(parse_document(buf.str(), doc_id, config, &load.warnings));
    }
    if (load.documents.empty()) throw std::runtime_error("empty corpus: no readable documents in " + dir_path.string());
    return load;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("stopword file not found: " + path.string());
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string w = trim(line);
        if (w.empty() || w.front() == '#') continue;
        words.insert(to_lower(w));
    }
    return words;
}

std::set<std::string> default_stopwords() {
    return {"a",    "an",  "and",  "are",  "as",   "at",    "be",   "but", "by",   "for",
            "from", "had", "has",  "have", "he",   "her",   "his",  "i",   "in",   "is",
            "it",   "its", "not",  "of",   "on",   "or",    "she",  "so",  "that", "the",
            "their", "they", "this", "to",  "was",  "were",  "will", "with", "you"};
}

}  // namespace auxclust
