#pragma once

#include <compare>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace auxclust {

// One key:value auxiliary pair. Keys are lowercased and trimmed and never
// contain ':'; values are trimmed but keep their original case.
struct Attribute {
    std::string key;
    std::string value;

    auto operator<=>(const Attribute&) const = default;

    std::string label() const { return key + ":" + value; }
};

// A parsed text unit: attribute header plus stopword-filtered body tokens.
// attributes may be empty; such documents are still clusterable by content.
struct Document {
    std::string doc_id;
    std::set<Attribute> attributes;
    std::vector<std::string> terms;

    bool has_attribute(const Attribute& a) const { return attributes.count(a) > 0; }
};

struct ParseConfig {
    std::string markers = "$#";                     // chars that introduce an attribute line
    std::set<std::string> stopwords;                // lowercase
    std::vector<std::string> extensions = {".txt"};
};

struct ParseIssue {
    std::string doc_id;
    std::string message;
};

struct CorpusLoad {
    std::vector<Document> documents;  // sorted by doc_id
    std::vector<ParseIssue> warnings;
    std::vector<ParseIssue> errors;
};

// Lowercases ASCII letters and splits on runs of non-alphanumeric bytes
// (bytes >= 0x80 are kept so multi-byte characters survive). Stopwords are
// dropped. Total over arbitrary input; never throws.
std::vector<std::string> tokenize(std::string_view text, const std::set<std::string>& stopwords);

// Splits the leading marker lines into attributes and tokenizes the rest.
// A marker line without ':' is recorded as a warning and its text joins the
// body. A document whose body filters down to nothing keeps empty terms and
// gets a warning.
Document parse_document(std::string_view raw_text, std::string doc_id, const ParseConfig& config,
                        std::vector<ParseIssue>* warnings = nullptr);

// Parses every file under dir_path with a configured extension, in
// lexicographic doc_id order (doc_id = relative path). Unreadable files are
// skipped with an error entry; a corpus with no matching files throws.
CorpusLoad load_corpus(const std::filesystem::path& dir_path, const ParseConfig& config);

// Newline-separated words, '#' comments. Throws if the path does not exist.
std::set<std::string> load_stopwords(const std::filesystem::path& path);

// Built-in minimal English list used when no stopword file is given.
std::set<std::string> default_stopwords();

}  // namespace auxclust
