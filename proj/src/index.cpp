#include "auxclust/index.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace auxclust {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("index: " + what);
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '[': out += "\\["; break;  // keeps raw strings from mimicking section headers
            default: out.push_back(c);
        }
    }
    return out;
}

std::string unescape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out.push_back(s[i]);
            continue;
        }
        if (i + 1 >= s.size()) fail("dangling escape in '" + s + "'");
        switch (s[++i]) {
            case '\\': out.push_back('\\'); break;
            case 't': out.push_back('\t'); break;
            case 'n': out.push_back('\n'); break;
            case 'r': out.push_back('\r'); break;
            case '[': out.push_back('['); break;
            default: fail("bad escape in '" + s + "'");
        }
    }
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        auto next = line.find(sep, pos);
        if (next == std::string::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return fields;
}

long long parse_int(const std::string& s, const std::string& field) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) fail("bad integer '" + s + "' for " + field);
    return v;
}

std::uint64_t parse_u64(const std::string& s, const std::string& field) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) fail("bad unsigned integer '" + s + "' for " + field);
    return v;
}

double parse_double(const std::string& s, const std::string& field) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) fail("bad number '" + s + "' for " + field);
    return v;
}

bool parse_bool(const std::string& s, const std::string& field) {
    if (s == "0") return false;
    if (s == "1") return true;
    fail("bad flag '" + s + "' for " + field + " (expected 0 or 1)");
}

void write_term_pairs(std::ostringstream& out, const TermVector& v) {
    bool first = true;
    for (const auto& [term, w] : v.entries()) {
        if (!first) out << ' ';
        out << term << '=' << format_number(w);
        first = false;
    }
}

TermVector parse_term_pairs(const std::string& s, const std::string& field) {
    TermVector v;
    if (s.empty()) return v;
    for (const auto& pair : split(s, ' ')) {
        auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0) fail("bad term entry '" + pair + "' in " + field);
        v.set(pair.substr(0, eq), parse_double(pair.substr(eq + 1), field));
    }
    return v;
}

template <typename T, typename Fmt>
std::string join(const std::vector<T>& xs, char sep, Fmt fmt) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out.push_back(sep);
        out += fmt(xs[i]);
    }
    return out;
}

// Reads lines "key = value" until the next section header, enforcing the
// exact expected key sequence.
class KeyValueReader {
public:
    KeyValueReader(const std::vector<std::string>& lines, std::size_t& pos, std::string section)
        : lines_(lines), pos_(pos), section_(std::move(section)) {}

    std::string expect(const std::string& key) {
        if (pos_ >= lines_.size()) fail("missing field '" + key + "' in " + section_);
        const std::string& line = lines_[pos_];
        auto sep = line.find(" = ");
        if (sep == std::string::npos) fail("expected '" + key + " = ...' in " + section_ + ", got '" + line + "'");
        if (line.substr(0, sep) != key) {
            fail("expected field '" + key + "' in " + section_ + ", got '" + line.substr(0, sep) + "'");
        }
        ++pos_;
        return line.substr(sep + 3);
    }

private:
    const std::vector<std::string>& lines_;
    std::size_t& pos_;
    std::string section_;
};

void write_label(std::ostringstream& out, const ClusterLabel& label, int cluster) {
    const std::string method = label_method_name(label.method);
    if (label.unlabeled) {
        out << "label\t" << method << '\t' << cluster << "\tunlabeled\n";
        return;
    }
    for (std::size_t r = 0; r < label.ranked.size(); ++r) {
        out << "label\t" << method << '\t' << cluster << '\t' << r << '\t'
            << escape(label.ranked[r].attr.key) << '\t' << escape(label.ranked[r].attr.value) << '\t'
            << format_number(label.ranked[r].score) << '\n';
    }
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string serialize_index(const ClusterIndex& index) {
    std::ostringstream out;
    out << "auxcluster-index " << index.format_version << '\n';

    const IndexConfig& c = index.config;
    out << "[config]\n";
    out << "alpha = " << format_number(c.alpha) << '\n';
    out << "corpus = " << escape(c.corpus) << '\n';
    out << "ext = " << join(c.extensions, ',', [](const std::string& s) { return escape(s); }) << '\n';
    out << "gini_threshold = " << format_number(c.gini_threshold) << '\n';
    out << "k = " << c.k << '\n';
    out << "label_method = " << label_method_name(c.label_method) << '\n';
    out << "labels_per_cluster = " << c.labels_per_cluster << '\n';
    out << "markers = " << escape(c.markers) << '\n';
    out << "max_iter = " << c.max_iter << '\n';
    out << "min_moves = " << c.min_moves << '\n';
    out << "refine_passes = " << c.refine_passes << '\n';
    out << "seed = " << c.seed << '\n';
    out << "stopwords_file = " << escape(c.stopwords_file) << '\n';

    out << "[summary]\n";
    out << "kmeans_iterations = " << index.summary.kmeans_iterations << '\n';
    out << "refine_moves = " << index.summary.refine_moves << '\n';
    out << "refine_passes_run = " << index.summary.refine_passes_run << '\n';
    out << "refined = " << (index.summary.refined ? 1 : 0) << '\n';

    out << "[stopwords]\n";
    for (const auto& w : index.stopwords) out << escape(w) << '\n';

    out << "[warnings]\n";
    for (const auto& issue : index.warnings) {
        out << escape(issue.doc_id) << '\t' << escape(issue.message) << '\n';
    }

    const AttributeStats& st = index.stats;
    out << "[attribute_stats]\n";
    out << "threshold = " << format_number(st.threshold) << '\n';
    out << "no_attributes = " << (st.no_attributes ? 1 : 0) << '\n';
    out << "fallback_all_usable = " << (st.fallback_all_usable ? 1 : 0) << '\n';
    out << "cluster_sizes = "
        << join(st.cluster_sizes, ',', [](std::size_t n) { return std::to_string(n); }) << '\n';
    for (const auto& [attr, counts] : st.presence_counts) {
        out << "attr\t" << escape(attr.key) << '\t' << escape(attr.value) << '\t'
            << format_number(st.gini.at(attr)) << '\t' << (st.usable.count(attr) ? 1 : 0) << '\t'
            << join(counts, ',', [](int n) { return std::to_string(n); }) << '\t'
            << join(st.presence_fractions.at(attr), ',', [](double f) { return format_number(f); }) << '\n';
    }

    out << "[clusters]\n";
    for (std::size_t i = 0; i < index.clusters.size(); ++i) {
        const ClusterRecord& cl = index.clusters[i];
        out << "cluster\t" << i << '\t' << cl.size << '\n';
        out << "centroid\t" << i << '\t';
        write_term_pairs(out, cl.centroid);
        out << '\n';
        write_label(out, cl.label_count, static_cast<int>(i));
        write_label(out, cl.label_presence, static_cast<int>(i));
    }

    out << "[documents]\n";
    for (const DocRecord& doc : index.documents) {
        out << "doc\t" << escape(doc.doc_id) << '\t' << doc.stage1_cluster << '\t' << doc.final_cluster << '\n';
        for (const auto& attr : doc.attributes) {
            out << "attr\t" << escape(attr.key) << '\t' << escape(attr.value) << '\n';
        }
        out << "terms\t";
        write_term_pairs(out, doc.vector);
        out << '\n';
        out << "classes";
        for (const auto& cls : doc.classes) out << '\t' << escape(cls);
        out << '\n';
    }

    out << "[end]\n";
    return out.str();
}

void save_index(const ClusterIndex& index, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write index file: " + path.string());
    out << serialize_index(index);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

ClusterIndex parse_index(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string::npos) fail("truncated file: missing final newline");
            lines.push_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }
    }
    std::size_t pos = 0;
    auto line = [&]() -> const std::string& {
        if (pos >= lines.size()) fail("truncated file: missing [end]");
        return lines[pos];
    };
    auto expect_section = [&](const std::string& name) {
        if (pos >= lines.size() || lines[pos] != name) {
            fail("expected section " + name + (pos < lines.size() ? ", got '" + lines[pos] + "'" : " at end of file"));
        }
        ++pos;
    };

    ClusterIndex index;

    {
        const std::string& header = line();
        const std::string prefix = "auxcluster-index ";
        if (header.rfind(prefix, 0) != 0) fail("not an auxcluster index file");
        int version = static_cast<int>(parse_int(header.substr(prefix.size()), "format_version"));
        if (version != kIndexFormatVersion) {
            fail("unsupported format_version " + std::to_string(version) + " (expected " +
                 std::to_string(kIndexFormatVersion) + ")");
        }
        index.format_version = version;
        ++pos;
    }

    expect_section("[config]");
    {
        KeyValueReader kv(lines, pos, "[config]");
        IndexConfig& c = index.config;
        c.alpha = parse_double(kv.expect("alpha"), "alpha");
        c.corpus = unescape(kv.expect("corpus"));
        c.extensions.clear();
        for (const auto& e : split(kv.expect("ext"), ',')) c.extensions.push_back(unescape(e));
        c.gini_threshold = parse_double(kv.expect("gini_threshold"), "gini_threshold");
        c.k = static_cast<int>(parse_int(kv.expect("k"), "k"));
        c.label_method = parse_label_method(kv.expect("label_method"));
        c.labels_per_cluster = static_cast<int>(parse_int(kv.expect("labels_per_cluster"), "labels_per_cluster"));
        c.markers = unescape(kv.expect("markers"));
        c.max_iter = static_cast<int>(parse_int(kv.expect("max_iter"), "max_iter"));
        c.min_moves = static_cast<int>(parse_int(kv.expect("min_moves"), "min_moves"));
        c.refine_passes = static_cast<int>(parse_int(kv.expect("refine_passes"), "refine_passes"));
        c.seed = parse_u64(kv.expect("seed"), "seed");
        c.stopwords_file = unescape(kv.expect("stopwords_file"));
    }

    expect_section("[summary]");
    {
        KeyValueReader kv(lines, pos, "[summary]");
        index.summary.kmeans_iterations = static_cast<int>(parse_int(kv.expect("kmeans_iterations"), "kmeans_iterations"));
        index.summary.refine_moves = static_cast<int>(parse_int(kv.expect("refine_moves"), "refine_moves"));
        index.summary.refine_passes_run = static_cast<int>(parse_int(kv.expect("refine_passes_run"), "refine_passes_run"));
        index.summary.refined = parse_bool(kv.expect("refined"), "refined");
    }

    expect_section("[stopwords]");
    while (pos < lines.size() && lines[pos] != "[warnings]") {
        index.stopwords.push_back(unescape(lines[pos]));
        ++pos;
    }

    expect_section("[warnings]");
    while (pos < lines.size() && lines[pos] != "[attribute_stats]") {
        auto fields = split(lines[pos], '\t');
        if (fields.size() != 2) fail("bad warning line '" + lines[pos] + "'");
        index.warnings.push_back({unescape(fields[0]), unescape(fields[1])});
        ++pos;
    }

    expect_section("[attribute_stats]");
    {
        KeyValueReader kv(lines, pos, "[attribute_stats]");
        AttributeStats& st = index.stats;
        st.threshold = parse_double(kv.expect("threshold"), "threshold");
        st.no_attributes = parse_bool(kv.expect("no_attributes"), "no_attributes");
        st.fallback_all_usable = parse_bool(kv.expect("fallback_all_usable"), "fallback_all_usable");
        for (const auto& s : split(kv.expect("cluster_sizes"), ',')) {
            st.cluster_sizes.push_back(static_cast<std::size_t>(parse_int(s, "cluster_sizes")));
        }
        st.k = static_cast<int>(st.cluster_sizes.size());
        while (pos < lines.size() && lines[pos] != "[clusters]") {
            auto fields = split(lines[pos], '\t');
            if (fields.size() != 7 || fields[0] != "attr") fail("bad attribute_stats line '" + lines[pos] + "'");
            Attribute attr{unescape(fields[1]), unescape(fields[2])};
            st.gini[attr] = parse_double(fields[3], "gini");
            if (parse_bool(fields[4], "usable")) st.usable.insert(attr);
            std::vector<int> counts;
            for (const auto& s : split(fields[5], ',')) counts.push_back(static_cast<int>(parse_int(s, "presence_counts")));
            std::vector<double> fractions;
            for (const auto& s : split(fields[6], ',')) fractions.push_back(parse_double(s, "presence_fractions"));
            if (counts.size() != st.cluster_sizes.size() || fractions.size() != st.cluster_sizes.size()) {
                fail("attribute row width does not match cluster_sizes for '" + attr.label() + "'");
            }
            st.presence_counts.emplace(attr, std::move(counts));
            st.presence_fractions.emplace(attr, std::move(fractions));
            ++pos;
        }
    }

    expect_section("[clusters]");
    while (pos < lines.size() && lines[pos] != "[documents]") {
        auto fields = split(lines[pos], '\t');
        if (fields.size() != 3 || fields[0] != "cluster") fail("bad cluster line '" + lines[pos] + "'");
        std::size_t idx = static_cast<std::size_t>(parse_int(fields[1], "cluster"));
        if (idx != index.clusters.size()) fail("cluster indices out of order at " + fields[1]);
        ClusterRecord record;
        record.size = static_cast<std::size_t>(parse_int(fields[2], "cluster size"));
        ++pos;

        auto cfields = split(line(), '\t');
        if (cfields.size() != 3 || cfields[0] != "centroid" || cfields[1] != fields[1]) {
            fail("expected centroid line for cluster " + fields[1]);
        }
        record.centroid = parse_term_pairs(cfields[2], "centroid");
        ++pos;

        for (ClusterLabel* label : {&record.label_count, &record.label_presence}) {
            label->cluster = static_cast<int>(idx);
            label->method = label == &record.label_count ? LabelMethod::MostRepeating : LabelMethod::HighestPresence;
            const std::string method = label_method_name(label->method);
            bool any = false;
            while (pos < lines.size()) {
                auto lf = split(lines[pos], '\t');
                if (lf.size() < 4 || lf[0] != "label" || lf[1] != method || lf[2] != fields[1]) break;
                if (lf[3] == "unlabeled") {
                    if (lf.size() != 4) fail("bad unlabeled line '" + lines[pos] + "'");
                    label->unlabeled = true;
                } else {
                    if (lf.size() != 7) fail("bad label line '" + lines[pos] + "'");
                    if (static_cast<std::size_t>(parse_int(lf[3], "label rank")) != label->ranked.size()) {
                        fail("label ranks out of order in '" + lines[pos] + "'");
                    }
                    label->ranked.push_back({{unescape(lf[4]), unescape(lf[5])}, parse_double(lf[6], "label score")});
                }
                any = true;
                ++pos;
            }
            if (!any) fail("missing " + method + " label for cluster " + fields[1]);
            if (label->unlabeled && !label->ranked.empty()) fail("unlabeled cluster " + fields[1] + " carries labels");
        }
        index.clusters.push_back(std::move(record));
    }

    expect_section("[documents]");
    while (pos < lines.size() && lines[pos] != "[end]") {
        auto fields = split(lines[pos], '\t');
        if (fields.size() != 4 || fields[0] != "doc") fail("bad doc line '" + lines[pos] + "'");
        DocRecord doc;
        doc.doc_id = unescape(fields[1]);
        doc.stage1_cluster = static_cast<int>(parse_int(fields[2], "stage1_cluster"));
        doc.final_cluster = static_cast<int>(parse_int(fields[3], "final_cluster"));
        const int k = static_cast<int>(index.clusters.size());
        if (doc.stage1_cluster < 0 || doc.stage1_cluster >= k) fail("stage1_cluster out of range for " + doc.doc_id);
        if (doc.final_cluster < 0 || doc.final_cluster >= k) fail("final_cluster out of range for " + doc.doc_id);
        ++pos;

        while (pos < lines.size()) {
            auto af = split(lines[pos], '\t');
            if (af[0] != "attr") break;
            if (af.size() != 3) fail("bad doc attr line '" + lines[pos] + "'");
            doc.attributes.insert({unescape(af[1]), unescape(af[2])});
            ++pos;
        }

        auto tf = split(line(), '\t');
        if (tf.size() != 2 || tf[0] != "terms") fail("expected terms line for " + doc.doc_id);
        doc.vector = parse_term_pairs(tf[1], "terms");
        ++pos;

        auto cf = split(line(), '\t');
        if (cf[0] != "classes") fail("expected classes line for " + doc.doc_id);
        for (std::size_t i = 1; i < cf.size(); ++i) doc.classes.insert(unescape(cf[i]));
        ++pos;

        if (!index.documents.empty() && !(index.documents.back().doc_id < doc.doc_id)) {
            fail("documents out of doc_id order at " + doc.doc_id);
        }
        index.documents.push_back(std::move(doc));
    }

    expect_section("[end]");
    if (pos != lines.size()) fail("trailing content after [end]");
    return index;
}

ClusterIndex load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open index file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_index(buf.str());
}

}  // namespace auxclust
