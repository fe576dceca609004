#pragma once

#include <string>

#include "auxclust/pipeline.hpp"

namespace auxclust {

// RFC-4180 style quoting: fields holding comma, quote or newline are quoted
// with embedded quotes doubled.
std::string csv_field(const std::string& value);

// attribute,gini,usable,pr_0..pr_{k-1},count_0..count_{k-1}; header only
// when the corpus had no attributes.
std::string gini_report_csv(const ClusterIndex& index);

// method,cluster,rank,label,score for both labeling methods.
std::string labels_report_csv(const ClusterIndex& index);

// doc_id,cluster,classes with classes semicolon-separated.
std::string classify_csv(const ClusterIndex& index);

// rank,doc_id,similarity,classes for one query result.
std::string query_csv(const QueryResult& result);

// metric,stage1,final,delta rows for purity, nmi, mean cohesion and
// per-cluster cohesion.
std::string evaluation_csv(const EvaluationReport& report);

}  // namespace auxclust
