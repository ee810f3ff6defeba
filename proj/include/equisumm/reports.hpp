#pragma once

#include <string>
#include <vector>

#include "equisumm/clustering.hpp"
#include "equisumm/corpus.hpp"
#include "equisumm/graph.hpp"
#include "equisumm/metrics.hpp"
#include "equisumm/summarize.hpp"

namespace equisumm {

// All writers return the full file content; callers decide where it goes.
// Output is deterministic byte for byte given equal inputs.

std::string stats_block(const IngestResult& result);

// One JSON object per assignment: id, label, confidence, provenance,
// similarity (null unless centroid-assigned).
std::string labels_jsonl(const std::vector<ClassifiedTweet>& assignments);

// label,count,percent with fixed row order M, F, B, N.
std::string distribution_csv(const std::vector<ClassifiedTweet>& assignments);

// One JSON object per entry: rank, id, group, score, text.
std::string summary_jsonl(const Summary& summary, const Corpus& corpus);

// Human rendering, one "[group] text" line per tweet.
std::string summary_text(const Summary& summary, const Corpus& corpus);

// subject,G1,G2,score,direction; G1 is the male proportion, G2 the female.
std::string report_csv(const std::vector<BiasReport>& rows);

std::string report_markdown(const std::vector<BiasReport>& rows, bool include_neutral);

// Grouped bar chart of G1/G2 per subject.
std::string report_svg(const std::vector<BiasReport>& rows);

// src,dst,weight rows, each undirected edge once with src before dst.
std::string graph_csv(const SimilarityGraph& graph);

}  // namespace equisumm
