#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equisumm/clustering.hpp"
#include "equisumm/corpus.hpp"
#include "equisumm/embedding.hpp"
#include "equisumm/graph.hpp"

namespace equisumm {

enum class SummaryMethod { equisumm, lexrank, lsa, community_lexrank };

const char* to_string(SummaryMethod method);
std::optional<SummaryMethod> parse_summary_method(std::string_view s);

struct SummaryEntry {
  std::string id;
  std::string group;  // gender label, community id, or "all"
  double score = 0.0;
};

struct Summary {
  SummaryMethod method = SummaryMethod::equisumm;
  std::vector<SummaryEntry> entries;
  std::size_t k_per_group = 0;   // set for equisumm
  std::size_t total_budget = 0;  // set for baselines
  bool rank_deficient = false;   // lsa fell back to column norms
};

struct SummarizeOptions {
  std::size_t k_per_group = 5;
  bool include_neutral = true;
  double graph_threshold = 0.40;
  LexRankParams lexrank;
};

// Per-gender-cluster LexRank, top min(K, size) each, concatenated M, F, B, N.
Summary summarize_equisumm(const std::map<GenderLabel, GenderCluster>& clusters,
                           const EmbeddingSet& embeddings, const SummarizeOptions& options);

// Global-graph LexRank, top `budget` overall.
Summary summarize_lexrank(const EmbeddingSet& embeddings, std::size_t budget, double threshold,
                          const LexRankParams& params = {});

// Louvain communities over the global graph, LexRank within each, budget
// split across communities by size.
Summary summarize_community_lexrank(const EmbeddingSet& embeddings, std::size_t budget,
                                    double threshold, const LexRankParams& params = {});

// Latent-concept selection over the tweet set.
Summary summarize_lsa(const std::vector<Tweet>& subset, std::size_t budget);

// Largest-remainder split of `budget` across communities, at least one per
// community while the budget allows, never more than a community's size.
// Requires budget <= sum of sizes.
std::vector<std::size_t> allocate_budget(const std::vector<std::size_t>& community_sizes,
                                         std::size_t budget);

}  // namespace equisumm
