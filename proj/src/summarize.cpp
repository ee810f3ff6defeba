#include "equisumm/summarize.hpp"

#include <algorithm>
#include <numeric>

#include "equisumm/errors.hpp"
#include "equisumm/svd.hpp"

namespace equisumm {

const char* to_string(SummaryMethod method) {
  switch (method) {
    case SummaryMethod::equisumm: return "equisumm";
    case SummaryMethod::lexrank: return "lexrank";
    case SummaryMethod::lsa: return "lsa";
    case SummaryMethod::community_lexrank: return "community_lexrank";
  }
  return "?";
}

std::optional<SummaryMethod> parse_summary_method(std::string_view s) {
  if (s == "equisumm") return SummaryMethod::equisumm;
  if (s == "lexrank") return SummaryMethod::lexrank;
  if (s == "lsa") return SummaryMethod::lsa;
  if (s == "community_lexrank") return SummaryMethod::community_lexrank;
  return std::nullopt;
}

namespace {

// (id, score) pairs ordered by descending score, then ascending id.
std::vector<std::pair<std::string, double>> ranked(const CentralityScores& scores) {
  std::vector<std::pair<std::string, double>> pairs;
  pairs.reserve(scores.ids.size());
  for (std::size_t i = 0; i < scores.ids.size(); ++i) {
    pairs.emplace_back(scores.ids[i], scores.scores[i]);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return pairs;
}

}  // namespace

Summary summarize_equisumm(const std::map<GenderLabel, GenderCluster>& clusters,
                           const EmbeddingSet& embeddings, const SummarizeOptions& options) {
  if (options.k_per_group < 1) throw Error("summarize: k_per_group must be >= 1");
  Summary summary;
  summary.method = SummaryMethod::equisumm;
  summary.k_per_group = options.k_per_group;

  for (GenderLabel label :
       {GenderLabel::M, GenderLabel::F, GenderLabel::B, GenderLabel::N}) {
    if (label == GenderLabel::N && !options.include_neutral) continue;
    const auto it = clusters.find(label);
    if (it == clusters.end() || it->second.member_ids.empty()) continue;

    const EmbeddingSet members = embeddings.subset(it->second.member_ids);
    const SimilarityGraph graph = build_graph(members, options.graph_threshold);
    const CentralityScores scores = lexrank(graph, options.lexrank);
    const auto order = ranked(scores);
    const std::size_t take = std::min<std::size_t>(options.k_per_group, order.size());
    for (std::size_t i = 0; i < take; ++i) {
      summary.entries.push_back({order[i].first, to_string(label), order[i].second});
    }
  }
  return summary;
}

Summary summarize_lexrank(const EmbeddingSet& embeddings, std::size_t budget, double threshold,
                          const LexRankParams& params) {
  if (budget < 1) throw Error("summarize: budget must be >= 1");
  Summary summary;
  summary.method = SummaryMethod::lexrank;
  summary.total_budget = budget;

  const SimilarityGraph graph = build_graph(embeddings, threshold);
  const auto order = ranked(lexrank(graph, params));
  const std::size_t take = std::min(budget, order.size());
  for (std::size_t i = 0; i < take; ++i) {
    summary.entries.push_back({order[i].first, "all", order[i].second});
  }
  return summary;
}

std::vector<std::size_t> allocate_budget(const std::vector<std::size_t>& community_sizes,
                                         std::size_t budget) {
  const std::size_t n_comm = community_sizes.size();
  std::vector<std::size_t> alloc(n_comm, 0);
  if (n_comm == 0 || budget == 0) return alloc;
  const std::size_t total = std::accumulate(community_sizes.begin(), community_sizes.end(),
                                            std::size_t{0});
  if (budget > total) throw Error("allocate_budget: budget exceeds member count");

  if (budget < n_comm) {
    for (std::size_t c = 0; c < budget; ++c) alloc[c] = 1;
    return alloc;
  }

  // Largest-remainder apportionment.
  std::vector<double> remainder(n_comm);
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < n_comm; ++c) {
    const double quota = static_cast<double>(budget) * static_cast<double>(community_sizes[c]) /
                         static_cast<double>(total);
    alloc[c] = static_cast<std::size_t>(quota);
    remainder[c] = quota - static_cast<double>(alloc[c]);
    assigned += alloc[c];
  }
  std::vector<std::size_t> order(n_comm);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });
  for (std::size_t i = 0; assigned < budget; ++i) {
    ++alloc[order[i % n_comm]];
    ++assigned;
  }

  // Every community gets at least one entry; the donor is the largest
  // allocation (smallest id on ties).
  for (std::size_t c = 0; c < n_comm; ++c) {
    while (alloc[c] == 0) {
      const auto donor = std::max_element(alloc.begin(), alloc.end()) - alloc.begin();
      --alloc[static_cast<std::size_t>(donor)];
      ++alloc[c];
    }
  }

  // Cap at community size, pushing any overflow to communities with room.
  std::size_t overflow = 0;
  for (std::size_t c = 0; c < n_comm; ++c) {
    if (alloc[c] > community_sizes[c]) {
      overflow += alloc[c] - community_sizes[c];
      alloc[c] = community_sizes[c];
    }
  }
  while (overflow > 0) {
    for (std::size_t c = 0; c < n_comm && overflow > 0; ++c) {
      if (alloc[c] < community_sizes[c]) {
        ++alloc[c];
        --overflow;
      }
    }
  }
  return alloc;
}

Summary summarize_community_lexrank(const EmbeddingSet& embeddings, std::size_t budget,
                                    double threshold, const LexRankParams& params) {
  if (budget < 1) throw Error("summarize: budget must be >= 1");
  Summary summary;
  summary.method = SummaryMethod::community_lexrank;
  summary.total_budget = budget;

  const SimilarityGraph graph = build_graph(embeddings, threshold);
  const LouvainResult communities = louvain(graph);

  std::vector<std::vector<std::string>> members(communities.community_count);
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    members[static_cast<std::size_t>(communities.community[i])].push_back(graph.node_ids[i]);
  }
  std::vector<std::size_t> sizes(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) sizes[c] = members[c].size();

  const std::size_t effective = std::min(budget, embeddings.size());
  const std::vector<std::size_t> alloc = allocate_budget(sizes, effective);

  for (std::size_t c = 0; c < members.size(); ++c) {
    if (alloc[c] == 0) continue;
    const EmbeddingSet community = embeddings.subset(members[c]);
    const SimilarityGraph community_graph = build_graph(community, threshold);
    const auto order = ranked(lexrank(community_graph, params));
    const std::size_t take = std::min(alloc[c], order.size());
    for (std::size_t i = 0; i < take; ++i) {
      summary.entries.push_back({order[i].first, std::to_string(c), order[i].second});
    }
  }
  return summary;
}

Summary summarize_lsa(const std::vector<Tweet>& subset, std::size_t budget) {
  if (budget < 1) throw Error("summarize: budget must be >= 1");
  Summary summary;
  summary.method = SummaryMethod::lsa;
  summary.total_budget = budget;

  const std::size_t k = std::min(budget, subset.size());
  const LsaSelection sel = lsa_select(subset, k);
  summary.rank_deficient = sel.rank_deficient;
  for (std::size_t i = 0; i < sel.ids.size(); ++i) {
    summary.entries.push_back({sel.ids[i], "all", sel.scores[i]});
  }
  return summary;
}

}  // namespace equisumm
