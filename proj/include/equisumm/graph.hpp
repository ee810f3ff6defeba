#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "equisumm/embedding.hpp"

namespace equisumm {

// Undirected cosine-similarity graph: an edge joins two tweets whose cosine
// reaches the threshold; the cosine itself is kept as the edge weight.
struct SimilarityGraph {
  std::vector<std::string> node_ids;
  double threshold = 0.0;
  // neighbors[i]: (j, weight) pairs sorted by j; never contains i itself.
  std::vector<std::vector<std::pair<Eigen::Index, double>>> neighbors;
  std::vector<double> strengths;  // per-node sum of incident weights
  std::size_t edge_count = 0;     // undirected edges, each counted once

  std::size_t node_count() const { return node_ids.size(); }
  double total_weight() const;  // sum of edge weights, each edge once
};

SimilarityGraph build_graph(const EmbeddingSet& embeddings, double threshold);

struct LexRankParams {
  double damping = 0.85;
  double tol = 1e-8;  // L1 residual
  std::size_t max_iter = 200;
};

struct CentralityScores {
  std::vector<std::string> ids;  // graph node order
  std::vector<double> scores;    // aligned with ids; sums to 1
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;

  double score_of(const std::string& id) const;
};

// Power iteration with teleportation over the row-stochastic walk matrix;
// isolated nodes behave as uniform (dangling) rows.  Non-convergence within
// max_iter is reported through `converged`, not an exception.
CentralityScores lexrank(const SimilarityGraph& graph, const LexRankParams& params = {});

// Newman modularity of a node partition; `community[i]` labels node i.
double modularity(const SimilarityGraph& graph, const std::vector<int>& community);

struct LouvainResult {
  std::vector<int> community;  // aligned with graph node order, ids 0..C-1
  std::size_t community_count = 0;
  double modularity = 0.0;
  std::size_t levels = 0;  // local-move phases run
};

// Greedy modularity maximization with graph aggregation.  Nodes are visited
// in index order every sweep, so results are reproducible; community ids are
// renumbered by first member.
LouvainResult louvain(const SimilarityGraph& graph);

}  // namespace equisumm
