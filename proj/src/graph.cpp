#include "equisumm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "equisumm/errors.hpp"

namespace equisumm {

double SimilarityGraph::total_weight() const {
  return std::accumulate(strengths.begin(), strengths.end(), 0.0) / 2.0;
}

SimilarityGraph build_graph(const EmbeddingSet& embeddings, double threshold) {
  const auto n = static_cast<Eigen::Index>(embeddings.size());
  if (n == 0) throw Error("build_graph: no nodes");

  Eigen::MatrixXd unit = embeddings.vectors;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double norm = unit.row(i).norm();
    if (norm == 0.0) {
      throw ZeroVectorError("build_graph: node " + embeddings.ids[static_cast<std::size_t>(i)] +
                            " has a zero embedding");
    }
    unit.row(i) /= norm;
  }

  SimilarityGraph g;
  g.node_ids = embeddings.ids;
  g.threshold = threshold;
  g.neighbors.resize(static_cast<std::size_t>(n));
  g.strengths.assign(static_cast<std::size_t>(n), 0.0);

  constexpr Eigen::Index kBlock = 256;
  for (Eigen::Index i0 = 0; i0 < n; i0 += kBlock) {
    const Eigen::Index rows = std::min(kBlock, n - i0);
    const Eigen::MatrixXd sims = unit.middleRows(i0, rows) * unit.transpose();
    for (Eigen::Index r = 0; r < rows; ++r) {
      const Eigen::Index i = i0 + r;
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double w = std::clamp(sims(r, j), -1.0, 1.0);
        if (w < threshold) continue;
        g.neighbors[static_cast<std::size_t>(i)].emplace_back(j, w);
        g.neighbors[static_cast<std::size_t>(j)].emplace_back(i, w);
        g.strengths[static_cast<std::size_t>(i)] += w;
        g.strengths[static_cast<std::size_t>(j)] += w;
        ++g.edge_count;
      }
    }
  }
  return g;
}

double CentralityScores::score_of(const std::string& id) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return scores[i];
  }
  throw Error("no score for id " + id);
}

CentralityScores lexrank(const SimilarityGraph& graph, const LexRankParams& params) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw Error("lexrank: empty graph");
  const double d = params.damping;
  const double uniform = 1.0 / static_cast<double>(n);

  CentralityScores out;
  out.ids = graph.node_ids;
  std::vector<double> score(n, uniform);
  std::vector<double> next(n);

  for (std::size_t iter = 1; iter <= params.max_iter; ++iter) {
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (graph.strengths[i] == 0.0) dangling += score[i];
    }
    std::fill(next.begin(), next.end(), (1.0 - d) * uniform + d * dangling * uniform);
    for (std::size_t i = 0; i < n; ++i) {
      if (graph.strengths[i] == 0.0) continue;
      const double mass = d * score[i] / graph.strengths[i];
      for (const auto& [j, w] : graph.neighbors[i]) {
        next[static_cast<std::size_t>(j)] += mass * w;
      }
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += std::abs(next[i] - score[i]);
    score.swap(next);
    out.iterations = iter;
    out.residual = residual;
    if (residual < params.tol) {
      out.converged = true;
      break;
    }
  }
  out.scores = std::move(score);
  return out;
}

double modularity(const SimilarityGraph& graph, const std::vector<int>& community) {
  const std::size_t n = graph.node_count();
  if (community.size() != n) {
    throw DimensionMismatchError("modularity: partition size " +
                                 std::to_string(community.size()) + " for " +
                                 std::to_string(n) + " nodes");
  }
  const double two_m = std::accumulate(graph.strengths.begin(), graph.strengths.end(), 0.0);
  if (two_m == 0.0) return 0.0;

  std::map<int, double> internal;  // ordered-pair internal weight per community
  std::map<int, double> total;     // strength per community
  for (std::size_t i = 0; i < n; ++i) {
    total[community[i]] += graph.strengths[i];
    for (const auto& [j, w] : graph.neighbors[i]) {
      if (community[static_cast<std::size_t>(j)] == community[i]) {
        internal[community[i]] += w;
      }
    }
  }
  double q = 0.0;
  for (const auto& [c, tot] : total) {
    const double in = internal.count(c) ? internal.at(c) : 0.0;
    q += in / two_m - (tot / two_m) * (tot / two_m);
  }
  return q;
}

namespace {

// Aggregated level graph; adjacency lists include self-loops, and a node's
// strength counts its self-loop weight once (plain symmetric-matrix row sum).
struct LevelGraph {
  std::vector<std::vector<std::pair<int, double>>> adj;
  std::vector<double> strength;
  double two_m = 0.0;

  int size() const { return static_cast<int>(adj.size()); }
};

LevelGraph from_similarity(const SimilarityGraph& g) {
  LevelGraph lg;
  const int n = static_cast<int>(g.node_count());
  lg.adj.resize(static_cast<std::size_t>(n));
  lg.strength = g.strengths;
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, w] : g.neighbors[static_cast<std::size_t>(i)]) {
      lg.adj[static_cast<std::size_t>(i)].emplace_back(static_cast<int>(j), w);
    }
  }
  lg.two_m = std::accumulate(lg.strength.begin(), lg.strength.end(), 0.0);
  return lg;
}

// One local-move phase.  Returns true when at least one node changed
// community.  `comm` is updated in place.
bool local_move(const LevelGraph& lg, std::vector<int>& comm) {
  const int n = lg.size();
  std::vector<double> tot(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    tot[static_cast<std::size_t>(comm[static_cast<std::size_t>(i)])] +=
        lg.strength[static_cast<std::size_t>(i)];
  }

  bool moved_any = false;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n; ++i) {
      const int old_c = comm[static_cast<std::size_t>(i)];
      const double k_i = lg.strength[static_cast<std::size_t>(i)];

      std::map<int, double> links;  // community -> weight from i (self excluded)
      for (const auto& [j, w] : lg.adj[static_cast<std::size_t>(i)]) {
        if (j == i) continue;
        links[comm[static_cast<std::size_t>(j)]] += w;
      }

      tot[static_cast<std::size_t>(old_c)] -= k_i;
      auto gain = [&](int c) {
        const auto it = links.find(c);
        const double k_in = it == links.end() ? 0.0 : it->second;
        return k_in - tot[static_cast<std::size_t>(c)] * k_i / lg.two_m;
      };

      int best_c = old_c;
      double best_gain = gain(old_c);
      for (const auto& [c, w] : links) {
        (void)w;
        if (c == old_c) continue;
        const double cand = gain(c);
        if (cand > best_gain + 1e-12) {
          best_gain = cand;
          best_c = c;
        }
      }
      tot[static_cast<std::size_t>(best_c)] += k_i;
      if (best_c != old_c) {
        comm[static_cast<std::size_t>(i)] = best_c;
        improved = true;
        moved_any = true;
      }
    }
  }
  return moved_any;
}

// Renumbers community labels to 0..C-1 by first appearance in node order.
int renumber(std::vector<int>& comm) {
  std::map<int, int> relabel;
  for (int& c : comm) {
    auto [it, inserted] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
    (void)inserted;
    c = it->second;
  }
  return static_cast<int>(relabel.size());
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<int>& comm, int n_comm) {
  LevelGraph out;
  out.adj.resize(static_cast<std::size_t>(n_comm));
  out.strength.assign(static_cast<std::size_t>(n_comm), 0.0);
  std::vector<std::map<int, double>> merged(static_cast<std::size_t>(n_comm));
  for (int i = 0; i < lg.size(); ++i) {
    const int ci = comm[static_cast<std::size_t>(i)];
    for (const auto& [j, w] : lg.adj[static_cast<std::size_t>(i)]) {
      merged[static_cast<std::size_t>(ci)][comm[static_cast<std::size_t>(j)]] += w;
    }
  }
  for (int c = 0; c < n_comm; ++c) {
    for (const auto& [d, w] : merged[static_cast<std::size_t>(c)]) {
      out.adj[static_cast<std::size_t>(c)].emplace_back(d, w);
      out.strength[static_cast<std::size_t>(c)] += w;
    }
  }
  out.two_m = std::accumulate(out.strength.begin(), out.strength.end(), 0.0);
  return out;
}

}  // namespace

LouvainResult louvain(const SimilarityGraph& graph) {
  const std::size_t n = graph.node_count();
  LouvainResult result;
  result.community.resize(n);

  if (graph.edge_count == 0) {
    std::iota(result.community.begin(), result.community.end(), 0);
    result.community_count = n;
    result.modularity = 0.0;
    return result;
  }

  // node_to_comm composes the per-level assignments down to original nodes.
  std::vector<int> node_to_comm(n);
  std::iota(node_to_comm.begin(), node_to_comm.end(), 0);
  LevelGraph lg = from_similarity(graph);
  double prev_q = modularity(graph, node_to_comm);

  while (true) {
    std::vector<int> comm(static_cast<std::size_t>(lg.size()));
    std::iota(comm.begin(), comm.end(), 0);
    const bool moved = local_move(lg, comm);
    ++result.levels;
    if (!moved) break;

    const int n_comm = renumber(comm);
    for (int& c : node_to_comm) {
      c = comm[static_cast<std::size_t>(c)];
    }
    const double q = modularity(graph, node_to_comm);
    const bool converged = q - prev_q < 1e-7;
    prev_q = q;
    if (converged || n_comm == lg.size()) break;
    lg = aggregate(lg, comm, n_comm);
  }

  result.community = node_to_comm;
  result.community_count = static_cast<std::size_t>(renumber(result.community));
  result.modularity = modularity(graph, result.community);
  return result;
}

}  // namespace equisumm
