#pragma once

// Independent reference implementations used only by tests.  Everything here
// is written the dumb, obvious way (dense matrices, plain loops, exhaustive
// enumeration) so a disagreement with the library points at the library.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace oracle {

struct RuleOutcome {
  char label;  // 'M', 'F', 'B', 'N'
  double confidence;
};

// Decision table evaluated directly from the counts.
inline RuleOutcome rule_table(std::size_t male_hits, std::size_t female_hits) {
  if (male_hits > 0 && female_hits > 0) return {'B', 1.0};
  if (male_hits == 0 && female_hits == 0) return {'N', 0.0};
  const double total = static_cast<double>(male_hits + female_hits);
  const double diff = male_hits > female_hits
                          ? static_cast<double>(male_hits - female_hits)
                          : static_cast<double>(female_hits - male_hits);
  return {male_hits > female_hits ? 'M' : 'F', diff / total};
}

// Plain-loop mean of a set of vectors.
inline std::vector<double> centroid(const std::vector<std::vector<double>>& members) {
  std::vector<double> mean(members.at(0).size(), 0.0);
  for (const auto& v : members) {
    for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += v[j];
  }
  for (double& x : mean) x /= static_cast<double>(members.size());
  return mean;
}

// Dense power iteration over an explicit transition matrix built from a full
// weight matrix.  Rows with zero weight get the uniform row.
inline Eigen::VectorXd lexrank_dense(const Eigen::MatrixXd& weights, double damping,
                                     double tol, std::size_t max_iter) {
  const Eigen::Index n = weights.rows();
  Eigen::MatrixXd p(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double row_sum = weights.row(i).sum();
    if (row_sum == 0.0) {
      p.row(i).setConstant(1.0 / static_cast<double>(n));
    } else {
      p.row(i) = weights.row(i) / row_sum;
    }
  }
  Eigen::VectorXd s = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  const Eigen::VectorXd teleport =
      Eigen::VectorXd::Constant(n, (1.0 - damping) / static_cast<double>(n));
  for (std::size_t it = 0; it < max_iter; ++it) {
    Eigen::VectorXd next = teleport + damping * p.transpose() * s;
    const double residual = (next - s).cwiseAbs().sum();
    s = next;
    if (residual < tol) break;
  }
  return s;
}

// Textbook double-sum modularity over a full symmetric weight matrix.
inline double modularity_dense(const Eigen::MatrixXd& weights,
                               const std::vector<int>& community) {
  const Eigen::Index n = weights.rows();
  const double two_m = weights.sum();
  if (two_m == 0.0) return 0.0;
  Eigen::VectorXd degree = weights.rowwise().sum();
  double q = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (community[static_cast<std::size_t>(i)] != community[static_cast<std::size_t>(j)]) {
        continue;
      }
      q += weights(i, j) - degree(i) * degree(j) / two_m;
    }
  }
  return q / two_m;
}

// Exhaustive best-modularity partition via restricted growth strings.
// Feasible only for small n; callers keep n <= 8.
inline std::pair<std::vector<int>, double> best_partition(const Eigen::MatrixXd& weights,
                                                          int max_blocks) {
  const auto n = static_cast<std::size_t>(weights.rows());
  std::vector<int> assignment(n, 0);
  std::vector<int> best(n, 0);
  double best_q = modularity_dense(weights, best);

  // Enumerate all restricted growth strings a[0]=0, a[i] <= max(a[..i-1])+1.
  while (true) {
    // advance
    std::size_t i = n - 1;
    for (;; --i) {
      if (i == 0) return {best, best_q};
      int cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, assignment[j]);
      if (assignment[i] <= std::min(cap, max_blocks - 2)) {
        ++assignment[i];
        for (std::size_t j = i + 1; j < n; ++j) assignment[j] = 0;
        break;
      }
    }
    const double q = modularity_dense(weights, assignment);
    if (q > best_q) {
      best_q = q;
      best = assignment;
    }
  }
}

// Full SVD via Eigen's Jacobi implementation; singular values descending.
inline Eigen::VectorXd singular_values(const Eigen::MatrixXd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues();
}

// Right singular vectors (columns) for selection cross-checks.
inline Eigen::MatrixXd right_vectors(const Eigen::MatrixXd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixV();
}

}  // namespace oracle
