#include "equisumm/svd.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "equisumm/embedding.hpp"
#include "equisumm/errors.hpp"

namespace equisumm {

namespace {

Eigen::VectorXd seeded_start(Eigen::Index n, std::uint32_t salt) {
  std::mt19937 rng(0x5eedu + salt);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = gauss(rng);
  return v;
}

// Removes the components of v along the first `cols` columns of basis.
void orthogonalize(Eigen::VectorXd& v, const Eigen::MatrixXd& basis, Eigen::Index cols) {
  if (cols > 0) {
    const auto prev = basis.leftCols(cols);
    v -= prev * (prev.transpose() * v);
  }
}

}  // namespace

TruncatedSvd truncated_svd(const Eigen::MatrixXd& a, Eigen::Index k, double tol,
                           std::size_t max_iter) {
  if (k < 1) throw Error("truncated_svd: k must be >= 1");
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  const Eigen::Index k_max = std::min({k, m, n});

  TruncatedSvd out;
  out.singular_values.resize(k_max);
  out.left.resize(m, k_max);
  out.right.resize(n, k_max);

  Eigen::MatrixXd work = a;
  double sigma0 = 0.0;
  Eigen::Index j = 0;
  for (; j < k_max; ++j) {
    Eigen::VectorXd v = seeded_start(n, static_cast<std::uint32_t>(j));
    orthogonalize(v, out.right, j);
    double vn = v.norm();
    if (vn == 0.0) break;
    v /= vn;

    double sigma = 0.0;
    double prev_sigma = -1.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
      Eigen::VectorXd w = work.transpose() * (work * v);
      orthogonalize(w, out.right, j);
      const double wn = w.norm();
      if (wn == 0.0) {
        sigma = 0.0;
        break;
      }
      v = w / wn;
      sigma = (work * v).norm();
      if (prev_sigma >= 0.0 && std::abs(sigma - prev_sigma) <= tol * std::max(sigma, 1.0)) {
        break;
      }
      prev_sigma = sigma;
    }

    if (j == 0) sigma0 = sigma;
    if (sigma <= 1e-12 * std::max(sigma0, 1e-300)) break;

    Eigen::VectorXd u = work * v / sigma;
    out.singular_values(j) = sigma;
    out.left.col(j) = u;
    out.right.col(j) = v;
    work -= sigma * u * v.transpose();
  }

  out.rank = j;
  out.rank_deficient = j < k;
  out.singular_values.conservativeResize(j);
  out.left.conservativeResize(m, j);
  out.right.conservativeResize(n, j);
  return out;
}

LsaSelection lsa_select(const std::vector<Tweet>& subset, std::size_t k, double tol) {
  if (k < 1) throw Error("lsa_select: k must be >= 1");
  if (subset.size() < k) {
    throw Error("lsa_select: need at least " + std::to_string(k) + " tweets, have " +
                std::to_string(subset.size()));
  }

  Corpus scratch;
  scratch.tweets = subset;
  const TfidfModel model = build_tfidf(scratch);
  // terms x tweets, so right-singular loadings index tweets.
  const Eigen::MatrixXd b = model.weights.transpose();
  const auto n = static_cast<Eigen::Index>(subset.size());

  const TruncatedSvd svd = truncated_svd(b, static_cast<Eigen::Index>(k), tol);

  LsaSelection sel;
  sel.rank_deficient = svd.rank_deficient;
  std::vector<bool> taken(static_cast<std::size_t>(n), false);

  for (Eigen::Index j = 0; j < svd.rank && sel.ids.size() < k; ++j) {
    Eigen::Index best = -1;
    double best_loading = -1.0;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (taken[static_cast<std::size_t>(t)]) continue;
      const double loading = std::abs(svd.right(t, j));
      if (loading > best_loading) {
        best_loading = loading;
        best = t;
      }
    }
    taken[static_cast<std::size_t>(best)] = true;
    sel.ids.push_back(subset[static_cast<std::size_t>(best)].id);
    sel.scores.push_back(best_loading);
  }

  // Rank ran out before k concepts: fill by descending tweet-column norm.
  while (sel.ids.size() < k) {
    Eigen::Index best = -1;
    double best_norm = -1.0;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (taken[static_cast<std::size_t>(t)]) continue;
      const double norm = b.col(t).norm();
      if (norm > best_norm) {
        best_norm = norm;
        best = t;
      }
    }
    taken[static_cast<std::size_t>(best)] = true;
    sel.ids.push_back(subset[static_cast<std::size_t>(best)].id);
    sel.scores.push_back(best_norm);
  }
  return sel;
}

}  // namespace equisumm
