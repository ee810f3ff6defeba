#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "equisumm/corpus.hpp"

namespace equisumm {

struct TruncatedSvd {
  Eigen::VectorXd singular_values;  // nonincreasing; `rank` entries
  Eigen::MatrixXd left;             // m x rank, orthonormal columns
  Eigen::MatrixXd right;            // n x rank, orthonormal columns
  Eigen::Index rank = 0;
  bool rank_deficient = false;  // fewer usable triplets than requested
};

// Top-k singular triplets by power iteration with deflation.  Start vectors
// come from a fixed-seed generator, so results are reproducible.
TruncatedSvd truncated_svd(const Eigen::MatrixXd& a, Eigen::Index k, double tol = 1e-9,
                           std::size_t max_iter = 20000);

struct LsaSelection {
  std::vector<std::string> ids;  // one tweet per latent concept, concept order
  std::vector<double> scores;    // |loading| backing each pick
  bool rank_deficient = false;
};

// Latent-concept sentence selection: decompose the term x tweet weight
// matrix, then per concept take the unselected tweet with the largest
// absolute right-singular loading.  When the matrix runs out of rank the
// remaining picks fall back to descending column norm.
LsaSelection lsa_select(const std::vector<Tweet>& subset, std::size_t k, double tol = 1e-9);

}  // namespace equisumm
