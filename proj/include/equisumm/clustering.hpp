#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equisumm/corpus.hpp"
#include "equisumm/embedding.hpp"
#include "equisumm/lexicon.hpp"

namespace equisumm {

enum class Provenance { rule, centroid };
const char* to_string(Provenance p);

struct ClassifiedTweet {
  std::string id;
  GenderLabel label = GenderLabel::N;
  double confidence = 0.0;
  Provenance provenance = Provenance::rule;
  std::optional<double> similarity;  // set for centroid assignments
};

struct GenderCluster {
  std::vector<std::string> member_ids;  // corpus order
  Eigen::RowVectorXd centroid;          // size 0 when not defined (N, empty)
};

struct ClassifyResult {
  std::vector<ClassifiedTweet> assignments;       // corpus order
  std::map<GenderLabel, GenderCluster> clusters;  // all four labels present
};

struct ClassifyParams {
  double conf_threshold = 1.0;  // rule assignments at/above this seed clusters
  double tau_reassign = 0.40;   // below this cosine the tweet stays neutral
};

// Mean vector per label over the given member embeddings.
std::map<GenderLabel, Eigen::RowVectorXd> compute_centroids(
    const std::map<GenderLabel, std::vector<Eigen::RowVectorXd>>& members);

// Nearest-centroid assignment: best cosine wins, earlier label wins ties,
// and anything below `tau` falls back to N.  Returns the chosen label and
// the best cosine seen.
std::pair<GenderLabel, double> assign_by_centroid(
    const Eigen::RowVectorXd& v, const std::map<GenderLabel, Eigen::RowVectorXd>& centroids,
    double tau);

// Two-stage classification: lexicon rules seed the gender clusters, then
// every unseeded tweet is placed by cosine against the seed centroids.
ClassifyResult classify_corpus(const Corpus& corpus, const EmbeddingSet& embeddings,
                               const GenderLexicon& lexicon,
                               const ClassifyParams& params = {});

}  // namespace equisumm
