#include "equisumm/clustering.hpp"

#include "equisumm/errors.hpp"
#include "equisumm/linalg.hpp"

namespace equisumm {

const char* to_string(Provenance p) {
  return p == Provenance::rule ? "rule" : "centroid";
}

std::map<GenderLabel, Eigen::RowVectorXd> compute_centroids(
    const std::map<GenderLabel, std::vector<Eigen::RowVectorXd>>& members) {
  std::map<GenderLabel, Eigen::RowVectorXd> centroids;
  std::size_t total = 0;
  Eigen::Index dim = -1;
  for (const auto& [label, vectors] : members) {
    if (vectors.empty()) continue;
    for (const auto& v : vectors) {
      if (dim < 0) dim = v.size();
      if (v.size() != dim) {
        throw DimensionMismatchError("centroid members have sizes " + std::to_string(dim) +
                                     " and " + std::to_string(v.size()));
      }
    }
    Eigen::RowVectorXd sum = Eigen::RowVectorXd::Zero(dim);
    for (const auto& v : vectors) sum += v;
    centroids[label] = sum / static_cast<double>(vectors.size());
    total += vectors.size();
  }
  if (total == 0) throw EmptySeedSetError("no member vectors for any label");
  return centroids;
}

std::pair<GenderLabel, double> assign_by_centroid(
    const Eigen::RowVectorXd& v, const std::map<GenderLabel, Eigen::RowVectorXd>& centroids,
    double tau) {
  if (centroids.empty()) throw EmptySeedSetError("no centroids to assign against");
  GenderLabel best_label = GenderLabel::N;
  double best = -2.0;
  for (const auto& [label, centroid] : centroids) {
    const double c = cosine(v, centroid);
    if (c > best) {
      best = c;
      best_label = label;
    }
  }
  if (best < tau) best_label = GenderLabel::N;
  return {best_label, best};
}

ClassifyResult classify_corpus(const Corpus& corpus, const EmbeddingSet& embeddings,
                               const GenderLexicon& lexicon, const ClassifyParams& params) {
  if (corpus.tweets.empty()) throw EmptyCorpusError("nothing to classify");

  ClassifyResult result;
  result.assignments.resize(corpus.tweets.size());

  std::map<GenderLabel, std::vector<Eigen::RowVectorXd>> seed_vectors;
  std::vector<std::size_t> pending;  // indexes awaiting centroid assignment

  for (std::size_t i = 0; i < corpus.tweets.size(); ++i) {
    const Tweet& tweet = corpus.tweets[i];
    const RuleClassification rc = classify_rule(tweet, lexicon);
    ClassifiedTweet& out = result.assignments[i];
    out.id = tweet.id;
    if (rc.label != GenderLabel::N && rc.confidence >= params.conf_threshold) {
      out.label = rc.label;
      out.confidence = rc.confidence;
      out.provenance = Provenance::rule;
      seed_vectors[rc.label].push_back(embeddings.vector_for(tweet.id));
    } else {
      pending.push_back(i);
    }
  }

  if (seed_vectors.empty()) {
    throw NoSeedClustersError("rule stage produced no confident gender assignments");
  }
  const auto centroids = compute_centroids(seed_vectors);

  for (std::size_t i : pending) {
    const Tweet& tweet = corpus.tweets[i];
    const auto [label, sim] = assign_by_centroid(embeddings.vector_for(tweet.id), centroids,
                                                 params.tau_reassign);
    ClassifiedTweet& out = result.assignments[i];
    out.label = label;
    out.confidence = 0.0;
    out.provenance = Provenance::centroid;
    out.similarity = sim;
  }

  for (GenderLabel label :
       {GenderLabel::M, GenderLabel::F, GenderLabel::B, GenderLabel::N}) {
    result.clusters[label] = {};
  }
  for (const ClassifiedTweet& ct : result.assignments) {
    result.clusters[ct.label].member_ids.push_back(ct.id);
  }
  for (GenderLabel label : {GenderLabel::M, GenderLabel::F, GenderLabel::B}) {
    GenderCluster& cluster = result.clusters[label];
    if (cluster.member_ids.empty()) continue;
    Eigen::RowVectorXd sum = Eigen::RowVectorXd::Zero(embeddings.dim());
    for (const auto& id : cluster.member_ids) sum += embeddings.vector_for(id);
    cluster.centroid = sum / static_cast<double>(cluster.member_ids.size());
  }
  return result;
}

}  // namespace equisumm
