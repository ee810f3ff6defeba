#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equisumm/corpus.hpp"

namespace equisumm {

// Dense tweet embeddings, one row per tweet, rows L2-normalized.
struct EmbeddingSet {
  std::vector<std::string> ids;
  Eigen::MatrixXd vectors;

  std::size_t size() const { return ids.size(); }
  Eigen::Index dim() const { return vectors.cols(); }

  // Row index for an id; throws std::out_of_range if absent.
  Eigen::Index row_of(const std::string& id) const;
  Eigen::RowVectorXd vector_for(const std::string& id) const;

  // Rows for the given ids, in the given order.
  EmbeddingSet subset(const std::vector<std::string>& keep) const;

 private:
  mutable std::map<std::string, Eigen::Index> index_;
  void ensure_index() const;
};

enum class ProviderKind { tfidf, http };

const char* to_string(ProviderKind kind);
std::optional<ProviderKind> parse_provider_kind(std::string_view s);

struct ProviderConfig {
  ProviderKind kind = ProviderKind::tfidf;
  std::string url;            // http provider endpoint, e.g. http://localhost:8900
  std::size_t batch_size = 64;
  std::size_t max_retries = 2;
  std::size_t retry_backoff_ms = 250;
};

// Raw tf-idf statistics shared by the embedder and the topic-matrix builder.
// `weights` is tweets x terms, unnormalized.
struct TfidfModel {
  std::vector<std::string> vocab;  // sorted
  Eigen::MatrixXd weights;
};

TfidfModel build_tfidf(const Corpus& corpus);

// tweets x terms tf-idf with L2-normalized rows.
EmbeddingSet tfidf_embed(const Corpus& corpus);

// Embeds every tweet with the configured provider.  All rows come back
// L2-normalized regardless of what the provider returned.
EmbeddingSet embed_all(const Corpus& corpus, const ProviderConfig& config);

}  // namespace equisumm
