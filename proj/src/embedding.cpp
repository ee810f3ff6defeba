#include "equisumm/embedding.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "equisumm/errors.hpp"
#include "equisumm/linalg.hpp"

namespace equisumm {

void EmbeddingSet::ensure_index() const {
  if (!index_.empty() || ids.empty()) return;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    index_[ids[i]] = static_cast<Eigen::Index>(i);
  }
}

Eigen::Index EmbeddingSet::row_of(const std::string& id) const {
  ensure_index();
  return index_.at(id);
}

Eigen::RowVectorXd EmbeddingSet::vector_for(const std::string& id) const {
  return vectors.row(row_of(id));
}

EmbeddingSet EmbeddingSet::subset(const std::vector<std::string>& keep) const {
  EmbeddingSet out;
  out.ids = keep;
  out.vectors.resize(static_cast<Eigen::Index>(keep.size()), vectors.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.vectors.row(static_cast<Eigen::Index>(i)) = vectors.row(row_of(keep[i]));
  }
  return out;
}

const char* to_string(ProviderKind kind) {
  return kind == ProviderKind::tfidf ? "tfidf" : "http";
}

std::optional<ProviderKind> parse_provider_kind(std::string_view s) {
  if (s == "tfidf") return ProviderKind::tfidf;
  if (s == "http") return ProviderKind::http;
  return std::nullopt;
}

TfidfModel build_tfidf(const Corpus& corpus) {
  if (corpus.tweets.empty()) throw EmptyCorpusError("no tweets to embed");

  // Sorted term -> column, plus per-term document frequency.
  std::map<std::string, Eigen::Index> column;
  std::map<std::string, std::size_t> df;
  for (const Tweet& t : corpus.tweets) {
    std::set<std::string> seen(t.tokens.begin(), t.tokens.end());
    for (const auto& tok : seen) ++df[tok];
  }
  Eigen::Index next = 0;
  for (const auto& [term, count] : df) {
    (void)count;
    column[term] = next++;
  }

  TfidfModel model;
  model.vocab.reserve(column.size());
  for (const auto& [term, col] : column) {
    (void)col;
    model.vocab.push_back(term);
  }

  const auto n_docs = static_cast<double>(corpus.tweets.size());
  model.weights = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(corpus.tweets.size()), next);
  for (std::size_t i = 0; i < corpus.tweets.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    std::map<std::string, double> tf;
    for (const auto& tok : corpus.tweets[i].tokens) tf[tok] += 1.0;
    for (const auto& [term, count] : tf) {
      const double idf =
          std::log((1.0 + n_docs) / (1.0 + static_cast<double>(df.at(term)))) + 1.0;
      model.weights(row, column.at(term)) = count * idf;
    }
  }
  return model;
}

EmbeddingSet tfidf_embed(const Corpus& corpus) {
  TfidfModel model = build_tfidf(corpus);
  EmbeddingSet set;
  set.ids.reserve(corpus.tweets.size());
  for (const Tweet& t : corpus.tweets) set.ids.push_back(t.id);
  set.vectors = std::move(model.weights);
  normalize_rows(set.vectors);
  return set;
}

namespace detail {
// Defined in http_embedding.cpp.
EmbeddingSet http_embed(const Corpus& corpus, const ProviderConfig& config);
}  // namespace detail

EmbeddingSet embed_all(const Corpus& corpus, const ProviderConfig& config) {
  if (corpus.tweets.empty()) throw EmptyCorpusError("no tweets to embed");
  EmbeddingSet set;
  switch (config.kind) {
    case ProviderKind::tfidf:
      set = tfidf_embed(corpus);
      break;
    case ProviderKind::http:
      set = detail::http_embed(corpus, config);
      normalize_rows(set.vectors);
      break;
  }
  return set;
}

}  // namespace equisumm
