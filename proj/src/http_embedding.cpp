// Eigen must come in ahead of httplib: the socket headers httplib drags in
// define a `_res` macro (<resolv.h>) that mangles an Eigen parameter name.
#include "equisumm/embedding.hpp"
#include "equisumm/errors.hpp"

#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

namespace equisumm::detail {

namespace {

struct Batch {
  Eigen::Index dim = -1;
  std::vector<std::vector<double>> rows;
};

// Parses one /embed response.  Returns false on anything structurally wrong
// (the caller retries); throws DimensionMismatchError on ragged vectors,
// which no retry can fix.
bool parse_response(const std::string& body, std::size_t expected_rows, Batch& out) {
  nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return false;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) return false;
  if (!doc.contains("vectors") || !doc["vectors"].is_array()) return false;

  const auto dim = doc["dim"].get<Eigen::Index>();
  if (dim <= 0) return false;
  const auto& vectors = doc["vectors"];
  if (vectors.size() != expected_rows) return false;

  Batch batch;
  batch.dim = dim;
  batch.rows.reserve(expected_rows);
  for (const auto& row : vectors) {
    if (!row.is_array()) return false;
    std::vector<double> values;
    values.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number()) return false;
      values.push_back(v.get<double>());
    }
    if (static_cast<Eigen::Index>(values.size()) != dim) {
      throw DimensionMismatchError(
          "embedding service returned a vector of length " + std::to_string(values.size()) +
          " where dim=" + std::to_string(dim));
    }
    batch.rows.push_back(std::move(values));
  }
  out = std::move(batch);
  return true;
}

Batch fetch_batch(httplib::Client& client, const std::vector<std::string>& texts,
                  const ProviderConfig& config) {
  nlohmann::json request;
  request["texts"] = texts;
  const std::string body = request.dump();

  std::string last_failure = "no attempt made";
  for (std::size_t attempt = 0; attempt <= config.max_retries; ++attempt) {
    if (attempt > 0) {
      const auto wait = std::chrono::milliseconds(config.retry_backoff_ms << (attempt - 1));
      std::this_thread::sleep_for(wait);
    }
    auto res = client.Post("/embed", body, "application/json");
    if (!res) {
      last_failure = "connection failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_failure = "status " + std::to_string(res->status);
      continue;
    }
    Batch batch;
    if (parse_response(res->body, texts.size(), batch)) return batch;
    last_failure = "malformed response body";
  }
  throw ServiceUnavailableError("embedding service failed after " +
                                std::to_string(config.max_retries + 1) +
                                " attempts (" + last_failure + ")");
}

}  // namespace

EmbeddingSet http_embed(const Corpus& corpus, const ProviderConfig& config) {
  if (config.url.empty()) {
    throw ConfigError("http embedding provider requires a url");
  }
  if (config.batch_size == 0) {
    throw ConfigError("embedding batch_size must be positive");
  }
  httplib::Client client(config.url);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(30, 0);

  EmbeddingSet set;
  set.ids.reserve(corpus.tweets.size());
  for (const Tweet& t : corpus.tweets) set.ids.push_back(t.id);

  Eigen::Index dim = -1;
  std::vector<Batch> batches;
  for (std::size_t start = 0; start < corpus.tweets.size(); start += config.batch_size) {
    const std::size_t stop = std::min(start + config.batch_size, corpus.tweets.size());
    std::vector<std::string> texts;
    texts.reserve(stop - start);
    for (std::size_t i = start; i < stop; ++i) texts.push_back(corpus.tweets[i].text);
    Batch batch = fetch_batch(client, texts, config);
    if (dim < 0) {
      dim = batch.dim;
    } else if (batch.dim != dim) {
      throw DimensionMismatchError("embedding service changed dim from " + std::to_string(dim) +
                                   " to " + std::to_string(batch.dim) + " between batches");
    }
    batches.push_back(std::move(batch));
  }

  set.vectors.resize(static_cast<Eigen::Index>(corpus.tweets.size()), dim);
  Eigen::Index row = 0;
  for (const Batch& batch : batches) {
    for (const auto& values : batch.rows) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        set.vectors(row, j) = values[static_cast<std::size_t>(j)];
      }
      ++row;
    }
  }
  return set;
}

}  // namespace equisumm::detail
