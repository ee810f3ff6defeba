#include "equisumm/config.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "equisumm/errors.hpp"

namespace equisumm {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(key + ": expected a number, got \"" + value + "\"");
  }
  return out;
}

std::size_t parse_size(const std::string& key, const std::string& value) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(key + ": expected a nonnegative integer, got \"" + value + "\"");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ConfigError(key + ": expected true or false, got \"" + value + "\"");
}

std::vector<std::string> split_csv(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join_csv(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += items[i];
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

void apply_kv(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "input.path") {
    config.input_path = value;
  } else if (key == "input.format") {
    if (value == "jsonl") {
      config.input_format = CorpusFormat::jsonl;
    } else if (value == "csv") {
      config.input_format = CorpusFormat::csv;
    } else {
      throw ConfigError("input.format: expected jsonl or csv, got \"" + value + "\"");
    }
  } else if (key == "input.text_field") {
    config.text_field = value;
  } else if (key == "lexicon.male_terms") {
    config.male_terms_path = value;
  } else if (key == "lexicon.female_terms") {
    config.female_terms_path = value;
  } else if (key == "lexicon.names_dir") {
    config.names_dir = value;
  } else if (key == "honorifics.male") {
    config.male_honorifics = split_csv(value);
  } else if (key == "honorifics.female") {
    config.female_honorifics = split_csv(value);
  } else if (key == "embedding.kind") {
    const auto kind = parse_provider_kind(value);
    if (!kind) throw ConfigError("embedding.kind: expected tfidf or http, got \"" + value + "\"");
    config.embedding.kind = *kind;
  } else if (key == "embedding.url") {
    config.embedding.url = value;
  } else if (key == "embedding.batch_size") {
    config.embedding.batch_size = parse_size(key, value);
  } else if (key == "embedding.max_retries") {
    config.embedding.max_retries = parse_size(key, value);
  } else if (key == "embedding.retry_backoff_ms") {
    config.embedding.retry_backoff_ms = parse_size(key, value);
  } else if (key == "classify.conf_threshold") {
    config.classify.conf_threshold = parse_double(key, value);
  } else if (key == "classify.tau_reassign") {
    config.classify.tau_reassign = parse_double(key, value);
  } else if (key == "graph.threshold") {
    config.graph_threshold = parse_double(key, value);
  } else if (key == "lexrank.damping") {
    config.lexrank.damping = parse_double(key, value);
  } else if (key == "lexrank.tol") {
    config.lexrank.tol = parse_double(key, value);
  } else if (key == "lexrank.max_iter") {
    config.lexrank.max_iter = parse_size(key, value);
  } else if (key == "summary.k") {
    config.summary_k = parse_size(key, value);
  } else if (key == "summary.include_neutral") {
    config.include_neutral = parse_bool(key, value);
  } else if (key == "summary.budget") {
    config.summary_budget = parse_size(key, value);
  } else if (key == "metrics.balance_epsilon") {
    config.balance_epsilon = parse_double(key, value);
  } else if (key == "seed") {
    config.seed = parse_size(key, value);
  } else {
    throw ConfigError("unknown config key \"" + key + "\"");
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#') continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    apply_kv(config, trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)));
  }
}

std::string dump_config(const RunConfig& c) {
  std::map<std::string, std::string> kv;
  kv["input.path"] = c.input_path;
  kv["input.format"] = to_string(c.input_format);
  kv["input.text_field"] = c.text_field;
  kv["lexicon.male_terms"] = c.male_terms_path;
  kv["lexicon.female_terms"] = c.female_terms_path;
  kv["lexicon.names_dir"] = c.names_dir;
  kv["honorifics.male"] = join_csv(c.male_honorifics);
  kv["honorifics.female"] = join_csv(c.female_honorifics);
  kv["embedding.kind"] = to_string(c.embedding.kind);
  kv["embedding.url"] = c.embedding.url;
  kv["embedding.batch_size"] = std::to_string(c.embedding.batch_size);
  kv["embedding.max_retries"] = std::to_string(c.embedding.max_retries);
  kv["embedding.retry_backoff_ms"] = std::to_string(c.embedding.retry_backoff_ms);
  kv["classify.conf_threshold"] = format_double(c.classify.conf_threshold);
  kv["classify.tau_reassign"] = format_double(c.classify.tau_reassign);
  kv["graph.threshold"] = format_double(c.graph_threshold);
  kv["lexrank.damping"] = format_double(c.lexrank.damping);
  kv["lexrank.tol"] = format_double(c.lexrank.tol);
  kv["lexrank.max_iter"] = std::to_string(c.lexrank.max_iter);
  kv["summary.k"] = std::to_string(c.summary_k);
  kv["summary.include_neutral"] = c.include_neutral ? "true" : "false";
  kv["summary.budget"] = std::to_string(c.summary_budget);
  kv["metrics.balance_epsilon"] = format_double(c.balance_epsilon);
  kv["seed"] = std::to_string(c.seed);

  std::string out;
  for (const auto& [key, value] : kv) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

void validate(const RunConfig& c) {
  auto in_unit = [](const char* key, double v) {
    if (v < 0.0 || v > 1.0) {
      throw ConfigError(std::string(key) + ": must be in [0, 1], got " + format_double(v));
    }
  };
  in_unit("classify.conf_threshold", c.classify.conf_threshold);
  in_unit("classify.tau_reassign", c.classify.tau_reassign);
  in_unit("graph.threshold", c.graph_threshold);
  in_unit("lexrank.damping", c.lexrank.damping);
  in_unit("metrics.balance_epsilon", c.balance_epsilon);
  if (c.summary_k < 1) throw ConfigError("summary.k: must be >= 1");
  if (c.lexrank.tol <= 0.0) throw ConfigError("lexrank.tol: must be positive");
  if (c.lexrank.max_iter < 1) throw ConfigError("lexrank.max_iter: must be >= 1");
  if (c.embedding.batch_size < 1) throw ConfigError("embedding.batch_size: must be >= 1");
  if (c.embedding.kind == ProviderKind::http && c.embedding.url.empty()) {
    throw ConfigError("embedding.url: required when embedding.kind=http");
  }
}

GenderLexicon load_lexicon_from(const RunConfig& c) {
  if (c.male_terms_path.empty()) throw ConfigError("lexicon.male_terms is required");
  if (c.female_terms_path.empty()) throw ConfigError("lexicon.female_terms is required");
  for (const std::string& path : {c.male_terms_path, c.female_terms_path}) {
    if (!std::filesystem::exists(path)) {
      throw ConfigError("lexicon file not found: " + path);
    }
  }
  if (!c.names_dir.empty() && !std::filesystem::is_directory(c.names_dir)) {
    throw ConfigError("lexicon.names_dir is not a directory: " + c.names_dir);
  }
  LexiconOptions options;
  options.male_honorifics = c.male_honorifics;
  options.female_honorifics = c.female_honorifics;
  std::optional<std::string> names_dir;
  if (!c.names_dir.empty()) names_dir = c.names_dir;
  return load_lexicon(c.male_terms_path, c.female_terms_path, names_dir, options);
}

}  // namespace equisumm
