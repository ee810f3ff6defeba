#pragma once

#include <string>
#include <vector>

#include "equisumm/clustering.hpp"
#include "equisumm/corpus.hpp"
#include "equisumm/embedding.hpp"
#include "equisumm/graph.hpp"
#include "equisumm/lexicon.hpp"

namespace equisumm {

// Every tunable in one place.  Flat key=value files and --set overrides both
// land in apply_kv; dump_config emits a file that reproduces the run.
struct RunConfig {
  std::string input_path;
  CorpusFormat input_format = CorpusFormat::jsonl;
  std::string text_field = "text";

  std::string male_terms_path;
  std::string female_terms_path;
  std::string names_dir;  // empty: use the bundled name lists
  std::vector<std::string> male_honorifics{"mr", "mister"};
  std::vector<std::string> female_honorifics{"mrs", "ms", "miss"};

  ProviderConfig embedding;
  ClassifyParams classify;
  double graph_threshold = 0.40;
  LexRankParams lexrank;

  std::size_t summary_k = 5;
  bool include_neutral = true;
  std::size_t summary_budget = 0;  // 0: match the per-group summary's size

  double balance_epsilon = 0.02;
  unsigned long seed = 0;  // reserved; the pipeline is deterministic
};

// Applies one key=value pair; unknown keys and unparsable values throw
// ConfigError naming the key.
void apply_kv(RunConfig& config, const std::string& key, const std::string& value);

// Reads a flat key=value file ('#' comments, blank lines allowed).
void apply_config_file(RunConfig& config, const std::string& path);

// All keys in sorted order, one per line; parsing the dump reproduces the
// config exactly (doubles use shortest round-trip formatting).
std::string dump_config(const RunConfig& config);

// Range checks: thresholds in [0, 1], K >= 1, positive iteration budgets.
void validate(const RunConfig& config);

// Loads the configured lexicon; missing paths or files are ConfigErrors so
// the CLI exits with usage status, naming the offending path.
GenderLexicon load_lexicon_from(const RunConfig& config);

}  // namespace equisumm
