#pragma once

#include <vector>

#include "equisumm/clustering.hpp"
#include "equisumm/config.hpp"
#include "equisumm/corpus.hpp"
#include "equisumm/embedding.hpp"
#include "equisumm/lexicon.hpp"
#include "equisumm/metrics.hpp"
#include "equisumm/summarize.hpp"

namespace equisumm {

struct Evaluation {
  ClassifyResult classification;
  std::vector<Summary> summaries;   // lexrank, lsa, community_lexrank, equisumm
  std::vector<BiasReport> rows;     // Dataset first, then the four methods
  std::size_t budget = 0;           // baseline budget actually used
  bool include_neutral = true;
};

// Full comparison run: classify, build the per-group summary, give every
// baseline the same budget (the per-group summary's size unless the config
// pins one), and score them all.
Evaluation run_evaluation(const Corpus& corpus, const EmbeddingSet& embeddings,
                          const GenderLexicon& lexicon, const RunConfig& config);

}  // namespace equisumm
