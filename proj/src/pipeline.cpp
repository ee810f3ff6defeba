#include "equisumm/pipeline.hpp"

#include <algorithm>

namespace equisumm {

Evaluation run_evaluation(const Corpus& corpus, const EmbeddingSet& embeddings,
                          const GenderLexicon& lexicon, const RunConfig& config) {
  Evaluation eval;
  eval.include_neutral = config.include_neutral;
  eval.classification = classify_corpus(corpus, embeddings, lexicon, config.classify);

  SummarizeOptions options;
  options.k_per_group = config.summary_k;
  options.include_neutral = config.include_neutral;
  options.graph_threshold = config.graph_threshold;
  options.lexrank = config.lexrank;
  Summary equisumm_summary =
      summarize_equisumm(eval.classification.clusters, embeddings, options);

  // Budget parity: the baselines get as many slots as the per-group summary
  // actually filled, so the comparison is length-for-length.
  eval.budget = config.summary_budget > 0 ? config.summary_budget
                                          : equisumm_summary.entries.size();
  eval.budget = std::min(eval.budget, corpus.tweet_count());

  eval.summaries.push_back(
      summarize_lexrank(embeddings, eval.budget, config.graph_threshold, config.lexrank));
  eval.summaries.push_back(summarize_lsa(corpus.tweets, eval.budget));
  eval.summaries.push_back(summarize_community_lexrank(embeddings, eval.budget,
                                                       config.graph_threshold, config.lexrank));
  eval.summaries.push_back(std::move(equisumm_summary));

  eval.rows = compare_methods(corpus, lexicon, eval.summaries, config.balance_epsilon);
  return eval;
}

}  // namespace equisumm
