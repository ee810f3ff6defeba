#pragma once

#include <string>
#include <vector>

#include "equisumm/corpus.hpp"
#include "equisumm/lexicon.hpp"
#include "equisumm/summarize.hpp"

namespace equisumm {

enum class BiasDirection { male, female, balanced };
const char* to_string(BiasDirection direction);

struct BiasReport {
  std::string subject;  // method name or "Dataset"
  std::size_t freq_m = 0;
  std::size_t freq_f = 0;
  double prop_m = 0.0;
  double prop_f = 0.0;
  double ibs = 0.0;  // prop_f - prop_m; positive leans female
  BiasDirection direction = BiasDirection::balanced;
  bool no_gendered_terms = false;
};

// Score from pre-counted mention occurrences.
BiasReport ibs_from_counts(std::size_t freq_m, std::size_t freq_f,
                           double balance_epsilon = 0.02);

// Score over tweets: counts every gendered mention (terms, names, pronouns,
// honorifics) the lexicon detects.
BiasReport ibs(const std::vector<Tweet>& texts, const GenderLexicon& lexicon,
               double balance_epsilon = 0.02);

// One row over the full corpus ("Dataset") followed by one row per summary,
// in LexRank, LSA, Community+LexRank, EquiSumm order.
std::vector<BiasReport> compare_methods(const Corpus& corpus, const GenderLexicon& lexicon,
                                        const std::vector<Summary>& summaries,
                                        double balance_epsilon = 0.02);

}  // namespace equisumm
