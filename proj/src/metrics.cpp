#include "equisumm/metrics.hpp"

#include <cmath>

#include "equisumm/errors.hpp"

namespace equisumm {

const char* to_string(BiasDirection direction) {
  switch (direction) {
    case BiasDirection::male: return "male";
    case BiasDirection::female: return "female";
    case BiasDirection::balanced: return "balanced";
  }
  return "?";
}

BiasReport ibs_from_counts(std::size_t freq_m, std::size_t freq_f, double balance_epsilon) {
  BiasReport report;
  report.freq_m = freq_m;
  report.freq_f = freq_f;
  const std::size_t total = freq_m + freq_f;
  if (total == 0) {
    report.no_gendered_terms = true;
    report.direction = BiasDirection::balanced;
    return report;
  }
  report.prop_m = static_cast<double>(freq_m) / static_cast<double>(total);
  report.prop_f = static_cast<double>(freq_f) / static_cast<double>(total);
  report.ibs = report.prop_f - report.prop_m;
  if (std::abs(report.ibs) < balance_epsilon) {
    report.direction = BiasDirection::balanced;
  } else if (report.ibs > 0) {
    report.direction = BiasDirection::female;
  } else {
    report.direction = BiasDirection::male;
  }
  return report;
}

BiasReport ibs(const std::vector<Tweet>& texts, const GenderLexicon& lexicon,
               double balance_epsilon) {
  std::size_t freq_m = 0;
  std::size_t freq_f = 0;
  for (const Tweet& tweet : texts) {
    for (const Mention& m : detect_mentions(tweet, lexicon)) {
      if (m.side == MentionSide::male) {
        ++freq_m;
      } else {
        ++freq_f;
      }
    }
  }
  return ibs_from_counts(freq_m, freq_f, balance_epsilon);
}

namespace {

const char* subject_name(SummaryMethod method) {
  switch (method) {
    case SummaryMethod::equisumm: return "EquiSumm";
    case SummaryMethod::lexrank: return "LexRank";
    case SummaryMethod::lsa: return "LSA";
    case SummaryMethod::community_lexrank: return "Community+LexRank";
  }
  return "?";
}

std::vector<Tweet> summary_tweets(const Corpus& corpus, const Summary& summary) {
  std::vector<Tweet> tweets;
  tweets.reserve(summary.entries.size());
  for (const SummaryEntry& entry : summary.entries) {
    const Tweet* tweet = corpus.find(entry.id);
    if (tweet == nullptr) {
      throw Error("summary refers to unknown tweet id " + entry.id);
    }
    tweets.push_back(*tweet);
  }
  return tweets;
}

}  // namespace

std::vector<BiasReport> compare_methods(const Corpus& corpus, const GenderLexicon& lexicon,
                                        const std::vector<Summary>& summaries,
                                        double balance_epsilon) {
  std::vector<BiasReport> rows;
  rows.reserve(summaries.size() + 1);

  BiasReport dataset = ibs(corpus.tweets, lexicon, balance_epsilon);
  dataset.subject = "Dataset";
  rows.push_back(std::move(dataset));

  for (SummaryMethod method : {SummaryMethod::lexrank, SummaryMethod::lsa,
                               SummaryMethod::community_lexrank, SummaryMethod::equisumm}) {
    for (const Summary& summary : summaries) {
      if (summary.method != method) continue;
      BiasReport row = ibs(summary_tweets(corpus, summary), lexicon, balance_epsilon);
      row.subject = subject_name(method);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace equisumm
