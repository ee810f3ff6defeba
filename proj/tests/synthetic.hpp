#pragma once

// Seeded corpus generator for property and end-to-end tests.  Two term
// populations share a strong common vocabulary (so the similarity graph is
// connected and the majority population dominates global centrality) while
// each side carries its own gendered nouns; a small neutral slice uses a
// disjoint vocabulary and so stays out of every gender cluster.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "equisumm/corpus.hpp"
#include "equisumm/lexicon.hpp"

namespace synth {

struct Options {
  std::size_t n_tweets = 300;
  double male_share = 0.7;     // of the gendered tweets
  double neutral_share = 0.1;  // of all tweets
};

inline equisumm::GenderLexicon lexicon() {
  return equisumm::make_lexicon(
      {"men", "man", "husband", "brother", "father"},
      {"women", "woman", "wife", "sister", "mother"}, {}, {});
}

inline equisumm::Corpus make_corpus(std::uint32_t seed, const Options& options = {}) {
  static const std::array<const char*, 10> shared = {
      "metoo",   "movement", "story",  "people", "media",
      "society", "change",   "voices", "support", "online"};
  static const std::array<const char*, 1> male_topic = {"court"};
  static const std::array<const char*, 1> female_topic = {"survivor"};
  static const std::array<const char*, 2> male_varied = {"husband", "brother"};
  static const std::array<const char*, 2> female_varied = {"wife", "sister"};
  static const std::array<const char*, 8> neutral_pool = {
      "coffee", "morning", "traffic", "weather", "music", "football", "garden", "recipe"};

  std::mt19937 rng(seed);
  const auto n = options.n_tweets;
  const auto n_neutral = static_cast<std::size_t>(
      static_cast<double>(n) * options.neutral_share + 0.5);
  const std::size_t n_gendered = n - n_neutral;
  const auto n_male = static_cast<std::size_t>(
      static_cast<double>(n_gendered) * options.male_share + 0.5);
  const std::size_t n_female = n_gendered - n_male;

  enum class Kind { male, female, neutral };
  std::vector<Kind> kinds;
  kinds.insert(kinds.end(), n_male, Kind::male);
  kinds.insert(kinds.end(), n_female, Kind::female);
  kinds.insert(kinds.end(), n_neutral, Kind::neutral);
  std::shuffle(kinds.begin(), kinds.end(), rng);

  equisumm::Corpus corpus;
  corpus.source_path = "synthetic:" + std::to_string(seed);
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    std::vector<std::string> words;
    if (kinds[i] == Kind::neutral) {
      std::vector<std::string> pool(neutral_pool.begin(), neutral_pool.end());
      std::shuffle(pool.begin(), pool.end(), rng);
      words.assign(pool.begin(), pool.begin() + 6);
    } else {
      words.assign(shared.begin(), shared.end());
      if (kinds[i] == Kind::male) {
        words.insert(words.end(), male_topic.begin(), male_topic.end());
        words.emplace_back("men");
        words.emplace_back(male_varied[rng() % male_varied.size()]);
      } else {
        words.insert(words.end(), female_topic.begin(), female_topic.end());
        words.emplace_back("women");
        words.emplace_back(female_varied[rng() % female_varied.size()]);
      }
      std::shuffle(words.begin(), words.end(), rng);
    }

    std::string text;
    for (const auto& w : words) {
      if (!text.empty()) text += ' ';
      text += w;
    }
    char id[32];
    std::snprintf(id, sizeof id, "t%04u", static_cast<unsigned>(i + 1));
    corpus.tweets.push_back(equisumm::make_tweet(id, text));
    corpus.token_count += words.size();
  }
  return corpus;
}

}  // namespace synth
