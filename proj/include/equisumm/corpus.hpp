#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace equisumm {

struct Tweet {
  std::string id;
  std::string text;       // original wire text
  std::string norm_text;  // normalized form, see normalize()
  std::vector<std::string> tokens;
};

/// Immutable once built; iteration order is file order.
struct Corpus {
  std::vector<Tweet> tweets;
  std::string source_path;
  std::size_t token_count = 0;

  std::size_t tweet_count() const { return tweets.size(); }
  std::size_t vocab_size() const;
  const Tweet* find(const std::string& id) const;

private:
  mutable std::unordered_map<std::string, std::size_t> index_;  // lazy id -> position
};

enum class CorpusFormat { jsonl, csv };

struct IngestWarning {
  std::size_t row = 0;  // 1-based data row
  std::string reason;
};

struct IngestResult {
  Corpus corpus;
  std::vector<IngestWarning> warnings;
};

/// Tweet text normalization: lowercase, URLs and @-mentions stripped, '#'
/// removed, typographic apostrophes mapped to ASCII, common Latin combining
/// sequences composed, whitespace collapsed. Total function, never throws.
std::string normalize(std::string_view text);

/// Split normalized text on non-alphanumeric boundaries; an apostrophe
/// surrounded by word characters stays inside the token ("women's").
std::vector<std::string> tokenize(std::string_view norm_text);

/// Build a Tweet from raw text (normalize + tokenize).
Tweet make_tweet(std::string id, std::string text);

/// Read a corpus from a JSONL or CSV file. Records whose text is empty after
/// normalization are dropped with a warning; structural problems throw.
IngestResult ingest(const std::string& path, CorpusFormat format,
                    const std::string& text_field = "text");

const char* to_string(CorpusFormat format);

}  // namespace equisumm
