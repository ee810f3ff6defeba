#include "equisumm/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>

#include "equisumm/errors.hpp"

namespace equisumm {

const char* to_string(GenderLabel label) {
  switch (label) {
    case GenderLabel::M: return "M";
    case GenderLabel::F: return "F";
    case GenderLabel::B: return "B";
    case GenderLabel::N: return "N";
  }
  return "?";
}

std::optional<GenderLabel> parse_gender_label(std::string_view s) {
  if (s == "M") return GenderLabel::M;
  if (s == "F") return GenderLabel::F;
  if (s == "B") return GenderLabel::B;
  if (s == "N") return GenderLabel::N;
  return std::nullopt;
}

const char* to_string(MentionSide side) {
  return side == MentionSide::male ? "male" : "female";
}

const char* to_string(MentionKind kind) {
  switch (kind) {
    case MentionKind::term: return "term";
    case MentionKind::name: return "name";
    case MentionKind::pronoun: return "pronoun";
    case MentionKind::honorific: return "honorific";
  }
  return "?";
}

namespace {

std::string lowercase_ascii(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::set<std::string> load_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#') continue;
    words.insert(lowercase_ascii(entry));
  }
  return words;
}

void validate_lexicon(const GenderLexicon& lex) {
  if (lex.male_terms.empty() && lex.female_terms.empty()) {
    throw EmptyLexiconError("both term lists are empty");
  }
  std::vector<std::string> overlap;
  std::set_intersection(lex.male_terms.begin(), lex.male_terms.end(),
                        lex.female_terms.begin(), lex.female_terms.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) throw OverlappingEntryError(std::move(overlap));
}

std::map<std::string, GenderLabel> build_honorifics(const LexiconOptions& options) {
  std::map<std::string, GenderLabel> honorifics;
  for (const auto& h : options.male_honorifics) {
    if (!h.empty()) honorifics[lowercase_ascii(h)] = GenderLabel::M;
  }
  for (const auto& h : options.female_honorifics) {
    if (!h.empty()) honorifics[lowercase_ascii(h)] = GenderLabel::F;
  }
  return honorifics;
}

std::set<std::string> default_male_pronouns() {
  return {"he", "him", "his", "himself"};
}

std::set<std::string> default_female_pronouns() {
  return {"she", "her", "hers", "herself"};
}

std::set<std::string> to_set(const std::vector<std::string_view>& words) {
  std::set<std::string> out;
  for (auto w : words) out.emplace(w);
  return out;
}

// Lexicon entries are base forms; tolerate the possessive suffix the
// tokenizer keeps attached ("women's" -> "women").
bool in_list(const std::set<std::string>& words, const std::string& token) {
  if (words.count(token)) return true;
  if (token.size() > 2 && token.ends_with("'s")) {
    return words.count(token.substr(0, token.size() - 2)) > 0;
  }
  if (token.size() > 2 && token.ends_with("s'")) {
    return words.count(token.substr(0, token.size() - 1)) > 0;
  }
  return false;
}

// True when `word` (lowercase) occurs in `text` with title-case letters.
bool title_case_in_text(const std::string& text, const std::string& word) {
  if (word.empty()) return false;
  auto word_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '\'';
  };
  for (std::size_t i = 0; i + word.size() <= text.size(); ++i) {
    if (i > 0 && word_char(text[i - 1])) continue;
    const std::size_t end = i + word.size();
    if (end < text.size() && word_char(text[end]) && text[end] != '\'') continue;
    bool match = true;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (std::tolower(static_cast<unsigned char>(text[i + k])) !=
          static_cast<unsigned char>(word[k])) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    const bool head_upper = std::isupper(static_cast<unsigned char>(text[i]));
    bool tail_lower = true;
    for (std::size_t k = 1; k < word.size(); ++k) {
      if (std::isupper(static_cast<unsigned char>(text[i + k]))) {
        tail_lower = false;
        break;
      }
    }
    if (head_upper && tail_lower) return true;
  }
  return false;
}

}  // namespace

GenderLexicon make_lexicon(std::set<std::string> male_terms,
                           std::set<std::string> female_terms,
                           std::set<std::string> male_names,
                           std::set<std::string> female_names,
                           const LexiconOptions& options) {
  GenderLexicon lex;
  lex.male_terms = std::move(male_terms);
  lex.female_terms = std::move(female_terms);
  lex.male_names = std::move(male_names);
  lex.female_names = std::move(female_names);
  lex.male_pronouns = default_male_pronouns();
  lex.female_pronouns = default_female_pronouns();
  lex.honorifics = build_honorifics(options);
  validate_lexicon(lex);
  return lex;
}

GenderLexicon load_lexicon(const std::string& male_terms_path,
                           const std::string& female_terms_path,
                           const std::optional<std::string>& names_dir,
                           const LexiconOptions& options) {
  std::set<std::string> male_names;
  std::set<std::string> female_names;
  if (names_dir) {
    namespace fs = std::filesystem;
    male_names = load_word_list((fs::path(*names_dir) / "male_names.txt").string());
    female_names = load_word_list((fs::path(*names_dir) / "female_names.txt").string());
  } else {
    male_names = to_set(seed_male_names());
    female_names = to_set(seed_female_names());
  }
  return make_lexicon(load_word_list(male_terms_path), load_word_list(female_terms_path),
                      std::move(male_names), std::move(female_names), options);
}

std::vector<Mention> detect_mentions(const Tweet& tweet, const GenderLexicon& lex) {
  const auto& tokens = tweet.tokens;
  std::vector<bool> claimed(tokens.size(), false);
  std::vector<Mention> mentions;

  auto claim = [&](std::size_t i, MentionSide side, MentionKind kind) {
    if (claimed[i]) return;
    claimed[i] = true;
    mentions.push_back({i, side, kind});
  };

  // Honorifics first: the honorific is a mention, and it promotes the next
  // token to a name of the same side.
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = lex.honorifics.find(tokens[i]);
    if (it == lex.honorifics.end()) continue;
    const MentionSide side =
        it->second == GenderLabel::M ? MentionSide::male : MentionSide::female;
    claim(i, side, MentionKind::honorific);
    if (i + 1 < tokens.size()) claim(i + 1, side, MentionKind::name);
  }

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (claimed[i]) continue;
    const auto& tok = tokens[i];
    if (in_list(lex.male_terms, tok)) {
      claim(i, MentionSide::male, MentionKind::term);
    } else if (in_list(lex.female_terms, tok)) {
      claim(i, MentionSide::female, MentionKind::term);
    } else if (lex.male_pronouns.count(tok)) {
      claim(i, MentionSide::male, MentionKind::pronoun);
    } else if (lex.female_pronouns.count(tok)) {
      claim(i, MentionSide::female, MentionKind::pronoun);
    } else if (in_list(lex.male_names, tok) && title_case_in_text(tweet.text, tok)) {
      claim(i, MentionSide::male, MentionKind::name);
    } else if (in_list(lex.female_names, tok) && title_case_in_text(tweet.text, tok)) {
      claim(i, MentionSide::female, MentionKind::name);
    }
  }

  std::sort(mentions.begin(), mentions.end(),
            [](const Mention& a, const Mention& b) { return a.token_index < b.token_index; });
  return mentions;
}

RuleClassification classify_rule(const Tweet& tweet, const GenderLexicon& lex) {
  RuleClassification rc;
  for (const Mention& m : detect_mentions(tweet, lex)) {
    if (m.side == MentionSide::male) {
      ++rc.male_hits;
    } else {
      ++rc.female_hits;
    }
    rc.matched_terms.emplace_back(tweet.tokens[m.token_index], m.side);
  }

  if (rc.male_hits > 0 && rc.female_hits > 0) {
    rc.label = GenderLabel::B;
  } else if (rc.male_hits > rc.female_hits) {
    rc.label = GenderLabel::M;
  } else if (rc.female_hits > rc.male_hits) {
    rc.label = GenderLabel::F;
  } else {
    rc.label = GenderLabel::N;
  }

  const std::size_t total = rc.male_hits + rc.female_hits;
  if (rc.label == GenderLabel::B) {
    rc.confidence = 1.0;
  } else if (total > 0) {
    const auto diff = rc.male_hits > rc.female_hits ? rc.male_hits - rc.female_hits
                                                    : rc.female_hits - rc.male_hits;
    rc.confidence = static_cast<double>(diff) / static_cast<double>(total);
  } else {
    rc.confidence = 0.0;
  }
  return rc;
}

}  // namespace equisumm
