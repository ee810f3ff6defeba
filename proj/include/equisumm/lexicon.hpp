#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equisumm/corpus.hpp"

namespace equisumm {

/// The four gender categories a tweet can discuss.
enum class GenderLabel { M, F, B, N };

const char* to_string(GenderLabel label);
std::optional<GenderLabel> parse_gender_label(std::string_view s);

enum class MentionSide { male, female };
enum class MentionKind { term, name, pronoun, honorific };

const char* to_string(MentionSide side);
const char* to_string(MentionKind kind);

struct Mention {
  std::size_t token_index;
  MentionSide side;
  MentionKind kind;
};

struct LexiconOptions {
  std::vector<std::string> male_honorifics{"mr", "mister"};
  std::vector<std::string> female_honorifics{"mrs", "ms", "miss"};
};

/// Word lists backing gendered-mention detection. Immutable after load;
/// all entries lowercase, the two term lists disjoint.
struct GenderLexicon {
  std::set<std::string> male_terms;
  std::set<std::string> female_terms;
  std::set<std::string> male_names;
  std::set<std::string> female_names;
  std::set<std::string> male_pronouns;
  std::set<std::string> female_pronouns;
  std::map<std::string, GenderLabel> honorifics;
};

/// Load term lists from newline-delimited files ('#' comments). Name lists
/// come from `names_dir` (male_names.txt / female_names.txt) when given,
/// otherwise from the bundled seed lists.
GenderLexicon load_lexicon(const std::string& male_terms_path,
                           const std::string& female_terms_path,
                           const std::optional<std::string>& names_dir = std::nullopt,
                           const LexiconOptions& options = {});

/// Assemble a lexicon from in-memory lists, enforcing the same invariants
/// as load_lexicon. Default pronouns are used when none are supplied.
GenderLexicon make_lexicon(std::set<std::string> male_terms,
                           std::set<std::string> female_terms,
                           std::set<std::string> male_names = {},
                           std::set<std::string> female_names = {},
                           const LexiconOptions& options = {});

struct RuleClassification {
  GenderLabel label = GenderLabel::N;
  std::size_t male_hits = 0;
  std::size_t female_hits = 0;
  double confidence = 0.0;
  std::vector<std::pair<std::string, MentionSide>> matched_terms;
};

/// Locate gendered mentions in a tokenized tweet. Each token index appears
/// at most once; a token right after a gendered honorific counts as a name
/// of that side even when it is not in the name lists. Name-list matches
/// require a title-case occurrence of the word in the original text.
std::vector<Mention> detect_mentions(const Tweet& tweet, const GenderLexicon& lex);

/// Rule stage of the gender classifier: co-occurrence of both sides wins
/// (B), otherwise the majority side, otherwise N.
RuleClassification classify_rule(const Tweet& tweet, const GenderLexicon& lex);

/// Bundled seed name lists (lowercase).
const std::vector<std::string_view>& seed_male_names();
const std::vector<std::string_view>& seed_female_names();

}  // namespace equisumm
