#include "equisumm/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "equisumm/errors.hpp"
#include "json.hpp"

namespace equisumm {
namespace {

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_handle_char(char c) {
  return is_ascii_alnum(c) || c == '_';
}

bool starts_with_at(std::string_view s, std::size_t i, std::string_view prefix) {
  if (i + prefix.size() > s.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    char a = s[i + k];
    char b = prefix[k];
    if (a >= 'A' && a <= 'Z') a = static_cast<char>(a - 'A' + 'a');
    if (a != b) return false;
  }
  return true;
}

bool at_word_start(std::string_view s, std::size_t i) {
  return i == 0 || !is_handle_char(s[i - 1]);
}

// Decode one UTF-8 code point starting at i. On malformed input the single
// byte is returned verbatim (as its unsigned value) with length 1, so the
// function is total.
std::pair<char32_t, std::size_t> decode_utf8(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = (b0 & 0x1Fu) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
    if (cp >= 0x80) return {cp, 2};
  } else if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = (b0 & 0x0Fu) << 12 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
    if (cp >= 0x800) return {cp, 3};
  } else if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = (b0 & 0x07u) << 18 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                  (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
    if (cp >= 0x10000 && cp <= 0x10FFFF) return {cp, 4};
  }
  return {b0, 1};
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\r': case U'\n': case U'\f': case U'\v':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

char32_t lowercase_cp(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 uppercase block, skipping the multiplication sign
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  if (cp == 0x0178) return 0x00FF;  // Y with diaeresis
  return cp;
}

// Canonical composition for the Latin combining sequences that show up in
// tweet text. Full NFC needs the Unicode tables; this covers the precomposed
// Latin-1 repertoire, which is what the lexicons can match anyway.
char32_t compose_latin(char32_t base, char32_t mark) {
  struct Entry { char32_t base, mark, composed; };
  static constexpr Entry kTable[] = {
      {U'a', 0x0300, 0x00E0}, {U'a', 0x0301, 0x00E1}, {U'a', 0x0302, 0x00E2},
      {U'a', 0x0303, 0x00E3}, {U'a', 0x0308, 0x00E4}, {U'a', 0x030A, 0x00E5},
      {U'c', 0x0327, 0x00E7},
      {U'e', 0x0300, 0x00E8}, {U'e', 0x0301, 0x00E9}, {U'e', 0x0302, 0x00EA},
      {U'e', 0x0308, 0x00EB},
      {U'i', 0x0300, 0x00EC}, {U'i', 0x0301, 0x00ED}, {U'i', 0x0302, 0x00EE},
      {U'i', 0x0308, 0x00EF},
      {U'n', 0x0303, 0x00F1},
      {U'o', 0x0300, 0x00F2}, {U'o', 0x0301, 0x00F3}, {U'o', 0x0302, 0x00F4},
      {U'o', 0x0303, 0x00F5}, {U'o', 0x0308, 0x00F6},
      {U'u', 0x0300, 0x00F9}, {U'u', 0x0301, 0x00FA}, {U'u', 0x0302, 0x00FB},
      {U'u', 0x0308, 0x00FC},
      {U'y', 0x0301, 0x00FD}, {U'y', 0x0308, 0x00FF},
  };
  for (const auto& e : kTable) {
    if (e.base == base && e.mark == mark) return e.composed;
  }
  return 0;
}

// Strip URLs and @-handles at the byte level; both are ASCII by construction.
std::string strip_urls_and_mentions(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (at_word_start(text, i) &&
        (starts_with_at(text, i, "http://") || starts_with_at(text, i, "https://") ||
         starts_with_at(text, i, "www."))) {
      while (i < text.size() && !is_space_cp(static_cast<unsigned char>(text[i]))) ++i;
      continue;
    }
    if (text[i] == '@' && i + 1 < text.size() && is_handle_char(text[i + 1]) &&
        at_word_start(text, i)) {
      ++i;
      while (i < text.size() && is_handle_char(text[i])) ++i;
      continue;
    }
    out += text[i++];
  }
  return out;
}

}  // namespace

std::string normalize(std::string_view text) {
  const std::string stripped = strip_urls_and_mentions(text);

  // Decode, fold case, compose marks, classify whitespace.
  std::vector<char32_t> cps;
  cps.reserve(stripped.size());
  std::size_t i = 0;
  while (i < stripped.size()) {
    auto [cp, len] = decode_utf8(stripped, i);
    i += len;
    if (cp == U'#') continue;  // hashtag unwrap: keep the word
    if (cp == 0x2018 || cp == 0x2019) cp = U'\'';
    cp = lowercase_cp(cp);
    if (!cps.empty()) {
      if (char32_t composed = compose_latin(cps.back(), cp)) {
        cps.back() = composed;
        continue;
      }
    }
    cps.push_back(cp);
  }

  std::string out;
  out.reserve(stripped.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (is_space_cp(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    encode_utf8(cp, out);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view norm_text) {
  std::vector<std::string> tokens;
  std::string current;
  auto is_word_byte = [&](std::size_t i) {
    const char c = norm_text[i];
    return is_ascii_alnum(c) || static_cast<unsigned char>(c) >= 0x80;
  };
  for (std::size_t i = 0; i < norm_text.size(); ++i) {
    if (is_word_byte(i)) {
      current += norm_text[i];
    } else if (norm_text[i] == '\'' && !current.empty() && i + 1 < norm_text.size() &&
               is_word_byte(i + 1)) {
      current += '\'';
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Tweet make_tweet(std::string id, std::string text) {
  Tweet t;
  t.id = std::move(id);
  t.norm_text = normalize(text);
  t.tokens = tokenize(t.norm_text);
  t.text = std::move(text);
  return t;
}

std::size_t Corpus::vocab_size() const {
  std::unordered_set<std::string_view> vocab;
  for (const auto& t : tweets) {
    for (const auto& tok : t.tokens) vocab.insert(tok);
  }
  return vocab.size();
}

const Tweet* Corpus::find(const std::string& id) const {
  if (index_.size() != tweets.size()) {
    index_.clear();
    for (std::size_t i = 0; i < tweets.size(); ++i) index_.emplace(tweets[i].id, i);
  }
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &tweets[it->second];
}

const char* to_string(CorpusFormat format) {
  return format == CorpusFormat::jsonl ? "jsonl" : "csv";
}

namespace {

std::string pad_row_id(std::size_t row) {
  std::string digits = std::to_string(row);
  return std::string(digits.size() < 6 ? 6 - digits.size() : 0, '0') + digits;
}

struct RecordSink {
  Corpus corpus;
  std::vector<IngestWarning> warnings;
  std::unordered_set<std::string> seen_ids;

  void add(std::size_t row, std::string id, std::string text) {
    if (!seen_ids.insert(id).second) {
      throw MalformedRecordError(row, "duplicate id '" + id + "'");
    }
    Tweet t = make_tweet(std::move(id), std::move(text));
    if (t.norm_text.empty() || t.tokens.empty()) {
      warnings.push_back({row, "record '" + t.id + "' dropped: no text after normalization"});
      return;
    }
    corpus.token_count += t.tokens.size();
    corpus.tweets.push_back(std::move(t));
  }
};

void ingest_jsonl(std::istream& in, const std::string& text_field, RecordSink& sink) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t record_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw MalformedRecordError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!rec.is_object()) {
      throw MalformedRecordError(line_no, "expected one JSON object per line");
    }
    if (!rec.contains(text_field)) {
      throw MissingFieldError("record at row " + std::to_string(line_no) +
                              " is missing field '" + text_field + "'");
    }
    if (!rec[text_field].is_string()) {
      throw MalformedRecordError(line_no, "field '" + text_field + "' is not a string");
    }
    std::string id;
    if (rec.contains("id")) {
      const auto& idv = rec["id"];
      if (idv.is_string()) {
        id = idv.get<std::string>();
      } else if (idv.is_number_integer()) {
        id = std::to_string(idv.get<std::int64_t>());
      } else {
        throw MalformedRecordError(line_no, "field 'id' is neither string nor integer");
      }
    } else {
      id = pad_row_id(record_no);
    }
    sink.add(line_no, std::move(id), rec[text_field].get<std::string>());
    ++record_no;
  }
}

// RFC 4180 records; quoted fields may contain commas, quotes and newlines.
std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool any_data = false;
  std::size_t row = 1;

  auto end_field = [&]() {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&]() {
    end_field();
    records.push_back(std::move(record));
    record.clear();
    ++row;
  };

  char c;
  while (in.get(c)) {
    any_data = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty() && !field_was_quoted) {
          in_quotes = true;
          field_was_quoted = true;
        } else {
          throw MalformedRecordError(row, "stray quote inside unquoted field");
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (in.peek() == '\n') in.get(c);
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        if (field_was_quoted) {
          throw MalformedRecordError(row, "data after closing quote");
        }
        field += c;
        break;
    }
  }
  if (in_quotes) throw MalformedRecordError(row, "unterminated quoted field");
  if (!field.empty() || !record.empty() || field_was_quoted) end_record();
  if (any_data && records.empty()) records.push_back({""});
  return records;
}

void ingest_csv(std::istream& in, const std::string& text_field, RecordSink& sink) {
  const auto records = parse_csv(in);
  if (records.empty()) return;

  const auto& header = records.front();
  std::size_t text_col = header.size();
  std::size_t id_col = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == text_field) text_col = c;
    if (header[c] == "id") id_col = c;
  }
  if (text_col == header.size()) {
    throw MissingFieldError("csv header has no '" + text_field + "' column");
  }

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() == 1 && rec[0].empty()) continue;  // blank line
    if (rec.size() != header.size()) {
      throw MalformedRecordError(r, "expected " + std::to_string(header.size()) +
                                        " fields, got " + std::to_string(rec.size()));
    }
    std::string id = id_col < header.size() && !rec[id_col].empty()
                         ? rec[id_col]
                         : pad_row_id(r - 1);
    sink.add(r, std::move(id), rec[text_col]);
  }
}

}  // namespace

IngestResult ingest(const std::string& path, CorpusFormat format,
                    const std::string& text_field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);

  RecordSink sink;
  sink.corpus.source_path = path;
  if (format == CorpusFormat::jsonl) {
    ingest_jsonl(in, text_field, sink);
  } else {
    ingest_csv(in, text_field, sink);
  }
  if (sink.corpus.tweets.empty()) {
    throw EmptyCorpusError("no usable records in " + path);
  }
  return {std::move(sink.corpus), std::move(sink.warnings)};
}

}  // namespace equisumm
