#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <equisumm/corpus.hpp>
#include <equisumm/embedding.hpp>
#include <equisumm/errors.hpp>
#include <equisumm/linalg.hpp>

#include <cmath>
#include <string>
#include <vector>

using namespace equisumm;

namespace {

Corpus corpus_of(const std::vector<std::string>& texts) {
  Corpus c;
  c.source_path = "inline";
  for (std::size_t i = 0; i < texts.size(); ++i) {
    Tweet t = make_tweet("d" + std::to_string(i), texts[i]);
    c.token_count += t.tokens.size();
    c.tweets.push_back(std::move(t));
  }
  return c;
}

}  // namespace

TEST_CASE("provider kind names round-trip") {
  CHECK(to_string(ProviderKind::tfidf) == std::string("tfidf"));
  CHECK(to_string(ProviderKind::http) == std::string("http"));
  CHECK(parse_provider_kind("tfidf") == ProviderKind::tfidf);
  CHECK(parse_provider_kind("http") == ProviderKind::http);
  CHECK(!parse_provider_kind("word2vec").has_value());
}

TEST_CASE("build_tfidf sorts the vocabulary and sizes the matrix") {
  Corpus c = corpus_of({"b a", "c a"});
  TfidfModel m = build_tfidf(c);
  CHECK(m.vocab == std::vector<std::string>{"a", "b", "c"});
  CHECK(m.weights.rows() == 2);
  CHECK(m.weights.cols() == 3);
}

TEST_CASE("build_tfidf weights follow tf times smoothed idf") {
  // one document, two distinct terms: idf = ln(2/2) + 1 = 1 for both
  Corpus single = corpus_of({"a b"});
  TfidfModel m1 = build_tfidf(single);
  CHECK(m1.weights(0, 0) == doctest::Approx(1.0));
  CHECK(m1.weights(0, 1) == doctest::Approx(1.0));

  // term repeated in one doc out of two: tf scales, idf discriminates
  Corpus two = corpus_of({"a a b", "b"});
  TfidfModel m2 = build_tfidf(two);
  const double idf_a = std::log(3.0 / 2.0) + 1.0;  // df = 1 of N = 2
  const double idf_b = std::log(3.0 / 3.0) + 1.0;  // df = 2 of N = 2
  CHECK(m2.weights(0, 0) == doctest::Approx(2.0 * idf_a));
  CHECK(m2.weights(0, 1) == doctest::Approx(1.0 * idf_b));
  CHECK(m2.weights(1, 0) == doctest::Approx(0.0));
  CHECK(m2.weights(1, 1) == doctest::Approx(1.0 * idf_b));
}

TEST_CASE("build_tfidf rejects an empty corpus") {
  Corpus empty;
  CHECK_THROWS_AS(build_tfidf(empty), EmptyCorpusError);
}

TEST_CASE("tfidf_embed returns unit rows in corpus order") {
  Corpus c = corpus_of({"a b", "b c c"});
  EmbeddingSet e = tfidf_embed(c);
  CHECK(e.ids == std::vector<std::string>{"d0", "d1"});
  CHECK(e.size() == 2);
  CHECK(e.dim() == 3);
  CHECK(rows_unit_norm(e.vectors));

  // first row is (idf_a, idf_b, 0) scaled to unit length
  const double idf_a = std::log(3.0 / 2.0) + 1.0;
  const double idf_b = 1.0;
  const double norm = std::sqrt(idf_a * idf_a + idf_b * idf_b);
  CHECK(e.vectors(0, 0) == doctest::Approx(idf_a / norm));
  CHECK(e.vectors(0, 1) == doctest::Approx(idf_b / norm));
  CHECK(e.vectors(0, 2) == doctest::Approx(0.0));
}

TEST_CASE("identical texts embed identically, disjoint texts orthogonally") {
  Corpus c = corpus_of({"same words here", "same words here", "other stuff"});
  EmbeddingSet e = tfidf_embed(c);
  CHECK(cosine(e.vectors.row(0), e.vectors.row(1)) == doctest::Approx(1.0));
  CHECK(cosine(e.vectors.row(0), e.vectors.row(2)) == doctest::Approx(0.0));
}

TEST_CASE("row_of and vector_for look up by id") {
  Corpus c = corpus_of({"a", "b"});
  EmbeddingSet e = tfidf_embed(c);
  CHECK(e.row_of("d1") == 1);
  CHECK(e.vector_for("d1") == e.vectors.row(1));
  CHECK_THROWS_AS(e.row_of("nope"), std::out_of_range);
}

TEST_CASE("subset keeps the requested ids in the requested order") {
  Corpus c = corpus_of({"a", "b", "c"});
  EmbeddingSet e = tfidf_embed(c);
  EmbeddingSet s = e.subset({"d2", "d0"});
  CHECK(s.ids == std::vector<std::string>{"d2", "d0"});
  CHECK(s.vectors.row(0) == e.vectors.row(2));
  CHECK(s.vectors.row(1) == e.vectors.row(0));
  CHECK_THROWS_AS(e.subset({"missing"}), std::out_of_range);
}

TEST_CASE("embed_all with the tfidf provider matches tfidf_embed") {
  Corpus c = corpus_of({"x y", "y z"});
  ProviderConfig cfg;  // defaults to tfidf
  EmbeddingSet a = embed_all(c, cfg);
  EmbeddingSet b = tfidf_embed(c);
  CHECK(a.ids == b.ids);
  CHECK(a.vectors == b.vectors);
}
