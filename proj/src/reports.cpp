#include "equisumm/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "equisumm/errors.hpp"

namespace equisumm {

namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string signed_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.*f", digits, value);
  return buf;
}

const Tweet& tweet_or_throw(const Corpus& corpus, const std::string& id) {
  const Tweet* tweet = corpus.find(id);
  if (tweet == nullptr) throw Error("summary refers to unknown tweet id " + id);
  return *tweet;
}

}  // namespace

std::string stats_block(const IngestResult& result) {
  const Corpus& corpus = result.corpus;
  std::string out;
  out += "source: " + corpus.source_path + "\n";
  out += "tweets: " + std::to_string(corpus.tweet_count()) + "\n";
  out += "tokens: " + std::to_string(corpus.token_count) + "\n";
  out += "vocab: " + std::to_string(corpus.vocab_size()) + "\n";
  out += "dropped: " + std::to_string(result.warnings.size()) + "\n";
  for (const IngestWarning& w : result.warnings) {
    out += "  row " + std::to_string(w.row) + ": " + w.reason + "\n";
  }
  return out;
}

std::string labels_jsonl(const std::vector<ClassifiedTweet>& assignments) {
  std::string out;
  for (const ClassifiedTweet& ct : assignments) {
    nlohmann::ordered_json line;
    line["id"] = ct.id;
    line["label"] = to_string(ct.label);
    line["confidence"] = ct.confidence;
    line["provenance"] = to_string(ct.provenance);
    if (ct.similarity) {
      line["similarity"] = *ct.similarity;
    } else {
      line["similarity"] = nullptr;
    }
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string distribution_csv(const std::vector<ClassifiedTweet>& assignments) {
  std::map<GenderLabel, std::size_t> counts;
  for (const ClassifiedTweet& ct : assignments) ++counts[ct.label];
  const auto total = static_cast<double>(assignments.size());

  std::string out = "label,count,percent\n";
  for (GenderLabel label :
       {GenderLabel::M, GenderLabel::F, GenderLabel::B, GenderLabel::N}) {
    const std::size_t count = counts.count(label) ? counts.at(label) : 0;
    const double percent = total > 0 ? 100.0 * static_cast<double>(count) / total : 0.0;
    out += std::string(to_string(label)) + "," + std::to_string(count) + "," +
           fixed(percent, 2) + "\n";
  }
  return out;
}

std::string summary_jsonl(const Summary& summary, const Corpus& corpus) {
  std::string out;
  std::size_t rank = 0;
  for (const SummaryEntry& entry : summary.entries) {
    nlohmann::ordered_json line;
    line["rank"] = ++rank;
    line["id"] = entry.id;
    line["group"] = entry.group;
    line["score"] = entry.score;
    line["text"] = tweet_or_throw(corpus, entry.id).text;
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string summary_text(const Summary& summary, const Corpus& corpus) {
  std::string out;
  for (const SummaryEntry& entry : summary.entries) {
    out += "[" + entry.group + "] " + tweet_or_throw(corpus, entry.id).text + "\n";
  }
  return out;
}

std::string report_csv(const std::vector<BiasReport>& rows) {
  std::string out = "subject,G1,G2,score,direction\n";
  for (const BiasReport& row : rows) {
    out += row.subject + "," + fixed(row.prop_m, 3) + "," + fixed(row.prop_f, 3) + "," +
           signed_fixed(row.ibs, 3) + "," + to_string(row.direction) + "\n";
  }
  return out;
}

std::string report_markdown(const std::vector<BiasReport>& rows, bool include_neutral) {
  std::string out = "| subject | G1 | G2 | score | direction |\n";
  out += "| --- | --- | --- | --- | --- |\n";
  bool flagged = false;
  for (const BiasReport& row : rows) {
    out += "| " + row.subject + (row.no_gendered_terms ? "*" : "") + " | " +
           fixed(row.prop_m, 3) + " | " + fixed(row.prop_f, 3) + " | " +
           signed_fixed(row.ibs, 3) + " | " + to_string(row.direction) + " |\n";
    flagged = flagged || row.no_gendered_terms;
  }
  out += "\nG1 = male-term proportion, G2 = female-term proportion, score = G2 - G1.\n";
  out += std::string("Neutral cluster included in the per-group summary: ") +
         (include_neutral ? "yes" : "no") + ".\n";
  if (flagged) out += "\\* no gendered terms detected in this subject.\n";
  return out;
}

std::string report_svg(const std::vector<BiasReport>& rows) {
  const int width = 720;
  const int height = 360;
  const int left = 60;
  const int bottom = height - 60;
  const int top = 40;
  const double plot_h = bottom - top;
  const int group_w = rows.empty() ? 0 : (width - left - 20) / static_cast<int>(rows.size());
  const int bar_w = std::max(10, group_w / 3);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + std::to_string(width / 2) +
         "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
         "G1 (male) and G2 (female) proportions by subject</text>\n";

  // y axis with 0, 0.5, 1 gridlines
  for (double tick : {0.0, 0.5, 1.0}) {
    const int y = static_cast<int>(bottom - tick * plot_h);
    svg += "<line x1=\"" + std::to_string(left) + "\" y1=\"" + std::to_string(y) + "\" x2=\"" +
           std::to_string(width - 20) + "\" y2=\"" + std::to_string(y) +
           "\" stroke=\"#cccccc\"/>\n";
    svg += "<text x=\"" + std::to_string(left - 8) + "\" y=\"" + std::to_string(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           fixed(tick, 1) + "</text>\n";
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int x0 = left + static_cast<int>(i) * group_w + group_w / 6;
    const int h1 = static_cast<int>(rows[i].prop_m * plot_h);
    const int h2 = static_cast<int>(rows[i].prop_f * plot_h);
    svg += "<rect x=\"" + std::to_string(x0) + "\" y=\"" + std::to_string(bottom - h1) +
           "\" width=\"" + std::to_string(bar_w) + "\" height=\"" + std::to_string(h1) +
           "\" fill=\"#4477aa\"/>\n";
    svg += "<rect x=\"" + std::to_string(x0 + bar_w + 4) + "\" y=\"" +
           std::to_string(bottom - h2) + "\" width=\"" + std::to_string(bar_w) +
           "\" height=\"" + std::to_string(h2) + "\" fill=\"#ee6677\"/>\n";
    svg += "<text x=\"" + std::to_string(x0 + bar_w) + "\" y=\"" + std::to_string(bottom + 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           rows[i].subject + "</text>\n";
  }

  svg += "<rect x=\"" + std::to_string(left) + "\" y=\"" + std::to_string(height - 28) +
         "\" width=\"12\" height=\"12\" fill=\"#4477aa\"/>\n";
  svg += "<text x=\"" + std::to_string(left + 18) + "\" y=\"" + std::to_string(height - 17) +
         "\" font-family=\"sans-serif\" font-size=\"11\">G1 (male)</text>\n";
  svg += "<rect x=\"" + std::to_string(left + 100) + "\" y=\"" + std::to_string(height - 28) +
         "\" width=\"12\" height=\"12\" fill=\"#ee6677\"/>\n";
  svg += "<text x=\"" + std::to_string(left + 118) + "\" y=\"" + std::to_string(height - 17) +
         "\" font-family=\"sans-serif\" font-size=\"11\">G2 (female)</text>\n";
  svg += "</svg>\n";
  return svg;
}

std::string graph_csv(const SimilarityGraph& graph) {
  std::string out = "src,dst,weight\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    for (const auto& [j, w] : graph.neighbors[i]) {
      if (static_cast<std::size_t>(j) <= i) continue;
      out += graph.node_ids[i] + "," + graph.node_ids[static_cast<std::size_t>(j)] + "," +
             fixed(w, 6) + "\n";
    }
  }
  return out;
}

}  // namespace equisumm
