#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equisumm/config.hpp"
#include "equisumm/errors.hpp"
#include "equisumm/pipeline.hpp"
#include "equisumm/reports.hpp"

namespace {

using namespace equisumm;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << content;
  if (!out) throw IoError("failed writing " + path);
}

struct Cli {
  std::string config_path;
  std::vector<std::string> sets;
  bool dump_config = false;

  std::string input;
  std::string input_format;
  std::string text_field;

  bool stats = false;

  std::string labels_path = "labels.jsonl";
  std::string dist_path = "dist.csv";

  std::string method;
  std::size_t k = 0;
  std::size_t budget = 0;
  std::string summary_out = "summary.jsonl";
  std::string summary_format = "jsonl";

  std::string report_out = "report.csv";
  std::string svg_out;
  std::string markdown_out;

  std::string graph_out = "graph.csv";
};

RunConfig resolve_config(const Cli& cli, const CLI::App& app) {
  RunConfig cfg;
  std::string config_path = cli.config_path;
  if (config_path.empty()) {
    if (const char* env = std::getenv("EQUISUMM_CONFIG")) config_path = env;
  }
  if (!config_path.empty()) apply_config_file(cfg, config_path);

  for (const std::string& kv : cli.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got \"" + kv + "\"");
    apply_kv(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }

  auto given = [&](const std::string& name) {
    const CLI::Option* opt = app.get_option_no_throw(name);
    if (opt != nullptr && opt->count() > 0) return true;
    for (const CLI::App* sub : app.get_subcommands()) {
      opt = sub->get_option_no_throw(name);
      if (opt != nullptr && opt->count() > 0) return true;
    }
    return false;
  };
  if (given("--input")) apply_kv(cfg, "input.path", cli.input);
  if (given("--input-format")) apply_kv(cfg, "input.format", cli.input_format);
  if (given("--text-field")) apply_kv(cfg, "input.text_field", cli.text_field);
  if (given("--k")) cfg.summary_k = cli.k;
  if (given("--budget")) cfg.summary_budget = cli.budget;

  validate(cfg);
  return cfg;
}

IngestResult load_corpus(const RunConfig& cfg) {
  if (cfg.input_path.empty()) throw ConfigError("input.path is required");
  return ingest(cfg.input_path, cfg.input_format, cfg.text_field);
}

SummarizeOptions summarize_options(const RunConfig& cfg) {
  SummarizeOptions options;
  options.k_per_group = cfg.summary_k;
  options.include_neutral = cfg.include_neutral;
  options.graph_threshold = cfg.graph_threshold;
  options.lexrank = cfg.lexrank;
  return options;
}

int cmd_ingest(const RunConfig& cfg, const Cli& cli) {
  const IngestResult result = load_corpus(cfg);
  if (cli.stats) {
    std::cout << stats_block(result);
  } else {
    std::cout << "tweets: " << result.corpus.tweet_count() << "\n";
  }
  return 0;
}

int cmd_classify(const RunConfig& cfg, const Cli& cli) {
  const IngestResult result = load_corpus(cfg);
  const GenderLexicon lexicon = load_lexicon_from(cfg);
  const EmbeddingSet embeddings = embed_all(result.corpus, cfg.embedding);
  const ClassifyResult classified =
      classify_corpus(result.corpus, embeddings, lexicon, cfg.classify);
  write_file(cli.labels_path, labels_jsonl(classified.assignments));
  write_file(cli.dist_path, distribution_csv(classified.assignments));
  std::cout << "classified " << classified.assignments.size() << " tweets -> "
            << cli.labels_path << ", " << cli.dist_path << "\n";
  return 0;
}

int cmd_summarize(const RunConfig& cfg, const Cli& cli) {
  const auto method = parse_summary_method(cli.method);
  if (!method) throw ConfigError("unknown summary method \"" + cli.method + "\"");
  if (cli.summary_format != "jsonl" && cli.summary_format != "text") {
    throw ConfigError("unknown summary format \"" + cli.summary_format + "\"");
  }

  const IngestResult result = load_corpus(cfg);
  const Corpus& corpus = result.corpus;

  std::optional<EmbeddingSet> embeddings;
  auto embedded = [&]() -> const EmbeddingSet& {
    if (!embeddings) embeddings = embed_all(corpus, cfg.embedding);
    return *embeddings;
  };
  auto equisumm_summary = [&]() {
    const GenderLexicon lexicon = load_lexicon_from(cfg);
    const ClassifyResult classified =
        classify_corpus(corpus, embedded(), lexicon, cfg.classify);
    return summarize_equisumm(classified.clusters, embedded(), summarize_options(cfg));
  };
  auto baseline_budget = [&]() {
    std::size_t budget =
        cfg.summary_budget > 0 ? cfg.summary_budget : equisumm_summary().entries.size();
    return std::min(budget, corpus.tweet_count());
  };

  Summary summary;
  switch (*method) {
    case SummaryMethod::equisumm:
      summary = equisumm_summary();
      break;
    case SummaryMethod::lexrank:
      summary = summarize_lexrank(embedded(), baseline_budget(), cfg.graph_threshold,
                                  cfg.lexrank);
      break;
    case SummaryMethod::community_lexrank:
      summary = summarize_community_lexrank(embedded(), baseline_budget(),
                                            cfg.graph_threshold, cfg.lexrank);
      break;
    case SummaryMethod::lsa:
      summary = summarize_lsa(corpus.tweets, baseline_budget());
      break;
  }

  write_file(cli.summary_out, cli.summary_format == "text" ? summary_text(summary, corpus)
                                                           : summary_jsonl(summary, corpus));
  std::cout << to_string(summary.method) << ": " << summary.entries.size() << " tweets -> "
            << cli.summary_out << "\n";
  return 0;
}

int cmd_evaluate(const RunConfig& cfg, const Cli& cli) {
  const IngestResult result = load_corpus(cfg);
  const GenderLexicon lexicon = load_lexicon_from(cfg);
  const EmbeddingSet embeddings = embed_all(result.corpus, cfg.embedding);
  const Evaluation eval = run_evaluation(result.corpus, embeddings, lexicon, cfg);

  write_file(cli.report_out, report_csv(eval.rows));
  if (!cli.svg_out.empty()) write_file(cli.svg_out, report_svg(eval.rows));
  if (!cli.markdown_out.empty()) {
    write_file(cli.markdown_out, report_markdown(eval.rows, eval.include_neutral));
  }
  std::cout << "evaluated " << eval.summaries.size() << " methods (budget " << eval.budget
            << ") -> " << cli.report_out << "\n";
  return 0;
}

int cmd_graph(const RunConfig& cfg, const Cli& cli) {
  const IngestResult result = load_corpus(cfg);
  const EmbeddingSet embeddings = embed_all(result.corpus, cfg.embedding);
  const SimilarityGraph graph = build_graph(embeddings, cfg.graph_threshold);
  write_file(cli.graph_out, graph_csv(graph));
  std::cout << graph.node_count() << " nodes, " << graph.edge_count << " edges -> "
            << cli.graph_out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gender-aware extractive tweet summarizer"};
  app.require_subcommand(0, 1);
  Cli cli;

  app.add_option("--config", cli.config_path, "key=value config file (else $EQUISUMM_CONFIG)");
  app.add_option("--set", cli.sets, "override one config entry, key=value (repeatable)");
  app.add_flag("--dump-config", cli.dump_config, "print the resolved config and exit");
  app.add_option("--input", cli.input, "input corpus path");
  app.add_option("--input-format", cli.input_format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  app.add_option("--text-field", cli.text_field, "field/column holding the tweet text");

  CLI::App* ingest_cmd = app.add_subcommand("ingest", "load a corpus and report its shape");
  ingest_cmd->fallthrough();
  ingest_cmd->add_flag("--stats", cli.stats, "print token/vocab statistics");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "label every tweet with the gender it discusses");
  classify_cmd->fallthrough();
  classify_cmd->add_option("--labels", cli.labels_path, "per-tweet label output (jsonl)");
  classify_cmd->add_option("--dist", cli.dist_path, "label distribution output (csv)");

  CLI::App* summarize_cmd = app.add_subcommand("summarize", "build an extractive summary");
  summarize_cmd->fallthrough();
  summarize_cmd
      ->add_option("--method", cli.method,
                   "equisumm, lexrank, lsa, or community_lexrank")
      ->required();
  summarize_cmd->add_option("--k", cli.k, "tweets per gender group");
  summarize_cmd->add_option("--budget", cli.budget,
                            "total tweets for baseline methods (0 = match equisumm)");
  summarize_cmd->add_option("--out", cli.summary_out, "summary output path");
  summarize_cmd->add_option("--format", cli.summary_format, "jsonl or text");

  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "compare all methods on one corpus");
  evaluate_cmd->fallthrough();
  evaluate_cmd->add_option("--out", cli.report_out, "comparison table output (csv)");
  evaluate_cmd->add_option("--svg", cli.svg_out, "also write a bar chart");
  evaluate_cmd->add_option("--markdown", cli.markdown_out, "also write a markdown table");

  CLI::App* graph_cmd = app.add_subcommand("graph", "dump the similarity graph");
  graph_cmd->fallthrough();
  graph_cmd->add_option("--dump", cli.graph_out, "edge list output (csv)");

  try {
    app.parse(argc, argv);

    const RunConfig cfg = resolve_config(cli, app);
    if (cli.dump_config) {
      std::cout << dump_config(cfg);
      return 0;
    }
    if (ingest_cmd->parsed()) return cmd_ingest(cfg, cli);
    if (classify_cmd->parsed()) return cmd_classify(cfg, cli);
    if (summarize_cmd->parsed()) return cmd_summarize(cfg, cli);
    if (evaluate_cmd->parsed()) return cmd_evaluate(cfg, cli);
    if (graph_cmd->parsed()) return cmd_graph(cfg, cli);

    std::cerr << app.help();
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
