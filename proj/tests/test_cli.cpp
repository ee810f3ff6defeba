#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(EQUISUMM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run_cli_env(const std::string& env, const std::string& args) {
  const std::string cmd =
      env + " " + std::string(EQUISUMM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::size_t line_count(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("equisumm_cli_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

const std::string kFixture = std::string(EQUISUMM_FIXTURES_DIR) + "/metoo_mini.jsonl";
const std::string kData = EQUISUMM_DATA_DIR;

std::string lexicon_sets() {
  return " --set lexicon.male_terms=" + kData + "/lexicon/male_terms.txt" +
         " --set lexicon.female_terms=" + kData + "/lexicon/female_terms.txt";
}

}  // namespace

TEST_CASE("bare invocation prints help and exits with usage status") {
  RunResult r = run_cli("");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("Usage") != std::string::npos);
}

TEST_CASE("--help exits cleanly") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("summarize") != std::string::npos);
}

TEST_CASE("ingest --stats reports corpus shape") {
  RunResult r = run_cli("--input " + kFixture + " ingest --stats");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("tweets: 4") != std::string::npos);
  CHECK(r.output.find("tokens: ") != std::string::npos);
  CHECK(r.output.find("vocab: ") != std::string::npos);
  CHECK(r.output.find("dropped: 0") != std::string::npos);
}

TEST_CASE("runtime failures exit 1") {
  RunResult r = run_cli("--input /no/such/corpus.jsonl ingest");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("cannot open input file") != std::string::npos);
}

TEST_CASE("config mistakes exit 2") {
  RunResult unknown_key = run_cli("--set no.such.key=1 --input " + kFixture + " ingest");
  CHECK(unknown_key.exit_code == 2);
  CHECK(unknown_key.output.find("unknown config key") != std::string::npos);

  RunResult bad_set = run_cli("--set graph.threshold --input " + kFixture + " ingest");
  CHECK(bad_set.exit_code == 2);
  CHECK(bad_set.output.find("key=value") != std::string::npos);

  RunResult bad_range = run_cli("--set graph.threshold=7 --input " + kFixture + " ingest");
  CHECK(bad_range.exit_code == 2);

  RunResult no_input = run_cli("ingest");
  CHECK(no_input.exit_code == 2);
  CHECK(no_input.output.find("input.path is required") != std::string::npos);
}

TEST_CASE("a missing lexicon file exits 2 and names the path") {
  TempDir dir;
  RunResult r = run_cli("--input " + kFixture +
                        " --set lexicon.male_terms=/no/such/terms.txt"
                        " --set lexicon.female_terms=/no/such/other.txt"
                        " classify --labels " + dir.file("l.jsonl") +
                        " --dist " + dir.file("d.csv"));
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("lexicon file not found: /no/such/terms.txt") != std::string::npos);
}

TEST_CASE("classify writes labels and a distribution table") {
  TempDir dir;
  RunResult r = run_cli("--input " + kFixture + lexicon_sets() +
                        " classify --labels " + dir.file("labels.jsonl") +
                        " --dist " + dir.file("dist.csv"));
  REQUIRE(r.exit_code == 0);

  const std::string labels = read_file(dir.file("labels.jsonl"));
  CHECK(line_count(labels) == 4);
  CHECK(labels.find("\"id\":\"1\"") != std::string::npos);
  CHECK(labels.find("\"label\":\"M\"") != std::string::npos);
  CHECK(labels.find("\"label\":\"F\"") != std::string::npos);
  CHECK(labels.find("\"provenance\":\"rule\"") != std::string::npos);
  CHECK(labels.find("\"provenance\":\"centroid\"") != std::string::npos);

  const std::string dist = read_file(dir.file("dist.csv"));
  CHECK(dist.rfind("label,count,percent\n", 0) == 0);
  CHECK(dist.find("M,1,25.00") != std::string::npos);
  CHECK(dist.find("F,1,25.00") != std::string::npos);
  CHECK(dist.find("B,0,0.00") != std::string::npos);
  CHECK(dist.find("N,2,50.00") != std::string::npos);
}

TEST_CASE("summarize rejects unknown methods and formats") {
  RunResult bad_method = run_cli("--input " + kFixture + lexicon_sets() +
                                 " summarize --method bogus");
  CHECK(bad_method.exit_code == 2);
  CHECK(bad_method.output.find("unknown summary method") != std::string::npos);

  RunResult bad_format = run_cli("--input " + kFixture + lexicon_sets() +
                                 " summarize --method lexrank --format yaml");
  CHECK(bad_format.exit_code == 2);
  CHECK(bad_format.output.find("unknown summary format") != std::string::npos);

  RunResult no_method = run_cli("--input " + kFixture + " summarize");
  CHECK(no_method.exit_code == 2);
}

TEST_CASE("summarize writes ranked jsonl entries") {
  TempDir dir;
  RunResult r = run_cli("--input " + kFixture + lexicon_sets() +
                        " summarize --method equisumm --k 1 --out " +
                        dir.file("summary.jsonl"));
  REQUIRE(r.exit_code == 0);
  const std::string summary = read_file(dir.file("summary.jsonl"));
  CHECK(line_count(summary) >= 2);  // at least the M and F groups
  CHECK(summary.find("\"rank\":1") != std::string::npos);
  CHECK(summary.find("\"group\":\"M\"") != std::string::npos);
  CHECK(summary.find("\"group\":\"F\"") != std::string::npos);
  CHECK(summary.find("\"text\":") != std::string::npos);
}

TEST_CASE("summarize can emit plain text") {
  TempDir dir;
  RunResult r = run_cli("--input " + kFixture + lexicon_sets() +
                        " summarize --method equisumm --k 1 --format text --out " +
                        dir.file("summary.txt"));
  REQUIRE(r.exit_code == 0);
  const std::string text = read_file(dir.file("summary.txt"));
  CHECK(text.find("[M] ") != std::string::npos);
  CHECK(text.find("[F] ") != std::string::npos);
}

TEST_CASE("baseline methods accept an explicit budget") {
  TempDir dir;
  RunResult r = run_cli("--input " + kFixture + lexicon_sets() +
                        " summarize --method lexrank --budget 2 --out " +
                        dir.file("lr.jsonl"));
  REQUIRE(r.exit_code == 0);
  CHECK(line_count(read_file(dir.file("lr.jsonl"))) == 2);

  RunResult lsa = run_cli("--input " + kFixture +
                          " summarize --method lsa --budget 2 --out " +
                          dir.file("lsa.jsonl"));
  REQUIRE(lsa.exit_code == 0);
  CHECK(line_count(read_file(dir.file("lsa.jsonl"))) == 2);
}

TEST_CASE("evaluate writes the comparison table and is deterministic") {
  TempDir dir;
  const std::string base = "--input " + kFixture + lexicon_sets() +
                           " evaluate --out ";
  RunResult r1 = run_cli(base + dir.file("report1.csv") + " --svg " + dir.file("chart.svg") +
                         " --markdown " + dir.file("report.md"));
  REQUIRE(r1.exit_code == 0);
  RunResult r2 = run_cli(base + dir.file("report2.csv"));
  REQUIRE(r2.exit_code == 0);

  const std::string report1 = read_file(dir.file("report1.csv"));
  const std::string report2 = read_file(dir.file("report2.csv"));
  CHECK(report1 == report2);  // byte-identical across runs

  CHECK(report1.rfind("subject,G1,G2,score,direction", 0) == 0);
  CHECK(line_count(report1) == 6);  // header, dataset, four methods
  CHECK(report1.find("Dataset,") != std::string::npos);
  CHECK(report1.find("LexRank,") != std::string::npos);
  CHECK(report1.find("LSA,") != std::string::npos);
  CHECK(report1.find("Community+LexRank,") != std::string::npos);
  CHECK(report1.find("EquiSumm,") != std::string::npos);

  const std::string svg = read_file(dir.file("chart.svg"));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  const std::string md = read_file(dir.file("report.md"));
  CHECK(md.find("| Dataset") != std::string::npos);
  CHECK(md.find("G1") != std::string::npos);
}

TEST_CASE("graph dumps its edge list") {
  TempDir dir;
  RunResult r = run_cli("--input " + kFixture + " --set graph.threshold=0 graph --dump " +
                        dir.file("graph.csv"));
  REQUIRE(r.exit_code == 0);
  const std::string graph = read_file(dir.file("graph.csv"));
  CHECK(graph.rfind("src,dst,weight\n", 0) == 0);
  CHECK(line_count(graph) == 7);  // header + complete graph on 4 nodes
  CHECK(r.output.find("4 nodes, 6 edges") != std::string::npos);
}

TEST_CASE("dump-config prints the resolved settings") {
  RunResult defaults = run_cli("--dump-config");
  CHECK(defaults.exit_code == 0);
  CHECK(defaults.output.find("graph.threshold=0.4\n") != std::string::npos);
  CHECK(defaults.output.find("summary.k=5\n") != std::string::npos);

  RunResult overridden = run_cli("--set graph.threshold=0.25 --dump-config");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.output.find("graph.threshold=0.25\n") != std::string::npos);
}

TEST_CASE("config file, environment and flags compose in priority order") {
  TempDir dir;
  {
    std::ofstream conf(dir.file("run.conf"));
    conf << "summary.k=3\ngraph.threshold=0.2\n";
  }

  // file via --config
  RunResult from_file = run_cli("--config " + dir.file("run.conf") + " --dump-config");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output.find("summary.k=3\n") != std::string::npos);

  // file via environment
  RunResult from_env =
      run_cli_env("EQUISUMM_CONFIG=" + dir.file("run.conf"), "--dump-config");
  CHECK(from_env.exit_code == 0);
  CHECK(from_env.output.find("summary.k=3\n") != std::string::npos);

  // --set beats the file
  RunResult set_wins = run_cli("--config " + dir.file("run.conf") +
                               " --set summary.k=9 --dump-config");
  CHECK(set_wins.output.find("summary.k=9\n") != std::string::npos);

  // a direct flag beats --set
  RunResult flag_wins = run_cli("--set input.path=/ignored.jsonl --input " + kFixture +
                                " ingest");
  CHECK(flag_wins.exit_code == 0);
  CHECK(flag_wins.output.find("tweets: 4") != std::string::npos);
}
