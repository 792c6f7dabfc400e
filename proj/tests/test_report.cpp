// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/report.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "sylco/statistics.hpp"

#if defined(__unix__)
#include <sys/wait.h>
#endif

namespace {

using namespace sylco;
namespace fs = std::filesystem;

const Inventory& persian() {
  static const Inventory inv = Inventory::defaultPersian();
  return inv;
}

// A lexicon exercising every reject class. Data-line map:
//   2 ok (del.dar, freq 2)    3 malformed columns   4 ok (zud.ræs, freq 1)
//   5 malformed tokenFreq     6 untokenizable       7 not CVC.CVC
//   8 unsyllabifiable         10 ok (keb.rit, freq 4)
const char* kMixedLexicon =
    "# fixture\n"
    "delhistory\tdel.dar\t2\n"
    "twocolumns\tzud.ræs\n"
    "zudras\tzud.ræs\t1\n"
    "badfreq\tdel.dar\t-3\n"
    "untok\tdelQdar\t1\n"
    "threesyll\tda.de.yar\t1\n"
    "vowelinit\tælam\t1\n"
    "\n"
    "kebrit\tkeb.rit\t4\n";

LexiconReadResult mixedLexicon() {
  std::istringstream in(kMixedLexicon);
  return readLexicon(in);
}

fs::path freshDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sylco_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<std::string>> csvRows(const fs::path& p) {
  // fixture files contain no quoted fields, so a plain split is enough
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

TEST_SUITE_BEGIN("report");

TEST_CASE("parseWeightingSelect") {
  using report::WeightingSelect;
  CHECK(report::parseWeightingSelect("type") == WeightingSelect::Type);
  CHECK(report::parseWeightingSelect("token") == WeightingSelect::Token);
  CHECK(report::parseWeightingSelect("both") == WeightingSelect::Both);
  CHECK(!report::parseWeightingSelect("Type").has_value());
  CHECK(!report::parseWeightingSelect("").has_value());
  CHECK(!report::parseWeightingSelect("types").has_value());
}

TEST_CASE("formatReal is fixed, six-digit, and never signs a zero") {
  CHECK(report::formatReal(0.0) == "0.000000");
  CHECK(report::formatReal(-0.0) == "0.000000");
  CHECK(report::formatReal(-1e-9) == "0.000000");
  CHECK(report::formatReal(2.0) == "2.000000");
  CHECK(report::formatReal(-4.0) == "-4.000000");
  CHECK(report::formatReal(-1.5) == "-1.500000");
  CHECK(report::formatReal(0.1234567) == "0.123457");
  CHECK(report::formatReal(0.1234561) == "0.123456");
  CHECK(report::formatReal(1.0 / 3.0) == "0.333333");
}

TEST_CASE("runPipeline accounts for every data row exactly once") {
  const auto result = report::runPipeline(persian(), mixedLexicon());
  CHECK(result.inputRows == 8);
  CHECK(result.analyzed == 3);
  REQUIRE(result.rejects.size() == 5);
  CHECK(result.analyzed + result.rejects.size() == result.inputRows);

  // sorted by source line, with structural rejects interleaved
  const std::vector<std::size_t> lines = {3, 5, 6, 7, 8};
  const std::vector<std::string> reasons = {
      "expected 3 tab-separated columns but got 2",
      "tokenFreq is not a non-negative integer", "untokenizable",
      "not CVC.CVC", "unsyllabifiable"};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(result.rejects[i].line == lines[i]);
    CHECK(result.rejects[i].reason == reasons[i]);
  }
  CHECK(result.rejects[2].orthography == "untok");
  CHECK(result.rejects[0].orthography.empty());  // malformed: no parsed row

  CHECK(result.table.grandTotal(Weighting::Type) == 3);
  CHECK(result.table.grandTotal(Weighting::Token) == 7);
}

TEST_CASE("writeAnalysis emits the whole bundle") {
  const auto pipeline = report::runPipeline(persian(), mixedLexicon());
  const fs::path dir = freshDir("analysis_both");
  report::writeAnalysis(pipeline, dir.string(), report::WeightingSelect::Both);

  for (const char* name :
       {"slope_histogram_type.csv", "slope_histogram_token.csv",
        "positional_type.csv", "positional_token.csv", "pmi_matrix_type.csv",
        "pmi_matrix_token.csv", "pmi_by_slope.csv", "rejects.csv",
        "summary.json"}) {
    CHECK(fs::exists(dir / name));
  }

  SUBCASE("histogram rows mirror slopeHistogram") {
    for (Weighting w : {Weighting::Type, Weighting::Token}) {
      const auto rows = csvRows(
          dir / (w == Weighting::Type ? "slope_histogram_type.csv"
                                      : "slope_histogram_token.csv"));
      REQUIRE(rows.size() == 10);  // header + 9 fixed buckets
      CHECK(rows[0] == std::vector<std::string>{"slope", "count"});
      const SlopeHistogram hist = slopeHistogram(pipeline.table, w);
      for (int s = -4; s <= 4; ++s) {
        CHECK(rows[s + 5][0] == std::to_string(s));
        CHECK(rows[s + 5][1] == std::to_string(hist.at(s)));
      }
    }
  }

  SUBCASE("positional rows are level-ordered and match the distribution") {
    const auto rows = csvRows(dir / "positional_type.csv");
    REQUIRE(rows.size() == 6);
    const std::vector<std::string> labels = {"PL", "AF", "FR", "NA", "LI"};
    const auto coda =
        positionalDistribution(pipeline.table, Position::Coda,
                               Weighting::Type);
    const auto onset =
        positionalDistribution(pipeline.table, Position::Onset,
                               Weighting::Type);
    for (int i = 0; i < 5; ++i) {
      CHECK(rows[i + 1][0] == labels[i]);
      CHECK(rows[i + 1][1] == report::formatReal(coda[i]));
      CHECK(rows[i + 1][2] == report::formatReal(onset[i]));
    }
    // fixture has codas {l, d, b}, onsets {d, r, r}
    CHECK(rows[1][1] == "0.666667");  // PL coda 2/3
    CHECK(rows[5][2] == "0.666667");  // LI onset 2/3
  }

  SUBCASE("pmi matrix rows match pmiMatrix, undefined cells stay empty") {
    const auto rows = csvRows(dir / "pmi_matrix_type.csv");
    const auto cells =
        pmiMatrix(pipeline.table, Granularity::Category, Weighting::Type);
    REQUIRE(rows.size() == cells.size() + 1);
    CHECK(rows[0] == std::vector<std::string>{"coda", "onset", "slope",
                                              "count", "pmi", "defined"});
    int undefined = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& row = rows[i + 1];
      REQUIRE(row.size() == 6);
      CHECK(row[0] == cells[i].coda);
      CHECK(row[1] == cells[i].onset);
      CHECK(row[2] == std::to_string(cells[i].slope));
      CHECK(row[3] == std::to_string(cells[i].count));
      if (cells[i].pmi.defined) {
        CHECK(row[4] == report::formatReal(cells[i].pmi.value));
        CHECK(row[5] == "true");
      } else {
        CHECK(row[4].empty());
        CHECK(row[5] == "false");
        ++undefined;
      }
    }
    // coda categories {PL, LI} x onset categories {PL, LI}: the two
    // diagonal pairs never co-occur in the fixture
    CHECK(undefined == 2);
    // spot value: (PL coda, LI onset) joint 2, marginals 2 and 2, N 3
    bool found = false;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].coda == "PL" && cells[i].onset == "LI") {
        CHECK(rows[i + 1][4] == report::formatReal(std::log2(1.5)));
        found = true;
      }
    }
    CHECK(found);
  }

  SUBCASE("pmi_by_slope.csv carries both weightings") {
    const auto rows = csvRows(dir / "pmi_by_slope.csv");
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == std::vector<std::string>{"weighting", "slope",
                                              "mean_pmi", "weight"});
    std::map<std::string, int> perWeighting;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      REQUIRE(rows[i].size() == 4);
      perWeighting[rows[i][0]] += 1;
      const auto by = pmiBySlope(pipeline.table,
                                 rows[i][0] == "type" ? Weighting::Type
                                                      : Weighting::Token);
      const auto& agg = by.at(std::stoi(rows[i][1]));
      CHECK(rows[i][2] == report::formatReal(agg.meanPmi));
      CHECK(rows[i][3] == std::to_string(agg.weight));
    }
    CHECK(perWeighting["type"] == 2);   // slopes -4 and +4
    CHECK(perWeighting["token"] == 2);
  }

  SUBCASE("rejects.csv lists every reject in line order") {
    const auto rows = csvRows(dir / "rejects.csv");
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"line", "orthography",
                                              "reason"});
    CHECK(rows[1][0] == "3");
    CHECK(rows[3][1] == "untok");
    CHECK(rows[4][2] == "not CVC.CVC");
  }

  SUBCASE("summary.json carries counts and trends") {
    const nlohmann::json j = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(j.at("input_rows") == 8);
    CHECK(j.at("analyzed") == 3);
    CHECK(j.at("rejected") == 5);
    CHECK(j.at("type").at("grand_total") == 3);
    CHECK(j.at("token").at("grand_total") == 7);
    CHECK(j.at("type").at("undefined_pmi_cells") == 2);
    CHECK(j.at("type").at("histogram_trend").contains("slope"));
    // two defined slopes, so the PMI-by-slope trend line exists
    CHECK(!j.at("type").at("pmi_by_slope_trend").is_null());
  }
}

TEST_CASE("weighting selection limits the output files") {
  const auto pipeline = report::runPipeline(persian(), mixedLexicon());
  const fs::path dir = freshDir("analysis_type");
  report::writeAnalysis(pipeline, dir.string(), report::WeightingSelect::Type);
  CHECK(fs::exists(dir / "slope_histogram_type.csv"));
  CHECK(!fs::exists(dir / "slope_histogram_token.csv"));
  CHECK(!fs::exists(dir / "pmi_matrix_token.csv"));
  const nlohmann::json j = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(j.contains("type"));
  CHECK(!j.contains("token"));
}

TEST_CASE("a single-word corpus reports a lone zero-slope contact") {
  std::istringstream in("golriz\tgol.riz\t1\n");
  const auto pipeline = report::runPipeline(persian(), readLexicon(in));
  const fs::path dir = freshDir("analysis_single");
  report::writeAnalysis(pipeline, dir.string(), report::WeightingSelect::Type);
  const auto rows = csvRows(dir / "slope_histogram_type.csv");
  for (int s = -4; s <= 4; ++s) {
    CHECK(rows[s + 5][1] == (s == 0 ? "1" : "0"));
  }
  const auto pos = csvRows(dir / "positional_type.csv");
  CHECK(pos[5][1] == "1.000000");  // coda LI (the l of gol)
  CHECK(pos[5][2] == "1.000000");  // onset LI (the r of riz)
  const nlohmann::json j = nlohmann::json::parse(slurp(dir / "summary.json"));
  // a single observed slope cannot define a PMI-by-slope line
  CHECK(j.at("type").at("pmi_by_slope_trend").is_null());
}

TEST_CASE("writeAnalysis output is byte-stable across runs") {
  const auto pipeline = report::runPipeline(persian(), mixedLexicon());
  const fs::path a = freshDir("analysis_rep_a");
  const fs::path b = freshDir("analysis_rep_b");
  report::writeAnalysis(pipeline, a.string(), report::WeightingSelect::Both);
  report::writeAnalysis(pipeline, b.string(), report::WeightingSelect::Both);
  for (const auto& entry : fs::directory_iterator(a)) {
    const auto name = entry.path().filename();
    CHECK(slurp(entry.path()) == slurp(b / name));
  }
}

TEST_CASE("empty analyzable corpus refuses to write") {
  std::istringstream in("x\tdelQdar\t1\ny\tda.de.yar\t2\n");
  const auto pipeline = report::runPipeline(persian(), readLexicon(in));
  CHECK(pipeline.analyzed == 0);
  CHECK(pipeline.inputRows == 2);
  const fs::path dir = freshDir("analysis_empty");
  CHECK_THROWS_AS(report::writeAnalysis(pipeline, dir.string(),
                                        report::WeightingSelect::Both),
                  StatsError);
  CHECK(!fs::exists(dir / "summary.json"));
}

TEST_CASE("unwritable output directory raises IoError") {
  const fs::path dir = freshDir("analysis_blocked");
  std::ofstream(dir / "occupied").put('x');
  const auto pipeline = report::runPipeline(persian(), mixedLexicon());
  CHECK_THROWS_AS(
      report::writeAnalysis(pipeline, (dir / "occupied" / "sub").string(),
                            report::WeightingSelect::Both),
      IoError);
}

#if defined(__unix__)

int runCli(const std::string& args) {
  const std::string cmd = std::string(SYLCO_CLI_PATH) + " " + args +
                          " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

TEST_CASE("command line exit codes") {
  const fs::path dir = freshDir("cli");
  {
    std::ofstream out(dir / "mixed.tsv", std::ios::binary);
    out << kMixedLexicon;
  }
  {
    std::ofstream out(dir / "hopeless.tsv", std::ios::binary);
    out << "x\tdelQdar\t1\n";
  }

  SUBCASE("success paths exit 0") {
    CHECK(runCli("syllabify --lexicon " + (dir / "mixed.tsv").string()) == 0);
    CHECK(runCli("analyze --lexicon " + (dir / "mixed.tsv").string() +
                 " --out " + (dir / "out").string()) == 0);
    CHECK(runCli("repair tæd.ris") == 0);
    CHECK(runCli("generate --n 5 --seed 1") == 0);
  }
  SUBCASE("usage problems exit 1") {
    CHECK(runCli("") == 1);
    CHECK(runCli("bogus") == 1);
    CHECK(runCli("analyze --lexicon " + (dir / "mixed.tsv").string() +
                 " --out " + (dir / "out1").string() +
                 " --weighting sometimes") == 1);
    CHECK(runCli("syllabify") == 1);  // missing required --lexicon
    CHECK(runCli("generate --n 5 --mode custom-weights "
                 "--coda-weights 1,2,3 --onset-weights 1,1,1,1,1") == 1);
    CHECK(runCli("generate --n 5 --mode custom-weights "
                 "--coda-weights 0,0,0,0,0 --onset-weights 1,1,1,1,1") == 1);
    CHECK(runCli("generate --n 5 --mode upside-down") == 1);
  }
  SUBCASE("unreadable input exits 2") {
    CHECK(runCli("analyze --lexicon " + (dir / "no_such.tsv").string() +
                 " --out " + (dir / "out2").string()) == 2);
    CHECK(runCli("syllabify --lexicon " + (dir / "no_such.tsv").string()) ==
          2);
    CHECK(runCli("repair delQdar") == 2);   // untokenizable word
    CHECK(runCli("repair ælam") == 2);  // unsyllabifiable word
    CHECK(runCli("analyze --inventory " + (dir / "no_inv.json").string() +
                 " --lexicon " + (dir / "mixed.tsv").string() + " --out " +
                 (dir / "out3").string()) == 2);
  }
  SUBCASE("empty or unimprovable results exit 3") {
    CHECK(runCli("analyze --lexicon " + (dir / "hopeless.tsv").string() +
                 " --out " + (dir / "out4").string()) == 3);
    CHECK(runCli("syllabify --lexicon " + (dir / "hopeless.tsv").string()) ==
          3);
    CHECK(runCli("repair gol.riz") == 3);  // nothing exceeds the ceiling
  }
  SUBCASE("help exits 0") {
    CHECK(runCli("--help") == 0);
    CHECK(runCli("analyze --help") == 0);
  }
}

#endif  // __unix__

TEST_SUITE_END();

}  // namespace
