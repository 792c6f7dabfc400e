// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "sylco/error.hpp"

namespace sylco::report {
namespace {

bool wantType(WeightingSelect s) { return s != WeightingSelect::Token; }
bool wantToken(WeightingSelect s) { return s != WeightingSelect::Type; }

const char* weightingName(Weighting w) {
  return w == Weighting::Type ? "type" : "token";
}

std::string csvField(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& dir, const std::string& name)
      : path_((dir / name).string()), out_(path_, std::ios::binary) {
    if (!out_) throw IoError("cannot write '" + path_ + "'");
  }

  ~CsvFile() = default;

  template <typename T>
  CsvFile& operator<<(const T& v) {
    out_ << v;
    return *this;
  }

  void close() {
    out_.close();
    if (!out_) throw IoError("failed writing '" + path_ + "'");
  }

 private:
  std::string path_;
  std::ofstream out_;
};

void writeSlopeHistogram(const std::filesystem::path& dir, Weighting w,
                         const ContactTable& table) {
  CsvFile csv(dir, std::string("slope_histogram_") + weightingName(w) +
                       ".csv");
  csv << "slope,count\n";
  const SlopeHistogram hist = slopeHistogram(table, w);
  for (int s = -4; s <= 4; ++s) {
    csv << s << ',' << hist.at(s) << '\n';
  }
  csv.close();
}

void writePositional(const std::filesystem::path& dir, Weighting w,
                     const ContactTable& table) {
  CsvFile csv(dir, std::string("positional_") + weightingName(w) + ".csv");
  csv << "category,coda,onset\n";
  const auto coda = positionalDistribution(table, Position::Coda, w);
  const auto onset = positionalDistribution(table, Position::Onset, w);
  for (SonorityCategory c : kCategories) {
    csv << categoryLabel(c) << ',' << formatReal(coda[level(c) - 1]) << ','
        << formatReal(onset[level(c) - 1]) << '\n';
  }
  csv.close();
}

// Undefined cells keep an empty pmi field rather than a fake 0.
std::size_t writePmiMatrix(const std::filesystem::path& dir, Weighting w,
                           const ContactTable& table) {
  CsvFile csv(dir, std::string("pmi_matrix_") + weightingName(w) + ".csv");
  csv << "coda,onset,slope,count,pmi,defined\n";
  std::size_t undefined = 0;
  for (const PmiCell& cell : pmiMatrix(table, Granularity::Category, w)) {
    csv << cell.coda << ',' << cell.onset << ',' << cell.slope << ','
        << cell.count << ',';
    if (cell.pmi.defined) {
      csv << formatReal(cell.pmi.value) << ",true\n";
    } else {
      ++undefined;
      csv << ",false\n";
    }
  }
  csv.close();
  return undefined;
}

nlohmann::json trendJson(const TrendLine& t) {
  return {{"slope", t.slope}, {"intercept", t.intercept}};
}

nlohmann::json fitHistogramTrend(const ContactTable& table, Weighting w) {
  const SlopeHistogram hist = slopeHistogram(table, w);
  std::vector<TrendPoint> points;
  for (int s = -4; s <= 4; ++s) {
    points.push_back({static_cast<double>(s),
                      static_cast<double>(hist.at(s)), 1.0});
  }
  return trendJson(fitTrend(points));
}

nlohmann::json fitPmiTrend(const ContactTable& table, Weighting w) {
  std::vector<TrendPoint> points;
  for (const auto& [slope, agg] : pmiBySlope(table, w)) {
    points.push_back({static_cast<double>(slope), agg.meanPmi,
                      static_cast<double>(agg.weight)});
  }
  if (points.size() < 2) return nullptr;  // one observed slope: no line
  return trendJson(fitTrend(points));
}

}  // namespace

std::optional<WeightingSelect> parseWeightingSelect(std::string_view text) {
  if (text == "type") return WeightingSelect::Type;
  if (text == "token") return WeightingSelect::Token;
  if (text == "both") return WeightingSelect::Both;
  return std::nullopt;
}

PipelineResult runPipeline(const Inventory& inv,
                           const LexiconReadResult& lexicon) {
  std::vector<LexicalEntry> entries;
  entries.reserve(lexicon.rows.size());
  for (const LexiconRow& row : lexicon.rows) entries.push_back(row.entry);

  BuildResult built = buildContactTable(inv, entries);

  PipelineResult result{std::move(built.table), {}, lexicon.dataRows(),
                        lexicon.rows.size() - built.rejects.size()};
  for (const auto& [line, reason] : lexicon.malformed) {
    result.rejects.push_back({line, "", reason});
  }
  for (const EntryReject& r : built.rejects) {
    const LexiconRow& row = lexicon.rows[r.index];
    result.rejects.push_back({row.line, row.entry.orthography, r.reason});
  }
  std::sort(result.rejects.begin(), result.rejects.end(),
            [](const Reject& a, const Reject& b) { return a.line < b.line; });
  return result;
}

std::string formatReal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string out = buf;
  if (out == "-0.000000") out = "0.000000";
  return out;
}

void writeAnalysis(const PipelineResult& pipeline, const std::string& outDir,
                   WeightingSelect select) {
  if (pipeline.analyzed == 0) {
    throw StatsError("no CVC.CVC word to analyze (" +
                     std::to_string(pipeline.inputRows) + " input rows, " +
                     std::to_string(pipeline.rejects.size()) + " rejected)");
  }

  const std::filesystem::path dir(outDir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output dir '" + outDir + "'");

  nlohmann::json summary;
  summary["input_rows"] = pipeline.inputRows;
  summary["analyzed"] = pipeline.analyzed;
  summary["rejected"] = pipeline.rejects.size();

  std::vector<Weighting> selected;
  if (wantType(select)) selected.push_back(Weighting::Type);
  if (wantToken(select)) selected.push_back(Weighting::Token);

  for (Weighting w : selected) {
    writeSlopeHistogram(dir, w, pipeline.table);
    writePositional(dir, w, pipeline.table);
    const std::size_t undefined = writePmiMatrix(dir, w, pipeline.table);

    nlohmann::json& section = summary[weightingName(w)];
    section["grand_total"] = pipeline.table.grandTotal(w);
    section["undefined_pmi_cells"] = undefined;
    section["histogram_trend"] = fitHistogramTrend(pipeline.table, w);
    section["pmi_by_slope_trend"] = fitPmiTrend(pipeline.table, w);
  }

  {
    CsvFile csv(dir, "pmi_by_slope.csv");
    csv << "weighting,slope,mean_pmi,weight\n";
    for (Weighting w : selected) {
      for (const auto& [slope, agg] : pmiBySlope(pipeline.table, w)) {
        csv << weightingName(w) << ',' << slope << ','
            << formatReal(agg.meanPmi) << ',' << agg.weight << '\n';
      }
    }
    csv.close();
  }
  {
    CsvFile csv(dir, "rejects.csv");
    csv << "line,orthography,reason\n";
    for (const Reject& r : pipeline.rejects) {
      csv << r.line << ',' << csvField(r.orthography) << ','
          << csvField(r.reason) << '\n';
    }
    csv.close();
  }
  {
    const std::string path = (dir / "summary.json").string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << summary.dump(2) << '\n';
    out.close();
    if (!out) throw IoError("failed writing '" + path + "'");
  }
}

}  // namespace sylco::report
