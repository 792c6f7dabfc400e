// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylco/contact_table.hpp"
#include "sylco/lexicon.hpp"
#include "sylco/statistics.hpp"

namespace sylco::report {

enum class WeightingSelect { Type, Token, Both };

std::optional<WeightingSelect> parseWeightingSelect(std::string_view text);

struct Reject {
  std::size_t line = 0;  // source line in the lexicon file
  std::string orthography;
  std::string reason;
};

struct PipelineResult {
  ContactTable table;
  std::vector<Reject> rejects;
  std::size_t inputRows = 0;  // data rows in the input (rejects + analyzed)
  std::size_t analyzed = 0;   // CVC.CVC rows counted into the table
};

// Runs tokenize -> syllabify -> CVC.CVC filter -> count over a parsed
// lexicon; structurally malformed rows join the rejects list.
PipelineResult runPipeline(const Inventory& inv,
                           const LexiconReadResult& lexicon);

// Fixed 6-decimal rendering used for every real number in the output
// files, keeping them byte-stable across runs.
std::string formatReal(double v);

// Writes the analysis bundle into outDir:
//   slope_histogram_{type,token}.csv   slope,count
//   positional_{type,token}.csv        category,coda,onset
//   pmi_matrix_{type,token}.csv        coda,onset,slope,count,pmi,defined
//   pmi_by_slope.csv                   weighting,slope,mean_pmi,weight
//   rejects.csv                        line,orthography,reason
//   summary.json                       counts, trend lines, undefined cells
// Only the selected weightings are written. All rows are emitted in
// sorted key order. Throws StatsError when no CVC.CVC word was analyzed
// and IoError when outDir is unwritable.
void writeAnalysis(const PipelineResult& pipeline, const std::string& outDir,
                   WeightingSelect select);

}  // namespace sylco::report
