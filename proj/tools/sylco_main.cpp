// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0
//
// sylco: phonotactic analysis of syllable-contact sonority in phonemically
// transcribed lexicons. Subcommands: syllabify, analyze, repair, generate.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sylco/contact_table.hpp"
#include "sylco/generator.hpp"
#include "sylco/inventory.hpp"
#include "sylco/lexicon.hpp"
#include "sylco/repair.hpp"
#include "sylco/report.hpp"
#include "sylco/statistics.hpp"
#include "sylco/syllabifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitEmpty = 3;

sylco::Inventory loadInventoryArg(const std::string& path) {
  if (path.empty()) return sylco::Inventory::defaultPersian();
  return sylco::Inventory::fromJsonFile(path);
}

std::string slopeText(const std::optional<int>& s) {
  return s ? std::to_string(*s) : std::string("none");
}

int cmdSyllabify(const std::string& inventoryPath,
                 const std::string& lexiconPath) {
  const sylco::Inventory inv = loadInventoryArg(inventoryPath);
  const sylco::LexiconReadResult lexicon =
      sylco::readLexiconFile(lexiconPath);

  std::size_t ok = 0;
  for (const auto& [line, reason] : lexicon.malformed) {
    std::cerr << "line " << line << ": reject: " << reason << '\n';
  }
  for (const sylco::LexiconRow& row : lexicon.rows) {
    sylco::TokenizedWord tokens;
    sylco::SyllabifiedWord word;
    try {
      tokens = sylco::tokenizeWithHints(inv, row.entry.transcription);
      word = sylco::syllabify(inv, tokens.phonemes);
    } catch (const sylco::TokenizeError&) {
      std::cerr << "line " << row.line << ": " << row.entry.orthography
                << ": reject: untokenizable\n";
      continue;
    } catch (const sylco::SyllabifyError&) {
      std::cerr << "line " << row.line << ": " << row.entry.orthography
                << ": reject: unsyllabifiable\n";
      continue;
    }
    if (auto warning = sylco::checkBoundaryHints(word, tokens.boundaryHints)) {
      std::cerr << "line " << row.line << ": " << row.entry.orthography
                << ": warning: " << *warning << '\n';
    }
    std::cout << row.entry.orthography << '\t'
              << sylco::renderWord(inv, word) << '\t' << sylco::shapeOf(word)
              << '\n';
    ++ok;
  }
  if (ok == 0) {
    std::cerr << "no row syllabified (" << lexicon.dataRows()
              << " input rows)\n";
    return kExitEmpty;
  }
  return kExitOk;
}

int cmdAnalyze(const std::string& inventoryPath,
               const std::string& lexiconPath, const std::string& outDir,
               const std::string& weighting) {
  const auto select = sylco::report::parseWeightingSelect(weighting);
  if (!select) {
    std::cerr << "error: --weighting must be type, token, or both\n";
    return kExitUsage;
  }
  const sylco::Inventory inv = loadInventoryArg(inventoryPath);
  const sylco::LexiconReadResult lexicon =
      sylco::readLexiconFile(lexiconPath);
  const sylco::report::PipelineResult pipeline =
      sylco::report::runPipeline(inv, lexicon);
  sylco::report::writeAnalysis(pipeline, outDir, *select);
  std::cout << "analyzed " << pipeline.analyzed << " of "
            << pipeline.inputRows << " rows (" << pipeline.rejects.size()
            << " rejected); wrote " << outDir << '\n';
  return kExitOk;
}

int cmdRepair(const std::string& inventoryPath, const std::string& wordText,
              int maxSlope) {
  const sylco::Inventory inv = loadInventoryArg(inventoryPath);
  const sylco::SyllabifiedWord word =
      sylco::syllabify(inv, sylco::tokenize(inv, wordText));

  const auto suggestions = sylco::suggestRepairs(inv, word, maxSlope);
  for (const sylco::RepairOutcome& s : suggestions) {
    std::cout << sylco::describeStrategy(inv, s.strategy) << '\t'
              << sylco::renderWord(inv, s.surface) << '\t'
              << slopeText(s.oldSlope) << '\t' << slopeText(s.newSlope)
              << '\n';
  }
  return kExitOk;
}

int cmdGenerate(const std::string& inventoryPath, std::size_t n,
                std::uint64_t seed, const std::string& mode,
                const std::vector<double>& codaWeights,
                const std::vector<double>& onsetWeights) {
  const sylco::Inventory inv = loadInventoryArg(inventoryPath);
  sylco::GeneratorConfig config;
  if (mode == "custom-weights") {
    if (codaWeights.size() != 5 || onsetWeights.size() != 5) {
      throw sylco::GeneratorError(
          "custom-weights needs --coda-weights and --onset-weights with 5 "
          "values (Stop Affricate Fricative Nasal Liquid)");
    }
    std::copy(codaWeights.begin(), codaWeights.end(),
              config.codaWeights.begin());
    std::copy(onsetWeights.begin(), onsetWeights.end(),
              config.onsetWeights.begin());
  } else if (mode != "independent") {
    std::cerr << "error: --mode must be independent or custom-weights\n";
    return kExitUsage;
  }
  const auto entries = sylco::generateLexicon(inv, n, seed, config);
  sylco::writeLexicon(std::cout, entries);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "syllable-contact sonority analysis over phonemic lexicons"};
  app.require_subcommand(1);

  std::string inventoryPath;
  std::string lexiconPath;
  std::string outDir;
  std::string weighting = "both";
  std::string wordText;
  std::string mode = "independent";
  int maxSlope = 0;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::vector<double> codaWeights;
  std::vector<double> onsetWeights;

  auto* syl = app.add_subcommand(
      "syllabify", "syllabify every lexicon row and print shapes");
  syl->add_option("--inventory", inventoryPath,
                  "inventory JSON (default: bundled Persian)");
  syl->add_option("--lexicon", lexiconPath, "TSV lexicon")->required();

  auto* ana = app.add_subcommand(
      "analyze", "write slope/positional/PMI tables and a summary");
  ana->add_option("--inventory", inventoryPath,
                  "inventory JSON (default: bundled Persian)");
  ana->add_option("--lexicon", lexiconPath, "TSV lexicon")->required();
  ana->add_option("--out", outDir, "output directory")->required();
  ana->add_option("--weighting", weighting, "type|token|both (default both)");

  auto* rep = app.add_subcommand(
      "repair", "rank repair strategies for a marked word");
  rep->add_option("--inventory", inventoryPath,
                  "inventory JSON (default: bundled Persian)");
  rep->add_option("word", wordText, "phonemic transcription")->required();
  rep->add_option("--max-slope", maxSlope,
                  "highest tolerated sonority slope (default 0)");

  auto* gen = app.add_subcommand(
      "generate", "emit a synthetic CVC.CVC lexicon on stdout");
  gen->add_option("--inventory", inventoryPath,
                  "inventory JSON (default: bundled Persian)");
  gen->add_option("--n", n, "number of pseudo-words")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "RNG seed (default 1)");
  gen->add_option("--mode", mode, "independent|custom-weights");
  gen->add_option("--coda-weights", codaWeights,
                  "5 category weights, Stop..Liquid")
      ->delimiter(',');
  gen->add_option("--onset-weights", onsetWeights,
                  "5 category weights, Stop..Liquid")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (syl->parsed()) return cmdSyllabify(inventoryPath, lexiconPath);
    if (ana->parsed()) {
      return cmdAnalyze(inventoryPath, lexiconPath, outDir, weighting);
    }
    if (rep->parsed()) return cmdRepair(inventoryPath, wordText, maxSlope);
    if (gen->parsed()) {
      return cmdGenerate(inventoryPath, n, seed, mode, codaWeights,
                         onsetWeights);
    }
  } catch (const sylco::GeneratorError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sylco::RepairError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEmpty;
  } catch (const sylco::StatsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEmpty;
  } catch (const sylco::Error& e) {
    // Config, IO, tokenize, syllabify, query: the input did not parse.
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitUsage;
}
