// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sylco {

struct LexicalEntry {
  std::string orthography;
  std::string transcription;
  std::uint64_t tokenFreq = 0;  // corpus occurrences; type weight is 1

  bool operator==(const LexicalEntry&) const = default;
};

// One parsed lexicon data row with its 1-based source line number.
struct LexiconRow {
  LexicalEntry entry;
  std::size_t line = 0;
};

struct LexiconReadResult {
  std::vector<LexiconRow> rows;
  // (line, reason) for structurally bad data rows: wrong column count,
  // unparseable tokenFreq.
  std::vector<std::pair<std::size_t, std::string>> malformed;

  std::size_t dataRows() const { return rows.size() + malformed.size(); }
};

// Tab-separated UTF-8 lexicon: orthography <TAB> transcription <TAB>
// tokenFreq, one lexeme per row. Lines starting with '#' and blank lines
// are ignored. Throws IoError if the file cannot be read.
LexiconReadResult readLexiconFile(const std::string& path);
LexiconReadResult readLexicon(std::istream& in);

void writeLexicon(std::ostream& out, std::span<const LexicalEntry> entries);

}  // namespace sylco
