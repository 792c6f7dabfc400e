// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/lexicon.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "sylco/error.hpp"

namespace sylco {
namespace {

bool parseTokenFreq(std::string_view field, std::uint64_t& out) {
  if (field.empty()) return false;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

}  // namespace

LexiconReadResult readLexicon(std::istream& in) {
  LexiconReadResult result;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> cols;
    std::string_view rest = line;
    while (true) {
      const auto tab = rest.find('\t');
      if (tab == std::string_view::npos) {
        cols.push_back(rest);
        break;
      }
      cols.push_back(rest.substr(0, tab));
      rest.remove_prefix(tab + 1);
    }
    if (cols.size() != 3) {
      result.malformed.emplace_back(
          lineNo, "expected 3 tab-separated columns but got " +
                      std::to_string(cols.size()));
      continue;
    }
    LexiconRow row;
    row.line = lineNo;
    row.entry.orthography = std::string(cols[0]);
    row.entry.transcription = std::string(cols[1]);
    if (!parseTokenFreq(cols[2], row.entry.tokenFreq)) {
      result.malformed.emplace_back(
          lineNo, "tokenFreq is not a non-negative integer");
      continue;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

LexiconReadResult readLexiconFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon file '" + path + "'");
  return readLexicon(in);
}

void writeLexicon(std::ostream& out, std::span<const LexicalEntry> entries) {
  for (const LexicalEntry& e : entries) {
    out << e.orthography << '\t' << e.transcription << '\t' << e.tokenFreq
        << '\n';
  }
}

}  // namespace sylco
