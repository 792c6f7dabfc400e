// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force oracles. Everything here recomputes expectations
// from first principles (exhaustive enumeration, direct recounting) and
// must stay free of calls into the code paths it checks.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

// Every decomposition of a C/V shape string into syllable blocks drawn
// from {CV, CVC, CVCC}, as lists of block lengths. A valid word has
// exactly one; the enumerator does not assume that.
inline void enumerateParsesInto(std::string_view shape, std::size_t pos,
                                std::vector<int>& prefix,
                                std::vector<std::vector<int>>& out) {
  if (pos == shape.size()) {
    out.push_back(prefix);
    return;
  }
  for (int len : {2, 3, 4}) {
    if (pos + len > shape.size()) break;
    if (shape[pos] != 'C' || shape[pos + 1] != 'V') break;
    bool codaOk = true;
    for (int j = 2; j < len; ++j) {
      if (shape[pos + j] != 'C') codaOk = false;
    }
    if (!codaOk) continue;
    prefix.push_back(len);
    enumerateParsesInto(shape, pos + len, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> enumerateParses(std::string_view shape) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  enumerateParsesInto(shape, 0, prefix, out);
  return out;
}

// Every segmentation of text into symbols from the given set.
inline void enumerateSegmentationsInto(
    std::string_view text, const std::vector<std::string>& symbols,
    std::vector<std::string>& prefix,
    std::vector<std::vector<std::string>>& out) {
  if (text.empty()) {
    out.push_back(prefix);
    return;
  }
  for (const std::string& sym : symbols) {
    if (text.substr(0, sym.size()) != sym) continue;
    prefix.push_back(sym);
    enumerateSegmentationsInto(text.substr(sym.size()), symbols, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<std::string>> enumerateSegmentations(
    std::string_view text, const std::vector<std::string>& symbols) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> prefix;
  enumerateSegmentationsInto(text, symbols, prefix, out);
  return out;
}

// Contact pair of a dotted "CVC.CVC" transcription, read directly off the
// dot: the longest consonant symbol that is a suffix of the left half
// pairs with the longest one that is a prefix of the right half. A
// different rule than the tokenizer's left-to-right scan, which is the
// point; with the bundled symbol set both resolve identically.
struct DotContact {
  std::string coda;
  std::string onset;
};

inline DotContact contactAtDot(std::string_view text,
                               const std::vector<std::string>& consonants) {
  const auto dot = text.find('.');
  const std::string_view left = text.substr(0, dot);
  const std::string_view right = text.substr(dot + 1);
  DotContact out;
  for (const std::string& sym : consonants) {
    if (left.size() >= sym.size() &&
        left.substr(left.size() - sym.size()) == sym &&
        sym.size() > out.coda.size()) {
      out.coda = sym;
    }
    if (right.substr(0, sym.size()) == sym && sym.size() > out.onset.size()) {
      out.onset = sym;
    }
  }
  return out;
}

struct PairCount {
  std::int64_t type = 0;
  std::int64_t token = 0;
};

using PairCounts = std::map<std::pair<std::string, std::string>, PairCount>;

}  // namespace oracle
