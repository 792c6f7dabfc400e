// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/syllable.hpp"

namespace sylco {

std::string Syllable::shape() const {
  std::string s = "CV";
  s.append(coda.size(), 'C');
  return s;
}

std::vector<PhonemeId> SyllabifiedWord::flatten() const {
  std::vector<PhonemeId> out;
  for (const Syllable& s : syllables) {
    out.push_back(s.onset);
    out.push_back(s.nucleus);
    out.insert(out.end(), s.coda.begin(), s.coda.end());
  }
  return out;
}

std::string shapeOf(const SyllabifiedWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.syllables.size(); ++i) {
    if (i) out += '.';
    out += word.syllables[i].shape();
  }
  return out;
}

std::string renderWord(const Inventory& inv, const SyllabifiedWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.syllables.size(); ++i) {
    if (i) out += '.';
    const Syllable& s = word.syllables[i];
    out += inv.phoneme(s.onset).symbol;
    out += inv.phoneme(s.nucleus).symbol;
    for (PhonemeId c : s.coda) out += inv.phoneme(c).symbol;
  }
  return out;
}

}  // namespace sylco
