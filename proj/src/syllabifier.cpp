// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/syllabifier.hpp"

#include <algorithm>
#include <sstream>

namespace sylco {

TokenizedWord tokenizeWithHints(const Inventory& inv,
                                std::string_view transcription) {
  TokenizedWord out;
  std::size_t pos = 0;
  while (pos < transcription.size()) {
    const char ch = transcription[pos];
    if (ch == ' ') {
      ++pos;
      continue;
    }
    if (ch == '.') {
      out.boundaryHints.push_back(out.phonemes.size());
      ++pos;
      continue;
    }
    bool matched = false;
    for (PhonemeId id : inv.symbolsByLength()) {
      const std::string& sym = inv.phoneme(id).symbol;
      if (transcription.compare(pos, sym.size(), sym) == 0) {
        out.phonemes.push_back(id);
        pos += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::ostringstream msg;
      msg << "no inventory symbol matches '" << transcription
          << "' at byte " << pos;
      throw TokenizeError(msg.str());
    }
  }

  // Dots are advisory; leading, trailing, or doubled dots carry no usable
  // boundary, so only in-range unique hints survive.
  auto& h = out.boundaryHints;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  std::erase_if(h, [&](std::size_t b) {
    return b == 0 || b >= out.phonemes.size();
  });
  return out;
}

std::vector<PhonemeId> tokenize(const Inventory& inv,
                                std::string_view transcription) {
  return tokenizeWithHints(inv, transcription).phonemes;
}

SyllabifiedWord syllabify(const Inventory& inv,
                          std::span<const PhonemeId> phonemes) {
  if (phonemes.empty()) throw SyllabifyError("empty phoneme sequence");
  for (PhonemeId id : phonemes) {
    if (id < 0 || static_cast<std::size_t>(id) >= inv.size()) {
      throw SyllabifyError("phoneme id out of range");
    }
  }

  std::vector<std::size_t> vowelAt;
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    if (inv.isVowel(phonemes[i])) vowelAt.push_back(i);
  }
  if (vowelAt.empty()) throw SyllabifyError("word has no vowel");
  if (vowelAt.front() == 0) {
    throw SyllabifyError("word-initial vowel: onset is obligatory");
  }
  if (vowelAt.front() > 1) {
    throw SyllabifyError("onset cluster: onsets are singleton");
  }

  SyllabifiedWord word;
  for (std::size_t k = 0; k < vowelAt.size(); ++k) {
    Syllable syl;
    syl.onset = phonemes[vowelAt[k] - 1];
    syl.nucleus = phonemes[vowelAt[k]];
    word.syllables.push_back(syl);
    if (k + 1 < vowelAt.size()) {
      // m consonants sit between this vowel and the next; the last one is
      // the next onset, the m-1 before it are this coda.
      const std::size_t m = vowelAt[k + 1] - vowelAt[k] - 1;
      if (m == 0) throw SyllabifyError("adjacent vowels: onset is obligatory");
      if (m > 3) {
        throw SyllabifyError(
            "more than three consonants between vowels: coda would exceed CC");
      }
      for (std::size_t j = 1; j < m; ++j) {
        word.syllables.back().coda.push_back(phonemes[vowelAt[k] + j]);
      }
    } else {
      const std::size_t tail = phonemes.size() - vowelAt[k] - 1;
      if (tail > 2) throw SyllabifyError("word-final coda exceeds CC");
      for (std::size_t j = 1; j <= tail; ++j) {
        word.syllables.back().coda.push_back(phonemes[vowelAt[k] + j]);
      }
    }
  }
  return word;
}

std::optional<std::string> checkBoundaryHints(
    const SyllabifiedWord& word, std::span<const std::size_t> hints) {
  if (hints.empty()) return std::nullopt;  // no dots, no claim
  std::vector<std::size_t> computed;
  std::size_t acc = 0;
  for (std::size_t i = 0; i + 1 < word.syllables.size(); ++i) {
    acc += word.syllables[i].length();
    computed.push_back(acc);
  }
  if (std::equal(computed.begin(), computed.end(), hints.begin(),
                 hints.end())) {
    return std::nullopt;
  }
  auto render = [](std::span<const std::size_t> xs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    os << ']';
    return os.str();
  };
  return "boundary hints " + render(hints) +
         " disagree with computed boundaries " + render(computed);
}

std::vector<ContactPair> extractContacts(const Inventory& inv,
                                         const SyllabifiedWord& word) {
  std::vector<ContactPair> out;
  for (std::size_t i = 0; i + 1 < word.syllables.size(); ++i) {
    const Syllable& left = word.syllables[i];
    if (left.coda.empty()) continue;
    ContactPair pair;
    pair.boundary = static_cast<int>(i);
    pair.coda = left.coda.back();
    pair.onset = word.syllables[i + 1].onset;
    pair.codaCat = inv.categoryOf(pair.coda);
    pair.onsetCat = inv.categoryOf(pair.onset);
    pair.slope = level(pair.onsetCat) - level(pair.codaCat);
    pair.fromComplexCoda = left.coda.size() > 1;
    out.push_back(pair);
  }
  return out;
}

bool isCvcCvc(const SyllabifiedWord& word) {
  return word.syllables.size() == 2 &&
         word.syllables[0].coda.size() == 1 &&
         word.syllables[1].coda.size() == 1;
}

std::vector<SyllabifiedWord> filterCvcCvc(
    std::span<const SyllabifiedWord> words) {
  std::vector<SyllabifiedWord> out;
  std::copy_if(words.begin(), words.end(), std::back_inserter(out),
               [](const SyllabifiedWord& w) { return isCvcCvc(w); });
  return out;
}

}  // namespace sylco
