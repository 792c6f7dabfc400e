// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sylco/inventory.hpp"

namespace sylco {

// One syllable under the onset-obligatory grammar: exactly one onset
// consonant, one vowel nucleus, and zero to two coda consonants.
struct Syllable {
  PhonemeId onset = -1;
  PhonemeId nucleus = -1;
  std::vector<PhonemeId> coda;  // ordered, size <= 2

  std::size_t length() const { return 2 + coda.size(); }
  std::string shape() const;  // "CV", "CVC", or "CVCC"

  bool operator==(const Syllable&) const = default;
};

struct SyllabifiedWord {
  std::vector<Syllable> syllables;

  std::size_t size() const { return syllables.size(); }
  std::vector<PhonemeId> flatten() const;

  bool operator==(const SyllabifiedWord&) const = default;
};

// Dot-joined per-syllable shape string, e.g. "CVC.CV.CVC".
std::string shapeOf(const SyllabifiedWord& word);

// Dot-joined transcription, e.g. "del.dar".
std::string renderWord(const Inventory& inv, const SyllabifiedWord& word);

// A coda/onset consonant pair at a syllable boundary. For a CC coda the
// pair uses the final coda consonant and fromComplexCoda is set so callers
// can exclude such boundaries from CVC.CVC-only studies.
struct ContactPair {
  int boundary = 0;  // between syllables[boundary] and syllables[boundary+1]
  PhonemeId coda = -1;
  PhonemeId onset = -1;
  SonorityCategory codaCat = SonorityCategory::Stop;
  SonorityCategory onsetCat = SonorityCategory::Stop;
  int slope = 0;  // level(onsetCat) - level(codaCat), in [-4, +4]
  bool fromComplexCoda = false;
};

}  // namespace sylco
