// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sylco/inventory.hpp"
#include "sylco/lexicon.hpp"

namespace sylco {

// Synthetic CVC.CVC pseudo-lexicon generator. The first syllable's coda
// and the second syllable's onset (the contact pair) draw their sonority
// category from the configured weights, independently of each other, then
// pick a uniform member consonant. The non-contact consonants and the
// vowels are uniform. tokenFreq is 1 + Geometric(tokenGeometricP) (number
// of failures before the first success), so it is always >= 1.
//
// All draws go through a hand-rolled uniform on mt19937_64 output, so a
// given seed reproduces the same lexicon on any platform.
struct GeneratorConfig {
  // Indexed by level - 1: [Stop, Affricate, Fricative, Nasal, Liquid].
  std::array<double, 5> codaWeights{1, 1, 1, 1, 1};
  std::array<double, 5> onsetWeights{1, 1, 1, 1, 1};
  double tokenGeometricP = 0.5;
};

// Throws GeneratorError on negative/non-finite weights, all-zero weights,
// a positive weight on a category with no consonants in the inventory, or
// tokenGeometricP outside (0, 1].
std::vector<LexicalEntry> generateLexicon(const Inventory& inv,
                                          std::size_t n, std::uint64_t seed,
                                          const GeneratorConfig& config = {});

}  // namespace sylco
