// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sylco/inventory.hpp"
#include "sylco/syllable.hpp"

namespace sylco {

enum class RepairKind { Omission, Assimilation, Metathesis, Epenthesis };

// Which contact consonant an omission deletes.
enum class ContactSide { Coda, Onset };

enum class AssimilationDirection { Regressive, Progressive };

struct RepairStrategy {
  RepairKind kind = RepairKind::Omission;
  ContactSide omissionTarget = ContactSide::Coda;
  AssimilationDirection direction = AssimilationDirection::Regressive;
  PhonemeId epentheticVowel = -1;

  static RepairStrategy omission(ContactSide target);
  // Regressive: the coda consonant becomes a copy of the onset consonant.
  static RepairStrategy assimilation(
      AssimilationDirection d = AssimilationDirection::Regressive);
  static RepairStrategy metathesis();
  static RepairStrategy epenthesis(PhonemeId vowel);
};

std::string describeStrategy(const Inventory& inv, const RepairStrategy& s);

struct RepairOutcome {
  RepairStrategy strategy;
  int boundary = 0;  // the boundary the repair targeted in the input word
  SyllabifiedWord surface;
  std::optional<int> oldSlope;
  // Slope of the repaired boundary's contact after resyllabification;
  // nullopt when the boundary dissolved (no consonant contact remains).
  std::optional<int> newSlope;
};

// Edits the flat phoneme sequence at the given syllable boundary and
// re-syllabifies, so every outcome is grammar-legal by construction.
// Throws RepairError when the boundary has no contact, the epenthetic
// symbol is not an inventory vowel, or the edited word no longer parses.
RepairOutcome applyRepair(const Inventory& inv, const SyllabifiedWord& word,
                          int boundary, const RepairStrategy& strategy);

// Enumerates omission (both targets), regressive assimilation, metathesis
// and epenthesis of every inventory vowel at each boundary whose slope
// exceeds maxSlope; keeps outcomes whose new slope is <= maxSlope or whose
// boundary dissolved. Ranked ascending by new slope with dissolution first,
// ties broken by strategy order omission < assimilation < metathesis <
// epenthesis. Throws RepairError when no contact exceeds maxSlope.
std::vector<RepairOutcome> suggestRepairs(const Inventory& inv,
                                          const SyllabifiedWord& word,
                                          int maxSlope);

}  // namespace sylco
