// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/repair.hpp"

#include <algorithm>
#include <limits>

#include "sylco/syllabifier.hpp"

namespace sylco {

RepairStrategy RepairStrategy::omission(ContactSide target) {
  RepairStrategy s;
  s.kind = RepairKind::Omission;
  s.omissionTarget = target;
  return s;
}

RepairStrategy RepairStrategy::assimilation(AssimilationDirection d) {
  RepairStrategy s;
  s.kind = RepairKind::Assimilation;
  s.direction = d;
  return s;
}

RepairStrategy RepairStrategy::metathesis() {
  RepairStrategy s;
  s.kind = RepairKind::Metathesis;
  return s;
}

RepairStrategy RepairStrategy::epenthesis(PhonemeId vowel) {
  RepairStrategy s;
  s.kind = RepairKind::Epenthesis;
  s.epentheticVowel = vowel;
  return s;
}

std::string describeStrategy(const Inventory& inv, const RepairStrategy& s) {
  switch (s.kind) {
    case RepairKind::Omission:
      return s.omissionTarget == ContactSide::Coda ? "omission (coda)"
                                                   : "omission (onset)";
    case RepairKind::Assimilation:
      return s.direction == AssimilationDirection::Regressive
                 ? "assimilation (regressive)"
                 : "assimilation (progressive)";
    case RepairKind::Metathesis:
      return "metathesis";
    case RepairKind::Epenthesis:
      return "epenthesis /" + inv.phoneme(s.epentheticVowel).symbol + "/";
  }
  return "?";
}

RepairOutcome applyRepair(const Inventory& inv, const SyllabifiedWord& word,
                          int boundary, const RepairStrategy& strategy) {
  if (boundary < 0 ||
      static_cast<std::size_t>(boundary) + 1 >= word.syllables.size()) {
    throw RepairError("boundary index out of range");
  }
  const Syllable& left = word.syllables[boundary];
  if (left.coda.empty()) {
    throw RepairError("boundary has no consonant contact");
  }

  // Flat index of the contact consonants: the final coda consonant of the
  // left syllable and the onset right after it.
  std::size_t codaPos = 0;
  for (int i = 0; i <= boundary; ++i) {
    codaPos += word.syllables[i].length();
  }
  codaPos -= 1;
  const std::size_t onsetPos = codaPos + 1;

  std::vector<PhonemeId> flat = word.flatten();
  const int oldSlope = level(inv.categoryOf(flat[onsetPos])) -
                       level(inv.categoryOf(flat[codaPos]));

  // junction = post-edit flat index of the segment that now follows the
  // repaired seam; the seam survives as a contact only if some syllable
  // boundary of the edited word splits exactly there.
  std::size_t junction = onsetPos;
  switch (strategy.kind) {
    case RepairKind::Omission:
      if (strategy.omissionTarget == ContactSide::Coda) {
        flat.erase(flat.begin() + codaPos);
        junction = codaPos;
      } else {
        flat.erase(flat.begin() + onsetPos);
      }
      break;
    case RepairKind::Assimilation:
      if (strategy.direction == AssimilationDirection::Regressive) {
        flat[codaPos] = flat[onsetPos];
      } else {
        flat[onsetPos] = flat[codaPos];
      }
      break;
    case RepairKind::Metathesis:
      std::swap(flat[codaPos], flat[onsetPos]);
      break;
    case RepairKind::Epenthesis: {
      const PhonemeId v = strategy.epentheticVowel;
      if (v < 0 || static_cast<std::size_t>(v) >= inv.size() ||
          !inv.isVowel(v)) {
        throw RepairError("epenthetic symbol must be an inventory vowel");
      }
      flat.insert(flat.begin() + onsetPos, v);
      junction = onsetPos + 1;
      break;
    }
  }

  RepairOutcome outcome;
  outcome.strategy = strategy;
  outcome.boundary = boundary;
  outcome.oldSlope = oldSlope;
  try {
    outcome.surface = syllabify(inv, flat);
  } catch (const SyllabifyError& e) {
    throw RepairError(std::string("repair yields an ill-formed word: ") +
                      e.what());
  }

  std::size_t split = 0;
  for (std::size_t i = 0; i + 1 < outcome.surface.syllables.size(); ++i) {
    const Syllable& s = outcome.surface.syllables[i];
    split += s.length();
    if (split == junction && !s.coda.empty()) {
      outcome.newSlope =
          level(inv.categoryOf(outcome.surface.syllables[i + 1].onset)) -
          level(inv.categoryOf(s.coda.back()));
      break;
    }
  }
  return outcome;
}

std::vector<RepairOutcome> suggestRepairs(const Inventory& inv,
                                          const SyllabifiedWord& word,
                                          int maxSlope) {
  std::vector<RepairStrategy> strategies = {
      RepairStrategy::omission(ContactSide::Coda),
      RepairStrategy::omission(ContactSide::Onset),
      RepairStrategy::assimilation(),
      RepairStrategy::metathesis(),
  };
  for (PhonemeId v : inv.vowels()) {
    strategies.push_back(RepairStrategy::epenthesis(v));
  }

  std::vector<RepairOutcome> kept;
  bool anyOffending = false;
  for (const ContactPair& contact : extractContacts(inv, word)) {
    if (contact.slope <= maxSlope) continue;
    anyOffending = true;
    for (const RepairStrategy& s : strategies) {
      RepairOutcome outcome;
      try {
        outcome = applyRepair(inv, word, contact.boundary, s);
      } catch (const RepairError&) {
        continue;  // a strategy that breaks the word is just not offered
      }
      if (!outcome.newSlope || *outcome.newSlope <= maxSlope) {
        kept.push_back(std::move(outcome));
      }
    }
  }
  if (!anyOffending) {
    throw RepairError("nothing to repair: no contact exceeds the ceiling");
  }

  // Dissolved boundaries first, then ascending slope; ties keep strategy
  // order, then the strategy list's variant order, then the boundary.
  auto variantRank = [&](const RepairStrategy& s) {
    if (s.kind == RepairKind::Omission) {
      return s.omissionTarget == ContactSide::Coda ? 0 : 1;
    }
    if (s.kind == RepairKind::Epenthesis) {
      const auto& vs = inv.vowels();
      return static_cast<int>(std::find(vs.begin(), vs.end(),
                                        s.epentheticVowel) -
                              vs.begin());
    }
    return 0;
  };
  std::stable_sort(
      kept.begin(), kept.end(),
      [&](const RepairOutcome& a, const RepairOutcome& b) {
        const int sa =
            a.newSlope ? *a.newSlope : std::numeric_limits<int>::min();
        const int sb =
            b.newSlope ? *b.newSlope : std::numeric_limits<int>::min();
        if (sa != sb) return sa < sb;
        const int ka = static_cast<int>(a.strategy.kind);
        const int kb = static_cast<int>(b.strategy.kind);
        if (ka != kb) return ka < kb;
        const int va = variantRank(a.strategy);
        const int vb = variantRank(b.strategy);
        if (va != vb) return va < vb;
        return a.boundary < b.boundary;
      });
  return kept;
}

}  // namespace sylco
