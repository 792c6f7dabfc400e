// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/generator.hpp"

#include <cmath>
#include <random>

#include "sylco/error.hpp"

namespace sylco {
namespace {

// All randomness below is derived from raw mt19937_64 output through
// fixed arithmetic. std::uniform_int_distribution and friends are
// implementation-defined, which would break cross-platform seed
// reproducibility.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double u01() {  // uniform in [0, 1), 53-bit resolution
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  std::size_t uniformIndex(std::size_t n) {
    const auto i = static_cast<std::size_t>(u01() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  int weightedIndex(const std::array<double, 5>& weights, double total) {
    double r = u01() * total;
    int last = 0;
    for (int i = 0; i < 5; ++i) {
      if (weights[i] <= 0) continue;
      last = i;
      if (r < weights[i]) return i;
      r -= weights[i];
    }
    return last;  // r landed on the rounding sliver past the last bucket
  }

  std::uint64_t geometricFailures(double p) {
    if (p >= 1.0) return 0;
    // Inverse CDF: floor(log(1-u) / log(1-p)); 1-u is in (0, 1].
    return static_cast<std::uint64_t>(std::log1p(-u01()) / std::log1p(-p));
  }

 private:
  std::mt19937_64 rng_;
};

double checkedTotal(const std::array<double, 5>& weights, const char* side,
                    const Inventory& inv) {
  double total = 0;
  for (int i = 0; i < 5; ++i) {
    const double w = weights[i];
    if (!std::isfinite(w) || w < 0) {
      throw GeneratorError(std::string(side) +
                           " weights must be finite and non-negative");
    }
    if (w > 0 && inv.consonantsInCategory(kCategories[i]).empty()) {
      throw GeneratorError(std::string("positive ") + side + " weight on '" +
                           std::string(categoryName(kCategories[i])) +
                           "' but the inventory has no such consonant");
    }
    total += w;
  }
  if (total <= 0) {
    throw GeneratorError(std::string(side) + " weights must not all be zero");
  }
  return total;
}

}  // namespace

std::vector<LexicalEntry> generateLexicon(const Inventory& inv,
                                          std::size_t n, std::uint64_t seed,
                                          const GeneratorConfig& config) {
  const double codaTotal = checkedTotal(config.codaWeights, "coda", inv);
  const double onsetTotal = checkedTotal(config.onsetWeights, "onset", inv);
  if (!(config.tokenGeometricP > 0.0) || config.tokenGeometricP > 1.0) {
    throw GeneratorError("tokenGeometricP must lie in (0, 1]");
  }

  std::array<std::vector<PhonemeId>, 5> members;
  for (int i = 0; i < 5; ++i) {
    members[i] = inv.consonantsInCategory(kCategories[i]);
  }
  const auto& cons = inv.consonants();
  const auto& vows = inv.vowels();

  Draw draw(seed);
  std::vector<LexicalEntry> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Fixed draw order per word: C1 V1 C2(cat, member) C3(cat, member)
    // V2 C4 tokenFreq. C2/C3 are the contact pair.
    const PhonemeId c1 = cons[draw.uniformIndex(cons.size())];
    const PhonemeId v1 = vows[draw.uniformIndex(vows.size())];
    const auto& codaPool =
        members[draw.weightedIndex(config.codaWeights, codaTotal)];
    const PhonemeId c2 = codaPool[draw.uniformIndex(codaPool.size())];
    const auto& onsetPool =
        members[draw.weightedIndex(config.onsetWeights, onsetTotal)];
    const PhonemeId c3 = onsetPool[draw.uniformIndex(onsetPool.size())];
    const PhonemeId v2 = vows[draw.uniformIndex(vows.size())];
    const PhonemeId c4 = cons[draw.uniformIndex(cons.size())];

    LexicalEntry entry;
    const auto sym = [&](PhonemeId id) -> const std::string& {
      return inv.phoneme(id).symbol;
    };
    entry.transcription = sym(c1) + sym(v1) + sym(c2) + "." + sym(c3) +
                          sym(v2) + sym(c4);
    entry.orthography = sym(c1) + sym(v1) + sym(c2) + sym(c3) + sym(v2) +
                        sym(c4);
    entry.tokenFreq = 1 + draw.geometricFailures(config.tokenGeometricP);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace sylco
