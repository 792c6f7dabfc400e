// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylco/error.hpp"

namespace sylco {

// Five-level consonant sonority scale. The numeric value is the sonority
// level used for slope arithmetic.
enum class SonorityCategory : int {
  Stop = 1,
  Affricate = 2,
  Fricative = 3,
  Nasal = 4,
  Liquid = 5,
};

inline constexpr std::array<SonorityCategory, 5> kCategories = {
    SonorityCategory::Stop, SonorityCategory::Affricate,
    SonorityCategory::Fricative, SonorityCategory::Nasal,
    SonorityCategory::Liquid};

constexpr int level(SonorityCategory c) { return static_cast<int>(c); }

// "Stop", "Affricate", ...
std::string_view categoryName(SonorityCategory c);
// Two-letter chart label: "PL", "AF", "FR", "NA", "LI".
std::string_view categoryLabel(SonorityCategory c);
// Accepts both full names and chart labels; nullopt if unrecognized.
std::optional<SonorityCategory> parseCategory(std::string_view text);

enum class PhonemeClass { Consonant, Vowel };

// Index of a phoneme within its Inventory.
using PhonemeId = std::int32_t;

struct Phoneme {
  std::string symbol;  // may span several characters (affricate digraphs)
  PhonemeClass klass = PhonemeClass::Consonant;
  std::optional<SonorityCategory> category;  // present iff consonant

  bool operator==(const Phoneme&) const = default;
};

// Immutable phoneme inventory with per-consonant sonority categories.
// All mutation happens during construction; afterwards the object is safe
// for unrestricted concurrent reads.
class Inventory {
 public:
  // Parses the JSON configuration document:
  //   {"name": "...", "phonemes": [{"symbol": "t", "class": "consonant",
  //                                 "category": "Stop"}, ...]}
  // Throws ConfigError on malformed documents or invariant violations
  // (duplicate symbol, unknown category, consonant without category,
  // vowel with category, empty inventory, missing vowel or consonant).
  static Inventory fromJson(const std::string& jsonText);
  static Inventory fromJsonFile(const std::string& path);

  // The bundled Persian inventory: 23 consonants over the five categories
  // plus six vowels.
  static Inventory defaultPersian();

  const std::string& name() const { return name_; }
  std::size_t size() const { return phonemes_.size(); }
  const Phoneme& phoneme(PhonemeId id) const { return phonemes_[id]; }

  std::optional<PhonemeId> find(std::string_view symbol) const;
  // QueryError if the symbol is not in the inventory.
  PhonemeId idOf(std::string_view symbol) const;
  PhonemeClass classify(std::string_view symbol) const;

  // Sonority level of a consonant, 1..5. QueryError for unknown symbols
  // and for vowels: the scale here is consonant-only.
  int sonorityOf(std::string_view symbol) const;
  SonorityCategory categoryOf(PhonemeId id) const;

  bool isVowel(PhonemeId id) const {
    return phonemes_[id].klass == PhonemeClass::Vowel;
  }

  const std::vector<PhonemeId>& consonants() const { return consonants_; }
  const std::vector<PhonemeId>& vowels() const { return vowels_; }
  int consonantCount() const { return static_cast<int>(consonants_.size()); }
  PhonemeId consonantAt(int index) const { return consonants_[index]; }
  // Dense index of a consonant among consonants(), -1 for vowels.
  int consonantIndex(PhonemeId id) const { return consonantIndex_[id]; }
  std::vector<PhonemeId> consonantsInCategory(SonorityCategory c) const;

  // Phoneme ids ordered by decreasing symbol byte length; the greedy
  // tokenizer probes candidates in this order.
  const std::vector<PhonemeId>& symbolsByLength() const { return byLength_; }

  bool operator==(const Inventory& other) const {
    return name_ == other.name_ && phonemes_ == other.phonemes_;
  }

 private:
  Inventory() = default;
  void finalize();  // builds lookup structures, enforces invariants

  std::string name_;
  std::vector<Phoneme> phonemes_;
  std::map<std::string, PhonemeId, std::less<>> bySymbol_;
  std::vector<PhonemeId> consonants_;
  std::vector<PhonemeId> vowels_;
  std::vector<PhonemeId> byLength_;
  std::vector<int> consonantIndex_;
};

// The bundled default configuration document (same content as the shipped
// data/persian.json).
std::string_view defaultInventoryJson();

// Convenience alias for Inventory::fromJson.
Inventory loadInventory(const std::string& jsonText);

}  // namespace sylco
