// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/inventory.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sylco {
namespace {

// Bundled default: the five-level Persian consonant hierarchy plus the
// six-vowel system. Kept byte-identical with data/persian.json (a test
// enforces the sync).
constexpr std::string_view kDefaultJson = R"json({
  "name": "persian",
  "phonemes": [
    {"symbol": "y", "class": "consonant", "category": "Liquid"},
    {"symbol": "r", "class": "consonant", "category": "Liquid"},
    {"symbol": "l", "class": "consonant", "category": "Liquid"},
    {"symbol": "m", "class": "consonant", "category": "Nasal"},
    {"symbol": "n", "class": "consonant", "category": "Nasal"},
    {"symbol": "v", "class": "consonant", "category": "Fricative"},
    {"symbol": "z", "class": "consonant", "category": "Fricative"},
    {"symbol": "ʒ", "class": "consonant", "category": "Fricative"},
    {"symbol": "f", "class": "consonant", "category": "Fricative"},
    {"symbol": "s", "class": "consonant", "category": "Fricative"},
    {"symbol": "ʃ", "class": "consonant", "category": "Fricative"},
    {"symbol": "h", "class": "consonant", "category": "Fricative"},
    {"symbol": "x", "class": "consonant", "category": "Fricative"},
    {"symbol": "tʃ", "class": "consonant", "category": "Affricate"},
    {"symbol": "dʒ", "class": "consonant", "category": "Affricate"},
    {"symbol": "b", "class": "consonant", "category": "Stop"},
    {"symbol": "d", "class": "consonant", "category": "Stop"},
    {"symbol": "g", "class": "consonant", "category": "Stop"},
    {"symbol": "q", "class": "consonant", "category": "Stop"},
    {"symbol": "ʔ", "class": "consonant", "category": "Stop"},
    {"symbol": "p", "class": "consonant", "category": "Stop"},
    {"symbol": "t", "class": "consonant", "category": "Stop"},
    {"symbol": "k", "class": "consonant", "category": "Stop"},
    {"symbol": "i", "class": "vowel"},
    {"symbol": "e", "class": "vowel"},
    {"symbol": "æ", "class": "vowel"},
    {"symbol": "a", "class": "vowel"},
    {"symbol": "o", "class": "vowel"},
    {"symbol": "u", "class": "vowel"}
  ]
}
)json";

std::string lowered(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view categoryName(SonorityCategory c) {
  switch (c) {
    case SonorityCategory::Stop:
      return "Stop";
    case SonorityCategory::Affricate:
      return "Affricate";
    case SonorityCategory::Fricative:
      return "Fricative";
    case SonorityCategory::Nasal:
      return "Nasal";
    case SonorityCategory::Liquid:
      return "Liquid";
  }
  return "?";
}

std::string_view categoryLabel(SonorityCategory c) {
  switch (c) {
    case SonorityCategory::Stop:
      return "PL";
    case SonorityCategory::Affricate:
      return "AF";
    case SonorityCategory::Fricative:
      return "FR";
    case SonorityCategory::Nasal:
      return "NA";
    case SonorityCategory::Liquid:
      return "LI";
  }
  return "?";
}

std::optional<SonorityCategory> parseCategory(std::string_view text) {
  for (SonorityCategory c : kCategories) {
    if (text == categoryName(c) || text == categoryLabel(c)) return c;
  }
  return std::nullopt;
}

Inventory Inventory::fromJson(const std::string& jsonText) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(jsonText);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("inventory config is not valid JSON: ") +
                      e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("inventory config must be a JSON object");
  }

  Inventory inv;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw ConfigError("inventory 'name' must be a string");
    }
    inv.name_ = doc["name"].get<std::string>();
  }
  if (!doc.contains("phonemes") || !doc["phonemes"].is_array()) {
    throw ConfigError("inventory config needs a 'phonemes' array");
  }

  for (const auto& item : doc["phonemes"]) {
    if (!item.is_object() || !item.contains("symbol") ||
        !item["symbol"].is_string() || !item.contains("class") ||
        !item["class"].is_string()) {
      throw ConfigError(
          "each phoneme needs string fields 'symbol' and 'class'");
    }
    Phoneme p;
    p.symbol = item["symbol"].get<std::string>();
    if (p.symbol.empty()) throw ConfigError("phoneme symbol must be non-empty");

    const std::string klass = lowered(item["class"].get<std::string>());
    if (klass == "consonant") {
      p.klass = PhonemeClass::Consonant;
      if (!item.contains("category") || !item["category"].is_string()) {
        throw ConfigError("consonant '" + p.symbol +
                          "' needs a sonority 'category'");
      }
      auto cat = parseCategory(item["category"].get<std::string>());
      if (!cat) {
        throw ConfigError("unknown sonority category '" +
                          item["category"].get<std::string>() + "' on '" +
                          p.symbol + "'");
      }
      p.category = *cat;
    } else if (klass == "vowel") {
      p.klass = PhonemeClass::Vowel;
      if (item.contains("category") && !item["category"].is_null()) {
        throw ConfigError("vowel '" + p.symbol +
                          "' must not carry a sonority category");
      }
    } else {
      throw ConfigError("phoneme class must be 'consonant' or 'vowel', got '" +
                        item["class"].get<std::string>() + "'");
    }
    inv.phonemes_.push_back(std::move(p));
  }

  inv.finalize();
  return inv;
}

Inventory Inventory::fromJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open inventory file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return fromJson(buf.str());
}

Inventory Inventory::defaultPersian() {
  return fromJson(std::string(kDefaultJson));
}

void Inventory::finalize() {
  if (phonemes_.empty()) throw ConfigError("inventory is empty");

  consonantIndex_.assign(phonemes_.size(), -1);
  for (PhonemeId id = 0; id < static_cast<PhonemeId>(phonemes_.size()); ++id) {
    const Phoneme& p = phonemes_[id];
    if (!bySymbol_.emplace(p.symbol, id).second) {
      throw ConfigError("duplicate phoneme symbol '" + p.symbol + "'");
    }
    if (p.klass == PhonemeClass::Consonant) {
      consonantIndex_[id] = static_cast<int>(consonants_.size());
      consonants_.push_back(id);
    } else {
      vowels_.push_back(id);
    }
    byLength_.push_back(id);
  }
  if (consonants_.empty()) throw ConfigError("inventory has no consonant");
  if (vowels_.empty()) throw ConfigError("inventory has no vowel");

  // Longest symbol first so greedy matching prefers digraphs; equal-length
  // symbols can never both match one position, so the tiebreak (id order)
  // only pins iteration determinism.
  std::stable_sort(byLength_.begin(), byLength_.end(),
                   [this](PhonemeId a, PhonemeId b) {
                     return phonemes_[a].symbol.size() >
                            phonemes_[b].symbol.size();
                   });
}

std::optional<PhonemeId> Inventory::find(std::string_view symbol) const {
  auto it = bySymbol_.find(symbol);
  if (it == bySymbol_.end()) return std::nullopt;
  return it->second;
}

PhonemeId Inventory::idOf(std::string_view symbol) const {
  auto id = find(symbol);
  if (!id) {
    throw QueryError("phoneme '" + std::string(symbol) +
                     "' is not in inventory '" + name_ + "'");
  }
  return *id;
}

PhonemeClass Inventory::classify(std::string_view symbol) const {
  return phonemes_[idOf(symbol)].klass;
}

int Inventory::sonorityOf(std::string_view symbol) const {
  return level(categoryOf(idOf(symbol)));
}

SonorityCategory Inventory::categoryOf(PhonemeId id) const {
  const Phoneme& p = phonemes_[id];
  if (!p.category) {
    throw QueryError("'" + p.symbol +
                     "' is a vowel; the sonority scale is consonant-only");
  }
  return *p.category;
}

std::vector<PhonemeId> Inventory::consonantsInCategory(
    SonorityCategory c) const {
  std::vector<PhonemeId> out;
  for (PhonemeId id : consonants_) {
    if (phonemes_[id].category == c) out.push_back(id);
  }
  return out;
}

std::string_view defaultInventoryJson() { return kDefaultJson; }

Inventory loadInventory(const std::string& jsonText) {
  return Inventory::fromJson(jsonText);
}

}  // namespace sylco
