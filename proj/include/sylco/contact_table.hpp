// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sylco/inventory.hpp"
#include "sylco/lexicon.hpp"

namespace sylco {

enum class Weighting { Type, Token };

using CountMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using CountVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using CategoryMatrix = Eigen::Matrix<std::int64_t, 5, 5>;

// Type- and token-weighted co-occurrence counts over (coda consonant,
// onset consonant) events at CVC.CVC syllable boundaries. Rows index the
// coda consonant, columns the onset consonant, both by the inventory's
// dense consonant index. Marginals and grand totals are maintained
// incrementally, so queries are O(1) and reads are concurrency-safe once
// mutation stops. Counts form a commutative monoid under merge(), which
// lets parallel builders combine per-worker partial tables.
class ContactTable {
 public:
  explicit ContactTable(const Inventory& inv);

  // Adds one lexeme's contact: type count +1, token count +tokenFreq.
  // Both ids must be consonants.
  void increment(PhonemeId coda, PhonemeId onset, std::uint64_t tokenFreq);

  // Adds another table built against an equal inventory.
  void merge(const ContactTable& other);

  const Inventory& inventory() const { return *inv_; }
  int consonantCount() const { return static_cast<int>(type_.rows()); }

  const CountMatrix& counts(Weighting w) const {
    return w == Weighting::Type ? type_ : token_;
  }
  std::int64_t count(Weighting w, int codaIdx, int onsetIdx) const {
    return counts(w)(codaIdx, onsetIdx);
  }
  std::int64_t codaMarginal(Weighting w, int codaIdx) const {
    return (w == Weighting::Type ? typeCoda_ : tokenCoda_)(codaIdx);
  }
  std::int64_t onsetMarginal(Weighting w, int onsetIdx) const {
    return (w == Weighting::Type ? typeOnset_ : tokenOnset_)(onsetIdx);
  }
  std::int64_t grandTotal(Weighting w) const {
    return w == Weighting::Type ? typeGrand_ : tokenGrand_;
  }

  // Counts collapsed to sonority categories; row/column index is
  // level - 1 (Stop..Liquid).
  CategoryMatrix categoryMatrix(Weighting w) const;
  std::int64_t categoryCount(Weighting w, SonorityCategory coda,
                             SonorityCategory onset) const;
  std::int64_t categoryCodaMarginal(Weighting w, SonorityCategory c) const;
  std::int64_t categoryOnsetMarginal(Weighting w, SonorityCategory c) const;

 private:
  const Inventory* inv_;
  CountMatrix type_, token_;
  CountVector typeCoda_, typeOnset_, tokenCoda_, tokenOnset_;
  std::int64_t typeGrand_ = 0, tokenGrand_ = 0;
  // Consonant-to-category indicator, consonantCount x 5; collapsing a
  // count matrix M to categories is indicator_^T * M * indicator_.
  CountMatrix indicator_;
};

struct EntryReject {
  std::size_t index = 0;  // position in the input span
  std::string reason;
};

struct BuildResult {
  ContactTable table;
  std::vector<EntryReject> rejects;
};

// Tokenizes, syllabifies and filters each entry to CVC.CVC, then counts
// its single contact pair. Entries that fail to parse or are not CVC.CVC
// are skipped and reported with a reason; nothing is fatal.
BuildResult buildContactTable(const Inventory& inv,
                              std::span<const LexicalEntry> entries);

}  // namespace sylco
