// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/contact_table.hpp"

#include "sylco/syllabifier.hpp"

namespace sylco {

ContactTable::ContactTable(const Inventory& inv) : inv_(&inv) {
  const int c = inv.consonantCount();
  type_ = CountMatrix::Zero(c, c);
  token_ = CountMatrix::Zero(c, c);
  typeCoda_ = CountVector::Zero(c);
  typeOnset_ = CountVector::Zero(c);
  tokenCoda_ = CountVector::Zero(c);
  tokenOnset_ = CountVector::Zero(c);
  indicator_ = CountMatrix::Zero(c, 5);
  for (int i = 0; i < c; ++i) {
    indicator_(i, level(inv.categoryOf(inv.consonantAt(i))) - 1) = 1;
  }
}

void ContactTable::increment(PhonemeId coda, PhonemeId onset,
                             std::uint64_t tokenFreq) {
  const int ci = inv_->consonantIndex(coda);
  const int oi = inv_->consonantIndex(onset);
  if (ci < 0 || oi < 0) {
    throw QueryError("contact counts are over consonants only");
  }
  const auto tf = static_cast<std::int64_t>(tokenFreq);
  type_(ci, oi) += 1;
  token_(ci, oi) += tf;
  typeCoda_(ci) += 1;
  typeOnset_(oi) += 1;
  tokenCoda_(ci) += tf;
  tokenOnset_(oi) += tf;
  typeGrand_ += 1;
  tokenGrand_ += tf;
}

void ContactTable::merge(const ContactTable& other) {
  if (!(*inv_ == *other.inv_)) {
    throw StatsError("merge requires tables over equal inventories");
  }
  type_ += other.type_;
  token_ += other.token_;
  typeCoda_ += other.typeCoda_;
  typeOnset_ += other.typeOnset_;
  tokenCoda_ += other.tokenCoda_;
  tokenOnset_ += other.tokenOnset_;
  typeGrand_ += other.typeGrand_;
  tokenGrand_ += other.tokenGrand_;
}

CategoryMatrix ContactTable::categoryMatrix(Weighting w) const {
  return indicator_.transpose() * counts(w) * indicator_;
}

std::int64_t ContactTable::categoryCount(Weighting w, SonorityCategory coda,
                                         SonorityCategory onset) const {
  return categoryMatrix(w)(level(coda) - 1, level(onset) - 1);
}

std::int64_t ContactTable::categoryCodaMarginal(Weighting w,
                                                SonorityCategory c) const {
  const CountVector& v = w == Weighting::Type ? typeCoda_ : tokenCoda_;
  return (indicator_.transpose() * v)(level(c) - 1);
}

std::int64_t ContactTable::categoryOnsetMarginal(Weighting w,
                                                 SonorityCategory c) const {
  const CountVector& v = w == Weighting::Type ? typeOnset_ : tokenOnset_;
  return (indicator_.transpose() * v)(level(c) - 1);
}

BuildResult buildContactTable(const Inventory& inv,
                              std::span<const LexicalEntry> entries) {
  BuildResult result{ContactTable(inv), {}};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::vector<PhonemeId> phonemes;
    try {
      phonemes = tokenize(inv, entries[i].transcription);
    } catch (const TokenizeError&) {
      result.rejects.push_back({i, "untokenizable"});
      continue;
    }
    SyllabifiedWord word;
    try {
      word = syllabify(inv, phonemes);
    } catch (const SyllabifyError&) {
      result.rejects.push_back({i, "unsyllabifiable"});
      continue;
    }
    if (!isCvcCvc(word)) {
      result.rejects.push_back({i, "not CVC.CVC"});
      continue;
    }
    const auto contacts = extractContacts(inv, word);
    result.table.increment(contacts.front().coda, contacts.front().onset,
                           entries[i].tokenFreq);
  }
  return result;
}

}  // namespace sylco
