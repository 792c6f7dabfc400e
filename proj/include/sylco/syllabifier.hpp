// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylco/inventory.hpp"
#include "sylco/syllable.hpp"

namespace sylco {

// Greedy longest-match segmentation of a transcription against the
// inventory's symbols. "." and " " are skipped; "." positions are kept as
// syllable-boundary hints. Throws TokenizeError when no symbol matches at
// some position.
struct TokenizedWord {
  std::vector<PhonemeId> phonemes;
  // Hint h means "a dot appeared after the h-th phoneme" (0 < h < size).
  std::vector<std::size_t> boundaryHints;
};

TokenizedWord tokenizeWithHints(const Inventory& inv,
                                std::string_view transcription);
std::vector<PhonemeId> tokenize(const Inventory& inv,
                                std::string_view transcription);

// Deterministic syllabification: each syllable begins with the single
// consonant before its vowel and runs to the single consonant before the
// next vowel. Throws SyllabifyError on word-initial vowels, onset
// clusters, adjacent vowels, more than three consonants between vowels,
// or a word-final coda longer than two.
SyllabifiedWord syllabify(const Inventory& inv,
                          std::span<const PhonemeId> phonemes);

// Compares dot hints from the source transcription against the computed
// boundaries; returns a warning message on mismatch, nullopt otherwise.
// Hand syllabifications in source lexicons are advisory only.
std::optional<std::string> checkBoundaryHints(
    const SyllabifiedWord& word, std::span<const std::size_t> hints);

// One ContactPair per adjacent-syllable boundary with a non-empty coda.
std::vector<ContactPair> extractContacts(const Inventory& inv,
                                         const SyllabifiedWord& word);

bool isCvcCvc(const SyllabifiedWord& word);

// Words whose shape is exactly "CVC.CVC".
std::vector<SyllabifiedWord> filterCvcCvc(
    std::span<const SyllabifiedWord> words);

}  // namespace sylco
