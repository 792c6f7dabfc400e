// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace sylco {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inventory configuration document is malformed or violates an invariant.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// No inventory symbol matches at some position of a transcription.
class TokenizeError : public Error {
 public:
  using Error::Error;
};

// Phoneme sequence has no parse under the CV(C)(C) grammar.
class SyllabifyError : public Error {
 public:
  using Error::Error;
};

// Lookup of an unknown symbol, a vowel where a consonant is required, or a
// PMI event with zero marginal probability.
class QueryError : public Error {
 public:
  using Error::Error;
};

// Empty table, degenerate trend fit, or similar statistics precondition.
class StatsError : public Error {
 public:
  using Error::Error;
};

class RepairError : public Error {
 public:
  using Error::Error;
};

// Invalid synthetic-corpus generator configuration.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sylco
