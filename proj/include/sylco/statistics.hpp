// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylco/contact_table.hpp"

namespace sylco {

enum class Position { Coda, Onset };
enum class Granularity { Phoneme, Category };

// Pointwise mutual information in bits. defined is false exactly when the
// joint count is zero; a zero marginal is a QueryError instead, never a
// PmiResult.
struct PmiResult {
  double value = 0.0;
  bool defined = false;
};

// value = log2((joint * grand) / (codaMarginal * onsetMarginal)).
// The count-product form keeps the textbook integer cases exact.
PmiResult pmiFromCounts(std::int64_t joint, std::int64_t codaMarginal,
                        std::int64_t onsetMarginal, std::int64_t grand);

PmiResult pmi(const ContactTable& table, std::string_view codaSymbol,
              std::string_view onsetSymbol, Weighting w);
PmiResult pmi(const ContactTable& table, SonorityCategory coda,
              SonorityCategory onset, Weighting w);

struct PmiCell {
  std::string coda;   // phoneme symbol or category label
  std::string onset;
  int slope = 0;      // category-level slope of the pair
  std::int64_t count = 0;
  PmiResult pmi;
};

// PMI for every event pair whose marginals are both nonzero. Cells with a
// zero joint count are included with defined=false, never dropped.
// Category cells are ordered by (coda level, onset level); phoneme cells
// by (coda symbol, onset symbol). Throws StatsError on an empty table.
std::vector<PmiCell> pmiMatrix(const ContactTable& table, Granularity g,
                               Weighting w);

// Counts per sonority slope, indexed -4..+4.
struct SlopeHistogram {
  std::array<std::int64_t, 9> buckets{};

  std::int64_t& at(int slope) { return buckets[slope + 4]; }
  std::int64_t at(int slope) const { return buckets[slope + 4]; }
  std::int64_t total() const;
};

SlopeHistogram slopeHistogram(const ContactTable& table, Weighting w);

// Probability of each sonority category in the given contact position;
// index is level - 1. Values sum to 1. Throws StatsError when the table
// is empty under w.
std::array<double, 5> positionalDistribution(const ContactTable& table,
                                             Position pos, Weighting w);

struct SlopePmi {
  double meanPmi = 0.0;
  std::int64_t weight = 0;  // total contact count at this slope
};

// Count-weighted mean of the defined category-level PMI values at each
// slope. Slopes with no defined pair are omitted.
std::map<int, SlopePmi> pmiBySlope(const ContactTable& table, Weighting w);

struct TrendPoint {
  double x = 0.0;
  double y = 0.0;
  double weight = 1.0;
};

struct TrendLine {
  double slope = 0.0;
  double intercept = 0.0;
};

// Weighted least-squares line minimizing sum w_i (y_i - (a x_i + b))^2.
// Throws StatsError when fewer than two distinct x carry positive weight,
// when all weights are zero, or when any weight is negative.
TrendLine fitTrend(std::span<const TrendPoint> points);

}  // namespace sylco
