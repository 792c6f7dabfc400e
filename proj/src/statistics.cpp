// Copyright 2026 the sylco authors
// SPDX-License-Identifier: Apache-2.0

#include "sylco/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

namespace sylco {

PmiResult pmiFromCounts(std::int64_t joint, std::int64_t codaMarginal,
                        std::int64_t onsetMarginal, std::int64_t grand) {
  if (grand <= 0) throw QueryError("PMI over an empty table");
  if (codaMarginal <= 0 || onsetMarginal <= 0) {
    throw QueryError("PMI event with zero marginal probability");
  }
  if (joint == 0) return {0.0, false};
  // log2((j/N) / (x/N * y/N)) == log2(j*N / (x*y)); the count-product form
  // keeps small integer-ratio cases exact.
  const double value =
      std::log2((static_cast<double>(joint) * static_cast<double>(grand)) /
                (static_cast<double>(codaMarginal) *
                 static_cast<double>(onsetMarginal)));
  return {value, true};
}

PmiResult pmi(const ContactTable& table, std::string_view codaSymbol,
              std::string_view onsetSymbol, Weighting w) {
  const Inventory& inv = table.inventory();
  const int ci = inv.consonantIndex(inv.idOf(codaSymbol));
  const int oi = inv.consonantIndex(inv.idOf(onsetSymbol));
  if (ci < 0) {
    throw QueryError("'" + std::string(codaSymbol) + "' is not a consonant");
  }
  if (oi < 0) {
    throw QueryError("'" + std::string(onsetSymbol) + "' is not a consonant");
  }
  return pmiFromCounts(table.count(w, ci, oi), table.codaMarginal(w, ci),
                       table.onsetMarginal(w, oi), table.grandTotal(w));
}

PmiResult pmi(const ContactTable& table, SonorityCategory coda,
              SonorityCategory onset, Weighting w) {
  return pmiFromCounts(table.categoryCount(w, coda, onset),
                       table.categoryCodaMarginal(w, coda),
                       table.categoryOnsetMarginal(w, onset),
                       table.grandTotal(w));
}

std::vector<PmiCell> pmiMatrix(const ContactTable& table, Granularity g,
                               Weighting w) {
  const std::int64_t grand = table.grandTotal(w);
  if (grand == 0) throw StatsError("PMI matrix over an empty table");

  std::vector<PmiCell> cells;
  if (g == Granularity::Category) {
    const CategoryMatrix m = table.categoryMatrix(w);
    const Eigen::Matrix<std::int64_t, 5, 1> codaSum = m.rowwise().sum();
    const Eigen::Matrix<std::int64_t, 1, 5> onsetSum = m.colwise().sum();
    for (SonorityCategory coda : kCategories) {
      for (SonorityCategory onset : kCategories) {
        const std::int64_t xm = codaSum(level(coda) - 1);
        const std::int64_t ym = onsetSum(level(onset) - 1);
        if (xm == 0 || ym == 0) continue;
        PmiCell cell;
        cell.coda = categoryLabel(coda);
        cell.onset = categoryLabel(onset);
        cell.slope = level(onset) - level(coda);
        cell.count = m(level(coda) - 1, level(onset) - 1);
        cell.pmi = pmiFromCounts(cell.count, xm, ym, grand);
        cells.push_back(std::move(cell));
      }
    }
    return cells;
  }

  const Inventory& inv = table.inventory();
  for (int ci = 0; ci < table.consonantCount(); ++ci) {
    const std::int64_t xm = table.codaMarginal(w, ci);
    if (xm == 0) continue;
    for (int oi = 0; oi < table.consonantCount(); ++oi) {
      const std::int64_t ym = table.onsetMarginal(w, oi);
      if (ym == 0) continue;
      const PhonemeId codaId = inv.consonantAt(ci);
      const PhonemeId onsetId = inv.consonantAt(oi);
      PmiCell cell;
      cell.coda = inv.phoneme(codaId).symbol;
      cell.onset = inv.phoneme(onsetId).symbol;
      cell.slope = level(inv.categoryOf(onsetId)) -
                   level(inv.categoryOf(codaId));
      cell.count = table.count(w, ci, oi);
      cell.pmi = pmiFromCounts(cell.count, xm, ym, grand);
      cells.push_back(std::move(cell));
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const PmiCell& a, const PmiCell& b) {
              return std::tie(a.coda, a.onset) < std::tie(b.coda, b.onset);
            });
  return cells;
}

std::int64_t SlopeHistogram::total() const {
  return std::accumulate(buckets.begin(), buckets.end(), std::int64_t{0});
}

SlopeHistogram slopeHistogram(const ContactTable& table, Weighting w) {
  const CategoryMatrix m = table.categoryMatrix(w);
  SlopeHistogram hist;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) hist.at(j - i) += m(i, j);
  }
  return hist;
}

std::array<double, 5> positionalDistribution(const ContactTable& table,
                                             Position pos, Weighting w) {
  const std::int64_t grand = table.grandTotal(w);
  if (grand == 0) {
    throw StatsError("positional distribution over an empty table");
  }
  std::array<double, 5> out{};
  for (SonorityCategory c : kCategories) {
    const std::int64_t count = pos == Position::Coda
                                   ? table.categoryCodaMarginal(w, c)
                                   : table.categoryOnsetMarginal(w, c);
    out[level(c) - 1] = static_cast<double>(count) /
                        static_cast<double>(grand);
  }
  return out;
}

std::map<int, SlopePmi> pmiBySlope(const ContactTable& table, Weighting w) {
  const std::int64_t grand = table.grandTotal(w);
  if (grand == 0) throw StatsError("PMI by slope over an empty table");
  const CategoryMatrix m = table.categoryMatrix(w);
  const Eigen::Matrix<std::int64_t, 5, 1> codaSum = m.rowwise().sum();
  const Eigen::Matrix<std::int64_t, 1, 5> onsetSum = m.colwise().sum();

  std::array<double, 9> pmiMass{};
  std::array<std::int64_t, 9> weight{};
  std::array<bool, 9> anyDefined{};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const int bucket = (j - i) + 4;
      const std::int64_t joint = m(i, j);
      weight[bucket] += joint;
      if (joint > 0 && codaSum(i) > 0 && onsetSum(j) > 0) {
        const PmiResult r = pmiFromCounts(joint, codaSum(i), onsetSum(j),
                                          grand);
        pmiMass[bucket] += r.value * static_cast<double>(joint);
        anyDefined[bucket] = true;
      }
    }
  }

  std::map<int, SlopePmi> out;
  for (int s = -4; s <= 4; ++s) {
    if (!anyDefined[s + 4]) continue;
    out[s] = {pmiMass[s + 4] / static_cast<double>(weight[s + 4]),
              weight[s + 4]};
  }
  return out;
}

TrendLine fitTrend(std::span<const TrendPoint> points) {
  double sw = 0, swx = 0, swxx = 0, swy = 0, swxy = 0;
  std::vector<double> xs;
  for (const TrendPoint& p : points) {
    if (p.weight < 0) throw StatsError("trend fit with a negative weight");
    if (p.weight == 0) continue;
    xs.push_back(p.x);
    sw += p.weight;
    swx += p.weight * p.x;
    swxx += p.weight * p.x * p.x;
    swy += p.weight * p.y;
    swxy += p.weight * p.x * p.y;
  }
  if (sw <= 0) throw StatsError("trend fit with no positive weight");
  std::sort(xs.begin(), xs.end());
  if (std::unique(xs.begin(), xs.end()) - xs.begin() < 2) {
    throw StatsError("trend fit needs two distinct x values");
  }

  Eigen::Matrix2d normal;
  normal << swxx, swx, swx, sw;
  Eigen::Vector2d rhs(swxy, swy);
  const Eigen::Vector2d sol = normal.ldlt().solve(rhs);
  return {sol(0), sol(1)};
}

}  // namespace sylco
