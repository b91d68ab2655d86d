// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/diversity.hpp"

#include <cmath>

namespace wdqual {

namespace {

class KahanSum {
 public:
  void add(double x) {
    double y = x - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double total_weight(const AbundanceMap& m) {
  KahanSum total;
  for (const auto& [key, w] : m) {
    if (!std::isfinite(w) || w < 0.0) throw std::invalid_argument("abundance weights must be finite and >= 0");
    total.add(w);
  }
  return total.value();
}

}  // namespace

AbundanceMap relative_frequencies(const AbundanceMap& m) {
  const double total = total_weight(m);
  if (total <= 0.0) throw EmptyAbundanceError();
  AbundanceMap out;
  for (const auto& [key, w] : m) {
    if (w > 0.0) out.emplace(key, w / total);
  }
  return out;
}

double hill_diversity(const AbundanceMap& m) {
  const double total = total_weight(m);
  if (total <= 0.0) throw EmptyAbundanceError();

  KahanSum entropy;
  for (const auto& [key, w] : m) {
    if (w <= 0.0) continue;  // lim p->0 of -p ln p is 0
    const double p = w / total;
    entropy.add(-p * std::log(p));
  }
  return std::exp(entropy.value());
}

}  // namespace wdqual
