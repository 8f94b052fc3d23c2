#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "grover_gme/error.hpp"

namespace grover_gme {

/// C(n, k) as a double: the correctly rounded integer for n <= 120, a long
/// double product beyond that.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  if (n <= 120) {
    __extension__ using U128 = unsigned __int128;
    U128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<double>(r);
  }
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<double>(std::round(r));
}

/// A set of marked basis states described only through their Hamming weights.
///
/// Holds n and, for each weight w, how many marked states have that weight.
/// Counts are doubles so that full Dicke classes such as C(100, 50) stay
/// representable; every count is an integer value.
class MarkedSet {
 public:
  /// Builds from an explicit multiset of weights.
  static MarkedSet from_weights(int n, std::span<const int> weights) {
    std::map<int, double> counts;
    for (int w : weights) counts[w] += 1.0;
    return MarkedSet(n, std::move(counts));
  }

  /// Builds from (weight -> count) pairs.
  static MarkedSet from_counts(int n, std::map<int, double> counts) {
    return MarkedSet(n, std::move(counts));
  }

  /// |0...0>
  static MarkedSet product(int n) { return from_counts(n, {{0, 1.0}}); }

  /// |0...0> and |1...1>
  static MarkedSet ghz(int n) {
    if (n < 1) throw InvalidInput("ghz preset needs n >= 1");
    return from_counts(n, {{0, 1.0}, {n, 1.0}});
  }

  /// All n states of weight one.
  static MarkedSet w_state(int n) { return dicke(n, 1); }

  /// All C(n, w) states of weight w.
  static MarkedSet dicke(int n, int w) {
    if (w < 0 || w > n) throw InvalidInput("dicke preset needs 0 <= w <= n");
    return from_counts(n, {{w, binomial(n, w)}});
  }

  int n() const { return n_; }

  /// Number of marked states M.
  double count() const { return total_; }

  double log_count() const { return std::log(total_); }

  /// Weight -> multiplicity, ordered by weight.
  const std::map<int, double>& classes() const { return classes_; }

  /// True when every weight class present is complete, i.e. |S1> is a sum
  /// of whole Dicke states and therefore permutation symmetric.
  bool is_symmetric() const {
    for (const auto& [w, c] : classes_) {
      if (c != binomial(n_, w)) return false;
    }
    return true;
  }

  /// True when all marked states share one Hamming weight.
  bool equal_weights() const { return classes_.size() == 1; }

  /// Mean Hamming weight of the marked states.
  double mean_weight() const {
    double s = 0.0;
    for (const auto& [w, c] : classes_) s += w * c;
    return s / total_;
  }

  /// Human-readable multiset, e.g. "{0x1, 30x1}".
  std::string describe() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [w, c] : classes_) {
      if (!first) out += ", ";
      first = false;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%dx%.17g", w, c);
      out += buf;
    }
    return out + "}";
  }

  friend bool operator==(const MarkedSet&, const MarkedSet&) = default;

 private:
  MarkedSet(int n, std::map<int, double> counts) : n_(n), classes_(std::move(counts)) {
    if (n_ < 1) throw InvalidInput("marked set needs n >= 1");
    if (classes_.empty()) throw InvalidInput("marked set is empty");
    for (const auto& [w, c] : classes_) {
      if (w < 0 || w > n_) {
        throw InvalidInput("Hamming weight " + std::to_string(w) + " outside [0, " +
                           std::to_string(n_) + "]");
      }
      if (!(c >= 1.0) || c != std::floor(c)) {
        throw InvalidInput("weight multiplicity must be a positive integer");
      }
      if (c > binomial(n_, w)) {
        throw InvalidInput("more marked states of weight " + std::to_string(w) +
                           " than exist (C(n, w) = " + std::to_string(binomial(n_, w)) + ")");
      }
      total_ += c;
    }
    if (n_ <= 1023 && total_ > std::ldexp(1.0, n_)) {
      throw InvalidInput("more marked states than basis states");
    }
  }

  int n_ = 0;
  std::map<int, double> classes_;
  double total_ = 0.0;
};

}  // namespace grover_gme
