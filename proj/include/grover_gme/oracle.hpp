#pragma once

// Brute-force reference: dense statevector Grover simulation and an
// unrestricted nearest-product-state search. Exponential in n; meant for
// cross-checking the closed forms at small qubit counts.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grover_gme/error.hpp"
#include "grover_gme/marked_set.hpp"
#include "grover_gme/maximize.hpp"

namespace grover_gme::oracle {

inline constexpr int kMaxQubits = 14;

/// Marked computational basis states, as sorted unique indices in [0, 2^n).
class MarkedBits {
 public:
  MarkedBits(int n, std::vector<std::uint64_t> indices) : n_(n), indices_(std::move(indices)) {
    if (n_ < 1 || n_ > kMaxQubits) {
      throw ResourceError("dense oracle supports 1 <= n <= " + std::to_string(kMaxQubits));
    }
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    const std::uint64_t dim = std::uint64_t{1} << n_;
    if (indices_.empty() || indices_.size() >= dim) {
      throw InvalidInput("marked set must be a nonempty proper subset of the basis");
    }
    if (indices_.back() >= dim) throw InvalidInput("marked index out of range");
  }

  /// Parses bitstrings such as "0001" (most significant qubit first).
  static MarkedBits from_bitstrings(int n, std::span<const std::string> bits) {
    std::vector<std::uint64_t> idx;
    for (const auto& b : bits) {
      if (static_cast<int>(b.size()) != n ||
          b.find_first_not_of("01") != std::string::npos) {
        throw InvalidInput("bitstring '" + b + "' is not " + std::to_string(n) + " binary digits");
      }
      idx.push_back(std::stoull(b, nullptr, 2));
    }
    return MarkedBits(n, std::move(idx));
  }

  /// Expands a weight-class description. Incomplete classes take the
  /// smallest indices of that weight.
  static MarkedBits from_marked_set(const MarkedSet& marked) {
    const int n = marked.n();
    if (n > kMaxQubits) {
      throw ResourceError("dense oracle supports n <= " + std::to_string(kMaxQubits));
    }
    std::vector<std::uint64_t> idx;
    for (const auto& [w, count] : marked.classes()) {
      double taken = 0.0;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n) && taken < count; ++x) {
        if (std::popcount(x) == w) {
          idx.push_back(x);
          taken += 1.0;
        }
      }
    }
    return MarkedBits(n, std::move(idx));
  }

  int n() const { return n_; }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

 private:
  int n_;
  std::vector<std::uint64_t> indices_;
};

/// Real amplitudes over the 2^n computational basis states.
struct DenseState {
  int n = 0;
  std::vector<double> amplitudes;

  static DenseState uniform(int n) {
    if (n < 1 || n > kMaxQubits) {
      throw ResourceError("dense oracle supports 1 <= n <= " + std::to_string(kMaxQubits));
    }
    const std::size_t dim = std::size_t{1} << n;
    return {n, std::vector<double>(dim, 1.0 / std::sqrt(static_cast<double>(dim)))};
  }

  double norm_squared() const {
    double s = 0.0;
    for (double a : amplitudes) s += a * a;
    return s;
  }
};

/// One Grover iteration: phase flip on the marked states, then inversion
/// about the mean.
inline DenseState grover_step(DenseState state, const MarkedBits& marked) {
  if (marked.n() != state.n) throw InvalidInput("grover_step: qubit count mismatch");
  for (auto x : marked.indices()) state.amplitudes[x] = -state.amplitudes[x];
  double mean = 0.0;
  for (double a : state.amplitudes) mean += a;
  mean /= static_cast<double>(state.amplitudes.size());
  for (double& a : state.amplitudes) a = 2.0 * mean - a;
  return state;
}

/// G^k applied to the uniform superposition.
inline DenseState grover_state(const MarkedBits& marked, std::int64_t k) {
  DenseState s = DenseState::uniform(marked.n());
  for (std::int64_t i = 0; i < k; ++i) s = grover_step(std::move(s), marked);
  return s;
}

/// True iff the amplitudes only depend on the Hamming weight of the index,
/// which for a state in the real span is invariance under every qubit
/// permutation.
inline bool check_permutation_symmetry(const DenseState& state, double tol = 1e-12) {
  std::vector<double> reference(state.n + 1, 0.0);
  std::vector<bool> seen(state.n + 1, false);
  for (std::size_t x = 0; x < state.amplitudes.size(); ++x) {
    const int w = std::popcount(x);
    if (!seen[w]) {
      seen[w] = true;
      reference[w] = state.amplitudes[x];
    } else if (std::abs(state.amplitudes[x] - reference[w]) > tol) {
      return false;
    }
  }
  return true;
}

/// Per-qubit angles of cos(a/2)|0> + e^{i b} sin(a/2)|1>, qubit 0 being the
/// least significant bit of a basis index.
struct ProductAnsatz {
  std::vector<double> alpha;
  std::vector<double> beta;
};

struct OracleResult {
  double gme = 0.0;
  ProductAnsatz ansatz;
  double overlap_squared = 0.0;
};

inline constexpr int kRandomStarts = 32;
inline constexpr int kMaxSweeps = 200;
inline constexpr double kSweepTolerance = 1e-13;

namespace detail {

using Qubit = std::array<std::complex<double>, 2>;

inline Qubit qubit_from_angles(double alpha, double beta) {
  return {std::complex<double>(std::cos(alpha / 2), 0.0),
          std::polar(std::sin(alpha / 2), beta)};
}

/// conditional[b] = sum over x with bit `skip` equal to b of
/// psi(x) * prod_{t != skip} phi_t(x_t).
inline std::array<std::complex<double>, 2> conditional_vector(const DenseState& psi,
                                                              const std::vector<Qubit>& phi,
                                                              int skip,
                                                              std::vector<std::complex<double>>& buffer) {
  // buffer[x] = prod_t phi'_t(x_t) with phi'_skip = (1, 1), built by doubling.
  const std::size_t dim = psi.amplitudes.size();
  buffer.assign(dim, {0.0, 0.0});
  buffer[0] = 1.0;
  std::size_t size = 1;
  for (int t = 0; t < psi.n; ++t) {
    const std::complex<double> zero = t == skip ? 1.0 : phi[t][0];
    const std::complex<double> one = t == skip ? 1.0 : phi[t][1];
    for (std::size_t x = 0; x < size; ++x) {
      buffer[x + size] = buffer[x] * one;
      buffer[x] *= zero;
    }
    size *= 2;
  }
  std::array<std::complex<double>, 2> v{};
  const std::size_t mask = std::size_t{1} << skip;
  for (std::size_t x = 0; x < dim; ++x) {
    v[(x & mask) ? 1 : 0] += psi.amplitudes[x] * buffer[x];
  }
  return v;
}

/// Alternating maximisation of |<psi|phi>| one qubit at a time; each qubit
/// update is the closed-form optimum phi_s = conj(v) / |v|.
inline double coordinate_ascent(const DenseState& psi, std::vector<Qubit>& phi,
                                std::vector<std::complex<double>>& buffer) {
  double score = -1.0;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double current = 0.0;
    for (int s = 0; s < psi.n; ++s) {
      const auto v = conditional_vector(psi, phi, s, buffer);
      const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
      if (norm == 0.0) continue;
      phi[s] = {std::conj(v[0]) / norm, std::conj(v[1]) / norm};
      current = norm;
    }
    const double sq = current * current;
    if (sq - score < kSweepTolerance && sweep > 0) {
      score = std::max(score, sq);
      break;
    }
    score = sq;
  }
  return std::max(score, 0.0);
}

inline ProductAnsatz to_angles(const std::vector<Qubit>& phi) {
  ProductAnsatz out;
  for (const auto& q : phi) {
    out.alpha.push_back(2.0 * std::atan2(std::abs(q[1]), std::abs(q[0])));
    double beta = std::abs(q[1]) == 0.0 ? 0.0 : std::arg(q[1]) - std::arg(q[0]);
    beta = std::fmod(beta, 2.0 * std::numbers::pi);
    if (beta < 0.0) beta += 2.0 * std::numbers::pi;
    out.beta.push_back(beta);
  }
  return out;
}

}  // namespace detail

/// Best symmetric product state from the per-weight amplitude sums of the
/// dense state. With search_phase the common relative phase beta is
/// optimised too; otherwise beta = 0.
inline OracleResult symmetric_optimum(const DenseState& psi, bool search_phase = false) {
  std::vector<double> weight_sum(psi.n + 1, 0.0);
  for (std::size_t x = 0; x < psi.amplitudes.size(); ++x) {
    weight_sum[std::popcount(x)] += psi.amplitudes[x];
  }
  auto overlap = [&](double alpha, double beta) {
    const double c = std::cos(alpha / 2);
    const double s = std::sin(alpha / 2);
    std::complex<double> total = 0.0;
    for (int w = 0; w <= psi.n; ++w) {
      total += weight_sum[w] * std::pow(c, psi.n - w) * std::pow(s, w) * std::polar(1.0, w * beta);
    }
    return std::abs(total);
  };
  const Maximum real_best = maximize_on_grid([&](double a) { return overlap(a, 0.0); }, 0.0,
                                             std::numbers::pi, 1025, 1e-12);
  double best_value = real_best.value;
  double best_alpha = real_best.arg;
  double best_beta = 0.0;
  if (search_phase) {
    constexpr int kAlphaSteps = 128;
    constexpr int kBetaSteps = 64;
    const double da = std::numbers::pi / kAlphaSteps;
    const double db = 2.0 * std::numbers::pi / kBetaSteps;
    std::vector<std::array<double, 3>> starts;  // value, alpha, beta
    for (int i = 0; i <= kAlphaSteps; ++i) {
      for (int j = 0; j < kBetaSteps; ++j) starts.push_back({overlap(i * da, j * db), i * da, j * db});
    }
    std::stable_sort(starts.begin(), starts.end(),
                     [](const auto& a, const auto& b) { return a[0] > b[0]; });
    starts.resize(std::min<std::size_t>(starts.size(), 8));
    for (const auto& st : starts) {
      const Maximum2 m = nelder_mead_maximize(
          [&](const std::array<double, 2>& x) { return overlap(x[0], x[1]); }, {st[1], st[2]},
          {0.5 * da, 0.5 * db}, 1e-12);
      if (m.value > best_value) {
        best_value = m.value;
        best_alpha = m.arg[0];
        best_beta = m.arg[1];
      }
    }
  }
  OracleResult r;
  r.overlap_squared = best_value * best_value;
  r.gme = std::max(0.0, 1.0 - r.overlap_squared);
  const auto single = detail::to_angles({detail::qubit_from_angles(best_alpha, best_beta)});
  r.ansatz.alpha.assign(psi.n, single.alpha[0]);
  r.ansatz.beta.assign(psi.n, single.beta[0]);
  return r;
}

/// 1 - max |<psi|phi>|^2 over product states phi.
///
/// Unrestricted: coordinate ascent from the symmetric optimum (common alpha
/// and beta) and from kRandomStarts seeded random product states; best score
/// wins, ties to the earliest start. Restricted: all qubits share (alpha, 0).
inline OracleResult oracle_gme(const DenseState& psi, bool restrict_symmetric,
                               std::uint64_t seed = 0x5eed) {
  if (psi.n < 1 || psi.n > kMaxQubits) {
    throw ResourceError("dense oracle supports 1 <= n <= " + std::to_string(kMaxQubits));
  }
  if (restrict_symmetric) return symmetric_optimum(psi, false);
  const OracleResult seed_result = symmetric_optimum(psi, true);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> alpha_dist(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> beta_dist(0.0, 2.0 * std::numbers::pi);
  std::vector<std::complex<double>> buffer;

  double best_score = -1.0;
  std::vector<detail::Qubit> best_phi;
  for (int start = 0; start <= kRandomStarts; ++start) {
    std::vector<detail::Qubit> phi(psi.n);
    for (int q = 0; q < psi.n; ++q) {
      phi[q] = start == 0 ? detail::qubit_from_angles(seed_result.ansatz.alpha[q],
                                                      seed_result.ansatz.beta[q])
                          : detail::qubit_from_angles(alpha_dist(rng), beta_dist(rng));
    }
    const double score = detail::coordinate_ascent(psi, phi, buffer);
    if (score > best_score) {
      best_score = score;
      best_phi = phi;
    }
  }
  OracleResult r;
  r.overlap_squared = best_score;
  r.gme = std::max(0.0, 1.0 - best_score);
  r.ansatz = detail::to_angles(best_phi);
  return r;
}

}  // namespace grover_gme::oracle
