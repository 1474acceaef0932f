#pragma once

// Rank estimates from the residue at s = 1 of sum -A*_p log p p^-s.
//
// Dirichlet partial sum:  r(x) = (sum_{p <= x} -A*_p log p / p) / log x,
//   evaluated at x = p_min 2^k and at p_max, then extrapolated to 1/log x = 0
//   by least squares over the last `window` checkpoints.
// Cesaro:                 S(x) = (1/x) sum_{p <= x} -A*_p log p.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jrl/fibration/average_trace.hpp"

namespace jrl::nagao {

enum class Estimator { DirichletPartialSum, CesaroNagao };

inline const char* to_string(Estimator e) {
  return e == Estimator::DirichletPartialSum ? "dirichlet" : "cesaro";
}

inline Estimator parse_estimator(const std::string& s) {
  if (s == "dirichlet") return Estimator::DirichletPartialSum;
  if (s == "cesaro") return Estimator::CesaroNagao;
  throw std::invalid_argument("unknown estimator '" + s + "' (dirichlet or cesaro)");
}

struct EstimatorConfig {
  std::uint64_t p_min = 5;
  std::uint64_t p_max = 10000;
  Estimator estimator = Estimator::DirichletPartialSum;
  int window = 4;

  void validate() const {
    if (p_min < 5 || p_min >= p_max) throw std::invalid_argument("estimator: need 5 <= p_min < p_max");
    if (window < 2) throw std::invalid_argument("estimator: window must be >= 2");
  }
};

struct Checkpoint {
  double x = 0;
  double value = 0;
};

struct RankEstimate {
  double raw = 0;
  long rounded = 0;
  double gap = 0;
  std::vector<Checkpoint> checkpoints;
  Estimator estimator = Estimator::DirichletPartialSum;
  std::string target = "rank of J_X(K) modulo the trace";
  /// Smallest checkpoint from which |value| never increases, or 0.
  double shrinking_from = 0;
};

/// The reduced traces -A*_p inside [p_min, p_max], in order of p.
struct Series {
  std::vector<double> p;
  std::vector<double> minus_reduced;
};

inline Series select(const std::vector<fibration::TraceSample>& samples, const EstimatorConfig& cfg) {
  Series s;
  std::uint64_t last = 0;
  for (const auto& t : samples) {
    if (t.p < cfg.p_min || t.p > cfg.p_max) continue;
    if (t.p <= last) throw std::invalid_argument("estimator: samples must be sorted by p without repeats");
    last = t.p;
    s.p.push_back(static_cast<double>(t.p));
    s.minus_reduced.push_back(-t.reduced.get_d());
  }
  if (s.p.size() < 10) {
    throw std::invalid_argument("estimator: " + std::to_string(s.p.size()) + " primes in range, need at least 10");
  }
  return s;
}

inline std::vector<double> checkpoint_positions(const EstimatorConfig& cfg) {
  std::vector<double> xs;
  for (double x = 2.0 * static_cast<double>(cfg.p_min); x < static_cast<double>(cfg.p_max); x *= 2) xs.push_back(x);
  xs.push_back(static_cast<double>(cfg.p_max));
  return xs;
}

inline void finish(RankEstimate& e) {
  e.rounded = std::lround(e.raw);
  e.gap = std::abs(e.raw - static_cast<double>(e.rounded));
  std::size_t j = e.checkpoints.size();
  while (j > 1 && std::abs(e.checkpoints[j - 2].value) >= std::abs(e.checkpoints[j - 1].value)) --j;
  e.shrinking_from = j >= 1 && e.checkpoints.size() >= 2 ? e.checkpoints[j - 1].x : 0;
}

/// Least-squares intercept of y against u.
inline double intercept(const std::vector<double>& u, const std::vector<double>& y) {
  const double k = static_cast<double>(u.size());
  double su = 0, sy = 0, suu = 0, suy = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    su += u[i];
    sy += y[i];
    suu += u[i] * u[i];
    suy += u[i] * y[i];
  }
  const double det = k * suu - su * su;
  if (det == 0) return sy / k;
  return (suu * sy - su * suy) / det;
}

inline RankEstimate residue_estimate(const std::vector<fibration::TraceSample>& samples, const EstimatorConfig& cfg) {
  cfg.validate();
  const Series s = select(samples, cfg);
  RankEstimate e;
  e.estimator = cfg.estimator;
  std::size_t i = 0;
  double dirichlet = 0, cesaro = 0;
  for (double x : checkpoint_positions(cfg)) {
    for (; i < s.p.size() && s.p[i] <= x; ++i) {
      const double lp = std::log(s.p[i]);
      dirichlet += s.minus_reduced[i] * lp / s.p[i];
      cesaro += s.minus_reduced[i] * lp;
    }
    const double value = cfg.estimator == Estimator::DirichletPartialSum ? dirichlet / std::log(x) : cesaro / x;
    e.checkpoints.push_back({x, value});
  }
  if (cfg.estimator == Estimator::DirichletPartialSum) {
    const std::size_t k = std::min(e.checkpoints.size(), static_cast<std::size_t>(cfg.window));
    std::vector<double> u, y;
    for (std::size_t j = e.checkpoints.size() - k; j < e.checkpoints.size(); ++j) {
      u.push_back(1.0 / std::log(e.checkpoints[j].x));
      y.push_back(e.checkpoints[j].value);
    }
    e.raw = intercept(u, y);
  } else {
    e.raw = e.checkpoints.back().value;
  }
  finish(e);
  return e;
}

struct Consistency {
  double excess = 0;  // raw - bound
  bool flagged = false;
};

/// Flags estimates above bound + 0.5.
inline Consistency bound_consistency(const RankEstimate& e, const mpq_class& bound) {
  Consistency c;
  c.excess = e.raw - bound.get_d();
  c.flagged = c.excess > 0.5;
  return c;
}

}  // namespace jrl::nagao
