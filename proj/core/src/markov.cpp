#include "tetrachain/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tetrachain {

namespace {

std::size_t idx(MType t) { return static_cast<std::size_t>(state_index(t)); }

std::string rational_label(const Rational& r) {
  // "1" rather than "1/1" for certain transitions.
  return boost::multiprecision::denominator(r) == 1 ? boost::multiprecision::numerator(r).str()
                                                    : to_fraction_string(r);
}

}  // namespace

TransitionMatrix transition_matrix() {
  using enum MType;
  TransitionMatrix p;
  for (auto& row : p) row.fill(Rational(0));
  const Rational third(1, 3);
  const Rational two_thirds(2, 3);
  p[idx(M1)][idx(M4)] = 1;
  p[idx(M2)][idx(M5)] = 1;
  p[idx(M3)][idx(M6)] = third;
  p[idx(M3)][idx(M7)] = two_thirds;
  p[idx(M4)][idx(M1)] = third;
  p[idx(M4)][idx(M3)] = two_thirds;
  p[idx(M5)][idx(M3)] = 1;
  p[idx(M6)][idx(M2)] = third;
  p[idx(M6)][idx(M4)] = two_thirds;
  p[idx(M7)][idx(M6)] = two_thirds;
  p[idx(M7)][idx(M7)] = third;
  return p;
}

TransitionMatrix derive_transition_matrix(std::span<const ChildTypeRecord> records) {
  std::array<std::optional<std::array<MType, 3>>, kStateCount> seen;
  for (const auto& r : records) {
    auto& slot = seen[idx(r.parent)];
    const auto children = r.sorted_children();
    if (slot && *slot != children) {
      throw InconsistentRecords("parent type " + std::string(to_string(r.parent)) +
                                " produced two different child multisets");
    }
    slot = children;
  }
  TransitionMatrix p;
  for (std::size_t i = 0; i < kStateCount; ++i) {
    p[i].fill(Rational(0));
    if (!seen[i]) {
      throw InconsistentRecords("no record for parent type " +
                                std::string(to_string(type_from_index(static_cast<int>(i)))));
    }
    for (MType child : *seen[i]) {
      p[i][idx(child)] += Rational(1, 3);
    }
  }
  return p;
}

bool is_row_stochastic(const TransitionMatrix& p) {
  return std::all_of(p.begin(), p.end(), [](const auto& row) {
    Rational sum = 0;
    for (const auto& x : row) {
      if (x < 0) return false;
      sum += x;
    }
    return sum == 1;
  });
}

Distribution point_mass(MType t) {
  Distribution d;
  d.fill(Rational(0));
  d[idx(t)] = 1;
  return d;
}

Distribution apply_transition(const Distribution& d, const TransitionMatrix& p) {
  Distribution out;
  out.fill(Rational(0));
  for (std::size_t i = 0; i < kStateCount; ++i) {
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < kStateCount; ++j) {
      out[j] += d[i] * p[i][j];
    }
  }
  return out;
}

Distribution exact_distribution(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("chain length must be at least 2");
  }
  const auto p = transition_matrix();
  auto d = point_mass(MType::M3);
  for (std::size_t k = 2; k < n; ++k) {
    d = apply_transition(d, p);
  }
  return d;
}

ClassProbabilities group_by_class(const Distribution& d) {
  ClassProbabilities out{Rational(0), Rational(0), Rational(0)};
  for (MType t : kAllTypes) {
    out[static_cast<std::size_t>(chain_zigzag_class(t) - 1)] += d[idx(t)];
  }
  return out;
}

ClassProbabilities exact_pk(std::size_t n) { return group_by_class(exact_distribution(n)); }

Distribution stationary(const TransitionMatrix& p) {
  // Rows 0..5: column j of (P - I); row 6: all ones. Right-hand side e_7.
  constexpr std::size_t n = kStateCount;
  std::array<std::array<Rational, n + 1>, n> a;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      a[j][i] = p[i][j] - (i == j ? 1 : 0);
    }
    a[j][n] = 0;
  }
  for (std::size_t i = 0; i < n; ++i) a[n - 1][i] = 1;
  a[n - 1][n] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) {
      throw SingularSystem("stationary system is singular");
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) {
        a[r][c] -= factor * a[col][c];
      }
    }
  }
  Distribution pi;
  for (std::size_t i = 0; i < n; ++i) {
    pi[i] = a[i][n] / a[i][i];
  }
  return pi;
}

ClassProbabilities limits() { return group_by_class(stationary()); }

std::size_t exact_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) {
        m[r][c] -= factor * m[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

ConvergenceFit convergence_fit(std::size_t n_min, std::size_t n_max) {
  if (n_min < 2 || n_max <= n_min) {
    throw std::invalid_argument("convergence_fit needs 2 <= n_min < n_max");
  }
  ConvergenceFit fit{n_min, n_max, {}};
  const auto limit = limits();
  const auto p = transition_matrix();

  std::vector<ClassProbabilities> series;
  auto d = exact_distribution(n_min);
  for (std::size_t n = n_min; n <= n_max; ++n) {
    series.push_back(group_by_class(d));
    d = apply_transition(d, p);
  }

  for (std::size_t k = 0; k < 3; ++k) {
    ClassFit& cf = fit.classes[k];
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < series.size(); ++i) {
      const Rational diff = abs(series[i][k] - limit[k]);
      const double r = to_double(diff);
      cf.residuals.push_back(r);
      if (diff != 0) {
        xs.push_back(static_cast<double>(n_min + i));
        ys.push_back(std::log(r));
      }
      if (i > 0 && diff != 0 && cf.residuals[i - 1] != 0.0) {
        cf.ratios.push_back(r / cf.residuals[i - 1]);
      }
    }
    if (xs.size() < 2) {
      cf.degenerate = true;
      cf.gamma_hat = std::nan("");
      continue;
    }
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    cf.gamma_hat = std::exp(sxy / sxx);
    if (!cf.ratios.empty()) {
      const auto [lo, hi] = std::minmax_element(cf.ratios.begin(), cf.ratios.end());
      const double mean =
          std::accumulate(cf.ratios.begin(), cf.ratios.end(), 0.0) / cf.ratios.size();
      cf.ratio_spread = (*hi - *lo) / mean;
    }
  }
  return fit;
}

std::string digraph_dot(const TransitionMatrix& p) {
  std::ostringstream out;
  out << "digraph zmonodromy {\n";
  for (MType t : kAllTypes) {
    out << "  " << to_string(t) << ";\n";
  }
  for (std::size_t i = 0; i < kStateCount; ++i) {
    for (std::size_t j = 0; j < kStateCount; ++j) {
      if (p[i][j] == 0) continue;
      out << "  " << to_string(type_from_index(static_cast<int>(i))) << " -> "
          << to_string(type_from_index(static_cast<int>(j))) << " [label=\""
          << rational_label(p[i][j]) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace tetrachain
