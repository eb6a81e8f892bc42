#ifndef TETRACHAIN_MARKOV_HPP
#define TETRACHAIN_MARKOV_HPP

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetrachain/monodromy.hpp"
#include "tetrachain/rational.hpp"

namespace tetrachain {

// States 0..6 of every vector and matrix here are the types M1..M7.
inline constexpr std::size_t kStateCount = 7;

using TransitionMatrix = std::array<std::array<Rational, kStateCount>, kStateCount>;
using Distribution = std::array<Rational, kStateCount>;
/// Probabilities of 1, 2 and 3 zigzags up to reversal, at index k-1.
using ClassProbabilities = std::array<Rational, 3>;

/// Chance that gluing onto a face of type i and picking one of the three new
/// faces uniformly yields type j.
TransitionMatrix transition_matrix();

class InconsistentRecords : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p_ij = (number of type-j children of a type-i parent) / 3. Throws
/// InconsistentRecords when two records of one parent type disagree or a
/// parent type never occurs.
TransitionMatrix derive_transition_matrix(std::span<const ChildTypeRecord> records);

bool is_row_stochastic(const TransitionMatrix& p);

Distribution point_mass(MType t);
/// Row vector times matrix.
Distribution apply_transition(const Distribution& d, const TransitionMatrix& p);

/// Law of the type of the face chosen in a chain of length n: every face of
/// the length-2 chain has type M3, and each later gluing applies P once.
/// Throws std::invalid_argument for n < 2.
Distribution exact_distribution(std::size_t n);

/// Mass on {M1..M4}, {M6, M7} and {M5}.
ClassProbabilities group_by_class(const Distribution& d);

ClassProbabilities exact_pk(std::size_t n);

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves pi P = pi with sum(pi) = 1 by exact elimination.
Distribution stationary(const TransitionMatrix& p = transition_matrix());

/// group_by_class(stationary()).
ClassProbabilities limits();

/// Rank of a square rational matrix, computed exactly.
std::size_t exact_rank(std::vector<std::vector<Rational>> m);

struct ClassFit {
  /// exp(slope) of the least-squares line through (n, log r_n).
  double gamma_hat = 0.0;
  std::vector<double> residuals;  ///< r_n = |p_k(n) - L_k| for n = n_min..n_max
  std::vector<double> ratios;     ///< r_{n+1} / r_n where both are nonzero
  /// (max(ratios) - min(ratios)) / mean(ratios).
  double ratio_spread = 0.0;
  /// Residual zero on the whole range; the class is left out of the fit.
  bool degenerate = false;
};

struct ConvergenceFit {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::array<ClassFit, 3> classes;
};

/// Residual decay of exact_pk towards limits() over [n_min, n_max]. Zero
/// residuals are skipped in the regression. Throws std::invalid_argument unless
/// 2 <= n_min < n_max.
ConvergenceFit convergence_fit(std::size_t n_min, std::size_t n_max);

/// Graphviz digraph of the nonzero transitions, labelled "1", "1/3", "2/3".
std::string digraph_dot(const TransitionMatrix& p = transition_matrix());

}  // namespace tetrachain

#endif  // TETRACHAIN_MARKOV_HPP
