#pragma once

// Two independent routes to the bivariate generating function
//   H_c(x, y) = sum_{r,d} D(r, c, d) x^r y^d:
// elimination on the transfer matrix, and a rational fit of the DP series.

#include <optional>
#include <string>
#include <vector>

#include "nbdom/rational_gf.hpp"
#include "nbdom/transfer.hpp"

namespace nbdom::gf {

enum class EliminationMethod {
  Auto,
  /// Fraction-free (Bareiss) elimination with bivariate polynomial entries.
  FractionFree,
  /// Since T = x A(y), det(1 - T) follows from characteristic polynomials of
  /// A(y) at sample points y modulo word-size primes, interpolated in y and
  /// lifted by CRT past a Hadamard bound on the coefficients.
  Multimodular,
};

struct EliminationOptions {
  EliminationMethod method = EliminationMethod::Auto;
  /// Auto uses FractionFree up to this many lumped states.
  std::size_t fraction_free_limit = 20;
  /// Full bivariate gcd reduction up to this many columns; beyond it only the
  /// integer content is removed and a residual-factor probe is reported.
  int full_reduction_cols = 4;
};

struct EliminationResult {
  poly::RationalGF gf;
  std::size_t states = 0;
  std::size_t lumped_states = 0;
  EliminationMethod method = EliminationMethod::Auto;
  bool fully_reduced = false;
  /// Set when fully_reduced is false: whether num and den still share a factor
  /// (probed by modular gcds at several y).
  std::optional<bool> residual_factor;
};

/// Determinants of 1 - x A and of the same with the empty block removed.
struct DeterminantPair {
  poly::BiPoly full;
  poly::BiPoly minor;
};

DeterminantPair determinants_fraction_free(const LumpedSystem& sys);
DeterminantPair determinants_multimodular(const LumpedSystem& sys);

/// The all-Z entry E of (1 - T)^-1 satisfies E = 1 + x H_c.
EliminationResult gf_by_elimination(const TransferMatrix& t, const EliminationOptions& opts = {});
poly::RationalGF gf_by_elimination(int cols);

struct FitBounds {
  int x_degree = 0;
  int y_degree = 0;
};

struct FitResult {
  poly::RationalGF gf;
  /// Series terms (rows 0..terms_used-1) the fit was derived from.
  int terms_used = 0;
  /// Further rows checked exactly without being used for fitting.
  int held_out = 0;
  /// Dimension of the solution space of den * series = num within the bounds.
  long nullity = 0;
  int primes_used = 0;
};

/// Default bounds: x-degree up to the number of lumped states, y-degree up to
/// the sum over blocks of the heaviest outgoing weight.
FitBounds default_fit_bounds(int cols);

/// Fits num/den to the DP series: minimal recurrences in x at sample y values
/// modulo primes (Berlekamp-Massey), interpolation in y, CRT, then exact
/// verification against count_table on the fitted rows plus at least
/// `held_out` more. Throws std::domain_error when no fit exists within bounds.
FitResult gf_by_series_fit(int cols, std::optional<FitBounds> bounds = std::nullopt, int held_out = 10);

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int cols = 0;
  std::vector<CheckEntry> checks;
  bool passed() const;
};

/// Runs both engines, compares them by cross-multiplication, compares their
/// series with count_table for `terms` rows, and optionally compares against a
/// supplied reference GF (e.g. read from a gf file). Throws
/// std::invalid_argument for c < 1.
VerifyReport verify_gf(int cols, int terms = 30, const poly::RationalGF* reference = nullptr);

/// True if series_x(gf) reproduces count_table(cols, rows - 1) for every r, d.
bool series_matches_counts(const poly::RationalGF& gf, int cols, int rows, std::string* why = nullptr);

}  // namespace nbdom::gf
