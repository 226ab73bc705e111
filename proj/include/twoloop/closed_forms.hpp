#pragma once

// Closed-form answers for the two-loop homology: generating functions for the
// ranks a_k (defect 0), b_k (defect 1) and the Euler characteristic chi_k,
// plus the piecewise rank formulas.

#include "twoloop/complex_builder.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace twoloop {

/// Dense integer polynomial in t; coeffs[i] multiplies t^i.
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  static IntPolynomial monomial(std::int64_t c, unsigned power);
  /// 1 + sign * t^power, e.g. binomial(-1, 6) = 1 - t^6.
  static IntPolynomial binomial(int sign, unsigned power);

  [[nodiscard]] std::int64_t at(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }
  [[nodiscard]] std::size_t size() const { return coeffs.size(); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);
};

/// numerator / denominator, expanded as a power series at t = 0.
struct RationalGeneratingFunction {
  IntPolynomial numerator;
  IntPolynomial denominator;
  std::string display;  ///< formula as written, for reports
};

struct CaseFormulas {
  ParityCase parity_case = ParityCase::OO;
  RationalGeneratingFunction h0, h1, chi;
};

CaseFormulas case_formulas(ParityCase c);

/// Coefficients of t^0 .. t^kmax. Throws std::invalid_argument if the
/// denominator vanishes at 0 and std::domain_error if a coefficient is not an
/// integer.
std::vector<std::int64_t> series_coefficients(const RationalGeneratingFunction& g, unsigned kmax);

enum class RankKind { A, B };

/// Piecewise floor/ceiling formula for a_k (RankKind::A) or b_k (RankKind::B).
/// Throws std::invalid_argument for k == 0.
unsigned rank_formula(ParityCase c, RankKind which, unsigned k);

/// chi_k == (-1)^(N-1) (-1)^((N-m)k) (a_k - b_k) for k = 0..kmax, using the
/// stored series of h0, h1 and chi.
bool euler_relation_check(ParityCase c, unsigned kmax);

/// k(N - m - 2) + N - 3. Throws std::invalid_argument if the representatives
/// have the wrong parities or violate N >= 2m + 2.
std::int64_t total_degree(ParityCase c, unsigned k, std::int64_t m_rep, std::int64_t n_rep);

/// Smallest convenient (m, N) with the parities of the case and N >= 2m + 2.
std::pair<std::int64_t, std::int64_t> representatives(ParityCase c);

}  // namespace twoloop
