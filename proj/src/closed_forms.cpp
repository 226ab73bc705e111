#include "twoloop/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoloop {

namespace {

void trim(IntPolynomial& p) {
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
}

IntPolynomial poly(std::initializer_list<std::pair<std::int64_t, unsigned>> terms) {
  IntPolynomial p;
  for (const auto& [c, power] : terms) p = p + IntPolynomial::monomial(c, power);
  return p;
}

int sign_of_parity(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

RationalGeneratingFunction gf(IntPolynomial num, IntPolynomial den, std::string display) {
  return {std::move(num), std::move(den), std::move(display)};
}

}  // namespace

IntPolynomial IntPolynomial::monomial(std::int64_t c, unsigned power) {
  IntPolynomial p;
  if (c == 0) return p;
  p.coeffs.assign(power + 1, 0);
  p.coeffs[power] = c;
  return p;
}

IntPolynomial IntPolynomial::binomial(int sign, unsigned power) {
  return monomial(1, 0) + monomial(sign, power);
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  r.coeffs.assign(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r.coeffs[i] = a.at(i) + b.at(i);
  trim(r);
  return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + b * IntPolynomial::monomial(-1, 0);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  trim(r);
  return r;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i) != b.at(i)) return false;
  }
  return true;
}

CaseFormulas case_formulas(ParityCase c) {
  using P = IntPolynomial;
  const P one = P::monomial(1, 0);
  CaseFormulas f;
  f.parity_case = c;
  switch (c) {
    case ParityCase::OO: {
      const P den = P::binomial(-1, 2) * P::binomial(-1, 6);
      const P chi_den = P::binomial(1, 1) * P::binomial(-1, 6);
      f.h0 = gf(one - den, den, "1/((1-t^2)(1-t^6)) - 1");
      f.h1 = gf(P::monomial(1, 1), den, "t/((1-t^2)(1-t^6))");
      f.chi = gf(one - chi_den, chi_den, "1/((1+t)(1-t^6)) - 1");
      break;
    }
    case ParityCase::EE: {
      const P den = P::binomial(-1, 2) * P::binomial(-1, 6);
      const P chi_den = P::binomial(1, 1) * P::binomial(-1, 6);
      f.h0 = gf(P::monomial(1, 6), den, "t^6/((1-t^2)(1-t^6))");
      f.h1 = gf(P::monomial(1, 7), den, "t^7/((1-t^2)(1-t^6))");
      f.chi = gf(P::monomial(-1, 6), chi_den, "-t^6/((1+t)(1-t^6))");
      break;
    }
    case ParityCase::EO: {
      const P den = P::binomial(-1, 4) * P::binomial(-1, 12);
      const P chi_den = P::binomial(1, 2) * P::binomial(-1, 12);
      f.h0 = gf(poly({{1, 3}, {1, 11}, {1, 14}, {-1, 15}}), den,
                "(t^3+t^11+t^14-t^15)/((1-t^4)(1-t^12))");
      f.h1 = gf(poly({{1, 1}, {1, 16}}), den, "(t+t^16)/((1-t^4)(1-t^12))");
      f.chi = gf(poly({{1, 1}, {-1, 11}, {-1, 13}, {1, 14}}), chi_den,
                 "(t-t^11-t^13+t^14)/((1+t^2)(1-t^12))");
      break;
    }
    case ParityCase::OE: {
      const P den = P::binomial(-1, 4) * P::binomial(-1, 12);
      const P chi_den = P::binomial(1, 2) * P::binomial(-1, 12);
      f.h0 = gf(poly({{1, 2}, {1, 11}}), den, "(t^2+t^11)/((1-t^4)(1-t^12))");
      f.h1 = gf(poly({{1, 4}, {1, 13}}), den, "(t^4+t^13)/((1-t^4)(1-t^12))");
      f.chi = gf(poly({{-1, 2}, {1, 11}}), chi_den, "(-t^2+t^11)/((1+t^2)(1-t^12))");
      break;
    }
  }
  return f;
}

std::vector<std::int64_t> series_coefficients(const RationalGeneratingFunction& g, unsigned kmax) {
  const std::int64_t d0 = g.denominator.at(0);
  if (d0 == 0) throw std::invalid_argument("series_coefficients: denominator vanishes at t = 0");
  std::vector<std::int64_t> c(kmax + 1, 0);
  for (std::size_t n = 0; n <= kmax; ++n) {
    std::int64_t acc = g.numerator.at(n);
    for (std::size_t i = 1; i <= n && i < g.denominator.size(); ++i) {
      acc -= g.denominator.coeffs[i] * c[n - i];
    }
    if (acc % d0 != 0) {
      throw std::domain_error("series_coefficients: non-integral coefficient at t^" +
                              std::to_string(n));
    }
    c[n] = acc / d0;
  }
  return c;
}

namespace {

unsigned floor_div(unsigned p, unsigned q) { return p / q; }
unsigned ceil_div(unsigned p, unsigned q) { return (p + q - 1) / q; }

}  // namespace

unsigned rank_formula(ParityCase c, RankKind which, unsigned k) {
  if (k == 0) throw std::invalid_argument("rank_formula: k must be positive");
  const bool a = which == RankKind::A;
  switch (c) {
    case ParityCase::OO:
      if (a) return k % 2 == 0 ? ceil_div(k + 1, 6) : 0;
      return k % 2 == 1 ? ceil_div(k, 6) : 0;
    case ParityCase::EE:
      if (a) return k % 2 == 0 ? floor_div(k, 6) : 0;
      return k % 2 == 1 ? floor_div(k, 6) : 0;
    case ParityCase::EO:
      if (a) {
        switch (k % 4) {
          case 2: return floor_div(k, 12);
          case 3: return ceil_div(k + 2, 12);
          default: return 0;
        }
      }
      switch (k % 4) {
        case 0: return floor_div(k - 1, 12);
        case 1: return ceil_div(k, 12);
        default: return 0;
      }
    case ParityCase::OE:
      if (a) {
        switch (k % 4) {
          case 2: return ceil_div(k, 12);
          case 3: return floor_div(k + 1, 12);
          default: return 0;
        }
      }
      switch (k % 4) {
        case 0: return ceil_div(k, 12);
        case 1: return floor_div(k, 12);
        default: return 0;
      }
  }
  throw std::invalid_argument("rank_formula: unknown case");
}

bool euler_relation_check(ParityCase c, unsigned kmax) {
  const CaseFormulas f = case_formulas(c);
  const auto a = series_coefficients(f.h0, kmax);
  const auto b = series_coefficients(f.h1, kmax);
  const auto chi = series_coefficients(f.chi, kmax);
  const auto m = static_cast<std::int64_t>(m_parity(c));
  const auto n = static_cast<std::int64_t>(n_parity(c));
  for (unsigned k = 0; k <= kmax; ++k) {
    const std::int64_t expected =
        sign_of_parity(n - 1) * sign_of_parity((n - m) * static_cast<std::int64_t>(k)) * (a[k] - b[k]);
    if (chi[k] != expected) return false;
  }
  return true;
}

std::int64_t total_degree(ParityCase c, unsigned k, std::int64_t m_rep, std::int64_t n_rep) {
  const auto odd = [](std::int64_t v) { return static_cast<unsigned>(((v % 2) + 2) % 2); };
  if (odd(m_rep) != m_parity(c) || odd(n_rep) != n_parity(c)) {
    throw std::invalid_argument("total_degree: (m, N) representatives do not match case " +
                                case_name(c));
  }
  if (n_rep < 2 * m_rep + 2) throw std::invalid_argument("total_degree: requires N >= 2m + 2");
  return static_cast<std::int64_t>(k) * (n_rep - m_rep - 2) + n_rep - 3;
}

std::pair<std::int64_t, std::int64_t> representatives(ParityCase c) {
  switch (c) {
    case ParityCase::OO: return {1, 5};
    case ParityCase::EE: return {2, 6};
    case ParityCase::EO: return {2, 7};
    case ParityCase::OE: return {1, 4};
  }
  throw std::invalid_argument("representatives: unknown case");
}

}  // namespace twoloop
