#include "oracles.hpp"
#include "twoloop/closed_forms.hpp"
#include "twoloop/homology.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace twoloop;

namespace {

using Terms = std::vector<std::pair<std::int64_t, unsigned>>;
using Factors = std::vector<std::pair<int, unsigned>>;

std::vector<std::int64_t> minus_constant(std::vector<std::int64_t> s) {
  s[0] -= 1;
  return s;
}

}  // namespace

TEST_CASE("IntPolynomial arithmetic") {
  using P = IntPolynomial;
  const P a = P::binomial(-1, 2);
  const P b = P::binomial(1, 1);
  CHECK((a * b).coeffs == std::vector<std::int64_t>{1, 1, -1, -1});
  CHECK((a - a).coeffs.empty());
  CHECK(a + P::monomial(1, 2) == P::monomial(1, 0));
  CHECK(P::monomial(0, 5).coeffs.empty());
}

TEST_CASE("series agree with geometric expansion") {
  constexpr unsigned K = 60;
  const Factors d2_6{{-1, 2}, {-1, 6}}, c1_6{{1, 1}, {-1, 6}};
  const Factors d4_12{{-1, 4}, {-1, 12}}, c2_12{{1, 2}, {-1, 12}};

  auto f = case_formulas(ParityCase::OO);
  CHECK(series_coefficients(f.h0, K) == minus_constant(oracle::geometric_expand({{1, 0}}, d2_6, K)));
  CHECK(series_coefficients(f.h1, K) == oracle::geometric_expand({{1, 1}}, d2_6, K));
  CHECK(series_coefficients(f.chi, K) == minus_constant(oracle::geometric_expand({{1, 0}}, c1_6, K)));

  f = case_formulas(ParityCase::EE);
  CHECK(series_coefficients(f.h0, K) == oracle::geometric_expand({{1, 6}}, d2_6, K));
  CHECK(series_coefficients(f.h1, K) == oracle::geometric_expand({{1, 7}}, d2_6, K));
  CHECK(series_coefficients(f.chi, K) == oracle::geometric_expand({{-1, 6}}, c1_6, K));

  f = case_formulas(ParityCase::EO);
  CHECK(series_coefficients(f.h0, K) ==
        oracle::geometric_expand({{1, 3}, {1, 11}, {1, 14}, {-1, 15}}, d4_12, K));
  CHECK(series_coefficients(f.h1, K) == oracle::geometric_expand({{1, 1}, {1, 16}}, d4_12, K));
  CHECK(series_coefficients(f.chi, K) ==
        oracle::geometric_expand({{1, 1}, {-1, 11}, {-1, 13}, {1, 14}}, c2_12, K));

  f = case_formulas(ParityCase::OE);
  CHECK(series_coefficients(f.h0, K) == oracle::geometric_expand({{1, 2}, {1, 11}}, d4_12, K));
  CHECK(series_coefficients(f.h1, K) == oracle::geometric_expand({{1, 4}, {1, 13}}, d4_12, K));
  CHECK(series_coefficients(f.chi, K) == oracle::geometric_expand({{-1, 2}, {1, 11}}, c2_12, K));
}

TEST_CASE("series at selected coefficients") {
  const auto oo = series_coefficients(case_formulas(ParityCase::OO).h0, 12);
  CHECK(oo[0] == 0);
  CHECK(oo[2] == 1);
  CHECK(oo[6] == 2);
  CHECK(oo[12] == 3);
  const auto eo = series_coefficients(case_formulas(ParityCase::EO).h0, 11);
  CHECK(eo[3] == 1);
  CHECK(eo[11] == 2);
}

TEST_CASE("series input checks") {
  RationalGeneratingFunction bad{IntPolynomial::monomial(1, 0), IntPolynomial::monomial(1, 1), ""};
  CHECK_THROWS_AS(series_coefficients(bad, 3), std::invalid_argument);
  RationalGeneratingFunction half{IntPolynomial::monomial(1, 0), IntPolynomial::monomial(2, 0), ""};
  CHECK_THROWS_AS(series_coefficients(half, 3), std::domain_error);
}

TEST_CASE("rank formulas at selected k") {
  CHECK(rank_formula(ParityCase::OO, RankKind::A, 6) == 2);
  CHECK(rank_formula(ParityCase::OO, RankKind::B, 7) == 2);
  CHECK(rank_formula(ParityCase::EE, RankKind::A, 12) == 2);
  CHECK(rank_formula(ParityCase::EO, RankKind::A, 11) == 2);
  CHECK(rank_formula(ParityCase::OE, RankKind::B, 13) == 1);
  CHECK_THROWS_AS(rank_formula(ParityCase::OO, RankKind::A, 0), std::invalid_argument);
}

TEST_CASE("rank formulas agree with the series up to k = 200") {
  for (ParityCase c : kAllCases) {
    const auto f = case_formulas(c);
    const auto a = series_coefficients(f.h0, 200);
    const auto b = series_coefficients(f.h1, 200);
    for (unsigned k = 1; k <= 200; ++k) {
      INFO(case_name(c) << " k=" << k);
      CHECK(rank_formula(c, RankKind::A, k) == a[k]);
      CHECK(rank_formula(c, RankKind::B, k) == b[k]);
    }
  }
}

TEST_CASE("Euler relation up to k = 200") {
  for (ParityCase c : kAllCases) CHECK(euler_relation_check(c, 200));
}

TEST_CASE("total degree") {
  CHECK(total_degree(ParityCase::OO, 1, 1, 5) == 4);
  CHECK(total_degree(ParityCase::EO, 2, 2, 7) == 10);
  CHECK_THROWS_AS(total_degree(ParityCase::OO, 1, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(total_degree(ParityCase::OO, 1, 3, 5), std::invalid_argument);
  for (ParityCase c : kAllCases) {
    const auto [m, n] = representatives(c);
    CHECK(static_cast<unsigned>(m % 2) == m_parity(c));
    CHECK(static_cast<unsigned>(n % 2) == n_parity(c));
    CHECK(n >= 2 * m + 2);
  }
}

TEST_CASE("brute force matches the closed forms for t <= 40") {
  for (ParityCase c : kAllCases) {
    const auto f = case_formulas(c);
    const auto a = series_coefficients(f.h0, 40);
    const auto b = series_coefficients(f.h1, 40);
    const auto chi = series_coefficients(f.chi, 40);
    for (const RankRow& r : rank_rows_parallel(c, 40)) {
      INFO(case_name(c) << " t=" << r.t);
      CHECK(static_cast<std::int64_t>(r.a) == a[r.t]);
      CHECK(static_cast<std::int64_t>(r.b) == b[r.t]);
      CHECK(r.chi == chi[r.t]);
    }
  }
}
