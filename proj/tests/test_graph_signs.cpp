#include "twoloop/graph_signs.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace twoloop;

TEST_CASE("koszul sign examples") {
  const std::vector<unsigned> odd2{1, 1}, mixed{1, 0}, odd3{1, 1, 1};
  const std::vector<std::size_t> swap{1, 0}, rev3{2, 1, 0}, id3{0, 1, 2};
  CHECK(koszul_sign(swap, odd2) == -1);
  CHECK(koszul_sign(swap, mixed) == 1);
  CHECK(koszul_sign(rev3, odd3) == -1);
  CHECK(koszul_sign(id3, odd3) == 1);
  CHECK_THROWS_AS(koszul_sign(swap, odd3), std::invalid_argument);
  const std::vector<std::size_t> notperm{0, 0, 1};
  CHECK_THROWS_AS(koszul_sign(notperm, odd3), std::invalid_argument);
}

TEST_CASE("koszul sign is multiplicative") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    std::vector<unsigned> par(n);
    for (auto& p : par) p = rng() % 2;
    std::vector<std::size_t> p(n), q(n), qp(n);
    std::iota(p.begin(), p.end(), 0);
    std::iota(q.begin(), q.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    // Element a moves to p[a]; the element now at position p[a] then moves to q[p[a]].
    for (std::size_t a = 0; a < n; ++a) qp[a] = q[p[a]];
    std::vector<unsigned> moved(n);
    for (std::size_t a = 0; a < n; ++a) moved[p[a]] = par[a];
    CHECK(koszul_sign(qp, par) == koszul_sign(p, par) * koszul_sign(q, moved));
  }
}

TEST_CASE("reversal sign") {
  CHECK(reversal_sign(0, ParityCase::OO) == 1);
  CHECK(reversal_sign(1, ParityCase::OO) == -1);
  CHECK(reversal_sign(1, ParityCase::EO) == -1);
  CHECK(reversal_sign(1 + 2 + 0 + 3, ParityCase::EE) == 1);
  CHECK(reversal_sign(7, ParityCase::OE) == 1);
}

TEST_CASE("orientation lists") {
  const auto g2 = make_theta_encoding(2, {1, 0, 0});
  std::vector<std::string> ids;
  for (const auto& e : g2.orientation) ids.push_back(e.id());
  CHECK(ids == std::vector<std::string>{"A1", "A2", "a1", "a2", "B1", "B2", "b1", "b2", "b3",
                                        "C1", "c1", "C'1", "c'1"});
  CHECK(make_theta_encoding(1, {0, 0, 0}).orientation.size() == 7);
  CHECK(make_theta_encoding(0, {2, 1, 1}).orientation.size() == 5 + 4 * 4);
  CHECK_THROWS_AS(make_theta_encoding(3, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("symmetry ops") {
  CHECK(SymmetryOp::transposition(3, 1).i == 1);
  CHECK(SymmetryOp::transposition(3, 1).to_string() == "transpose(1,3)");
  CHECK(SymmetryOp::reflection().to_string() == "reflection");
  CHECK_THROWS_AS(SymmetryOp::transposition(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(SymmetryOp::transposition(0, 2), std::invalid_argument);
  CHECK(image_hairs({1, 2, 3}, SymmetryOp::transposition(1, 3)) == ExponentTriple{3, 2, 1});
  CHECK(image_hairs({1, 2, 3}, SymmetryOp::reflection()) == ExponentTriple{1, 2, 3});
}

TEST_CASE("symmetry signs from the orientation list") {
  const auto refl = SymmetryOp::reflection();
  CHECK(symmetry_sign(make_theta_encoding(2, {0, 0, 0}), refl, ParityCase::OO) == -1);
  CHECK(symmetry_sign(make_theta_encoding(0, {1, 0, 0}), refl, ParityCase::OO) == -1);
  CHECK_THROWS_AS(symmetry_sign(make_theta_encoding(1, {0, 0, 0}), refl, ParityCase::OO),
                  std::invalid_argument);
  const auto t12 = SymmetryOp::transposition(1, 2);
  for (ParityCase c : kAllCases) {
    const int n1 = n_parity(c) == 1 ? 1 : -1;
    const int mn = (m_parity(c) + n_parity(c)) % 2;
    for (unsigned d = 0; d <= 2; ++d) {
      for (const ExponentTriple h : {ExponentTriple{1, 1, 0}, ExponentTriple{3, 1, 2}}) {
        const int expected = n1 * ((h[0] * h[1] * mn) % 2 == 0 ? 1 : -1);
        CHECK(symmetry_sign(make_theta_encoding(d, h), t12, c) == expected);
      }
    }
  }
}

TEST_CASE("closed-form sign examples") {
  const auto refl = SymmetryOp::reflection();
  CHECK(lemma_sign_formula(refl, {1, 1, 1}, 2, ParityCase::OO) == 1);
  CHECK(lemma_sign_formula(refl, {2, 0, 0}, 0, ParityCase::EE) == 1);
  CHECK(lemma_sign_formula(SymmetryOp::transposition(1, 2), {1, 1, 0}, 0, ParityCase::EO) == -1);
  CHECK(lemma_sign_formula(refl, {0, 0, 0}, 2, ParityCase::OO) == -1);
  CHECK(lemma_sign_formula(refl, {1, 0, 0}, 0, ParityCase::OO) == -1);
  CHECK_THROWS_AS(lemma_sign_formula(refl, {0, 0, 0}, 1, ParityCase::OO), std::invalid_argument);
}

TEST_CASE("transpositions compose") {
  // (13) = (12)(23)(12) on hair triples and on signs.
  const auto t12 = SymmetryOp::transposition(1, 2), t23 = SymmetryOp::transposition(2, 3),
             t13 = SymmetryOp::transposition(1, 3);
  for (ParityCase c : kAllCases) {
    for (unsigned k1 = 0; k1 <= 3; ++k1) {
      for (unsigned k2 = 0; k2 <= 3; ++k2) {
        for (unsigned k3 = 0; k3 <= 3; ++k3) {
          const ExponentTriple h{k1, k2, k3};
          const auto h1 = image_hairs(h, t12), h2 = image_hairs(h1, t23);
          CHECK(image_hairs(h2, t12) == image_hairs(h, t13));
          const int composed = lemma_sign_formula(t12, h, 0, c) * lemma_sign_formula(t23, h1, 0, c) *
                               lemma_sign_formula(t12, h2, 0, c);
          CHECK(lemma_sign_formula(t13, h, 0, c) == composed);
        }
      }
    }
  }
}

TEST_CASE("sign grid passes for exponents up to 6") {
  const auto grid = sign_verification_grid(6);
  CHECK(grid.size() >= 4u * 5u * 343u);
  std::size_t failures = 0;
  for (const auto& cell : grid) {
    if (!cell.pass()) {
      ++failures;
      INFO(case_name(cell.parity_case) << " defect " << cell.defect << " " << cell.op.to_string()
                                       << " " << cell.hairs[0] << cell.hairs[1] << cell.hairs[2]);
      CHECK(cell.pass());
    }
  }
  CHECK(failures == 0);
}
