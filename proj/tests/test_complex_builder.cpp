#include "twoloop/complex_builder.hpp"
#include "twoloop/errors.hpp"
#include "twoloop/graph_signs.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace twoloop;

namespace {

std::array<std::size_t, 3> dims(const HodgeSlice& s) { return {s.c2.size(), s.c1.size(), s.c0.size()}; }

}  // namespace

TEST_CASE("case helpers") {
  CHECK(m_parity(ParityCase::EO) == 0);
  CHECK(n_parity(ParityCase::EO) == 1);
  CHECK(m_parity(ParityCase::OE) == 1);
  CHECK(n_parity(ParityCase::OE) == 0);
  CHECK(parse_case("eo") == ParityCase::EO);
  CHECK_FALSE(parse_case("xx").has_value());
  CHECK(case_description(ParityCase::EO) == "m even, N odd");
  CHECK(case_flavor(ParityCase::OO) == kSymX);
  CHECK(case_flavor(ParityCase::EE) == kASymX);
  CHECK(case_flavor(ParityCase::EO) == kSymXi);
  CHECK(case_flavor(ParityCase::OE) == kASymXi);
}

TEST_CASE("slice dimensions") {
  CHECK(dims(build_slice(ParityCase::OO, 3)) == std::array<std::size_t, 3>{1, 2, 0});
  const HodgeSlice eo1 = build_slice(ParityCase::EO, 1);
  CHECK(dims(eo1) == std::array<std::size_t, 3>{0, 1, 0});
  CHECK(eo1.c1.front().label == ExponentTriple{0, 0, 0});
  const HodgeSlice oe2 = build_slice(ParityCase::OE, 2);
  CHECK(dims(oe2) == std::array<std::size_t, 3>{0, 0, 1});
  CHECK(oe2.c0.front().element == named::delta2());
  CHECK_THROWS_AS(build_slice(ParityCase::OO, 0), std::invalid_argument);
}

TEST_CASE("differential examples") {
  const auto e1 = named::e1(VariableParity::Commuting);
  CHECK(apply_d2(ParityCase::OO, e1) == multiply(e1, e1).scaled(-2));

  const auto delta = named::delta();
  CHECK(apply_d2(ParityCase::EE, delta) == multiply(e1, delta).scaled(2));

  const HodgeSlice eo6 = build_slice(ParityCase::EO, 6);
  REQUIRE(eo6.c2.size() == 2);
  const auto f = eo6.c2.front().element;
  CHECK(apply_d2(ParityCase::EO, f) == mul_e1(f, Side::Right).scaled(-2));

  CHECK(apply_d1(ParityCase::OO, AlgebraElement::constant(kSymX, 1)).is_zero());
  CHECK(apply_d1(ParityCase::EO, AlgebraElement::constant(kSymXi, 1)).is_zero());
  CHECK(apply_d1(ParityCase::EO, mul_e1(f, Side::Right)).is_zero());
  std::size_t nonzero = 0;
  for (const auto& g : eo6.c1) {
    const auto image = apply_d1(ParityCase::EO, g.element);
    CHECK(image.degree() == 6);
    CHECK(involution_A(image) == image);
    nonzero += image.is_zero() ? 0 : 1;
  }
  CHECK(nonzero > 0);
}

TEST_CASE("differential argument checks") {
  // x1 + x2 + x3 is not in the defect-2 space of EE (wrong flavour).
  CHECK_THROWS_AS(apply_d2(ParityCase::EE, named::e1(VariableParity::Commuting)),
                  std::invalid_argument);
  // e2 is even, so it is not in C2 for OO.
  CHECK_THROWS_AS(apply_d2(ParityCase::OO, named::e2()), std::invalid_argument);
  CHECK_THROWS_AS(apply_d1(ParityCase::OE, named::e2()), std::invalid_argument);
}

TEST_CASE("coordinates reconstruct and reject elements outside the span") {
  const HodgeSlice s = build_slice(ParityCase::OO, 4);
  const auto g = multiply(named::e2(), named::e2()).scaled(3);
  const auto coords = coordinates(g, s.c0);
  REQUIRE(coords.size() == s.c0.size());
  AlgebraElement rebuilt(kSymX, 4);
  for (std::size_t i = 0; i < coords.size(); ++i) rebuilt += s.c0[i].element.scaled(coords[i]);
  CHECK(rebuilt == g);
  CHECK_THROWS_AS(coordinates(AlgebraElement::monomial(kSymX, {3, 0, 0}), s.c1),
                  ConsistencyError);
}

TEST_CASE("d1 d2 = 0 and d2 is injective") {
  for (ParityCase c : kAllCases) {
    for (unsigned t = 1; t <= 40; ++t) {
      const HodgeSlice s = build_slice(c, t);
      INFO(case_name(c) << " t=" << t);
      CHECK(is_zero_composition(s.d1, s.d2));
      CHECK(kernel_dim(s.d2) == 0);
      CHECK(s.d2.rows() == s.c1.size());
      CHECK(s.d2.cols() == s.c2.size());
      CHECK(s.d1.rows() == s.c0.size());
      CHECK(s.d1.cols() == s.c1.size());
    }
  }
}

TEST_CASE("polynomial degrees and eigenvalues of the chain groups") {
  for (ParityCase c : kAllCases) {
    for (unsigned t = 1; t <= 16; ++t) {
      const HodgeSlice s = build_slice(c, t);
      for (const auto& b : s.c2) {
        CHECK(b.element.degree() == t - 2);
        CHECK(involution_A(b.element) == b.element.scaled(c2_eigenvalue(c)));
      }
      for (const auto& b : s.c1) CHECK(b.element.degree() == t - 1);
      for (const auto& b : s.c0) {
        CHECK(b.element.degree() == t);
        CHECK(involution_A(b.element) == b.element);
      }
    }
  }
}

TEST_CASE("excluded triples account for the full admissible count") {
  for (ParityCase c : kAllCases) {
    for (unsigned t = 2; t <= 30; ++t) {
      const auto all2 = admissible_basis(case_flavor(c), t - 2);
      std::size_t excluded = 0;
      for (const auto& tr : all2) excluded += admitted_to_c2(c, tr) ? 0 : 1;
      CHECK(chain_basis(c, 2, t).size() + excluded == all2.size());
      const auto all0 = admissible_basis(case_flavor(c), t);
      excluded = 0;
      for (const auto& tr : all0) excluded += admitted_to_c0(c, tr) ? 0 : 1;
      CHECK(chain_basis(c, 0, t).size() + excluded == all0.size());
    }
  }
}

TEST_CASE("admission matches the reflection sign") {
  for (ParityCase c : kAllCases) {
    for (unsigned d = 0; d <= 12; ++d) {
      for (unsigned k1 = 0; k1 <= d; ++k1) {
        for (unsigned k2 = 0; k1 + k2 <= d; ++k2) {
          const ExponentTriple h{k1, k2, d - k1 - k2};
          const auto refl = SymmetryOp::reflection();
          CHECK(admitted_to_c2(c, h) == (symmetry_sign(make_theta_encoding(2, h), refl, c) == 1));
          CHECK(admitted_to_c0(c, h) == (symmetry_sign(make_theta_encoding(0, h), refl, c) == 1));
        }
      }
    }
  }
}

TEST_CASE("image of d2 in the odd cases is spanned by f e1 over C2") {
  for (ParityCase c : {ParityCase::EO, ParityCase::OE}) {
    for (unsigned t = 2; t <= 24; ++t) {
      const HodgeSlice s = build_slice(c, t);
      std::vector<std::vector<Rational>> cols;
      for (const auto& b : s.c2) cols.push_back(coordinates(mul_e1(b.element, Side::Right), s.c1));
      const auto m = RationalMatrix::from_columns(s.c1.size(), cols);
      CHECK(rank(m) == rank(s.d2));
      CHECK(rank(m.hstack(s.d2)) == rank(s.d2));
    }
  }
}
