#include "twoloop/complex_builder.hpp"

#include "twoloop/errors.hpp"

#include <stdexcept>

namespace twoloop {

unsigned m_parity(ParityCase c) {
  return (c == ParityCase::OO || c == ParityCase::OE) ? 1U : 0U;
}

unsigned n_parity(ParityCase c) {
  return (c == ParityCase::OO || c == ParityCase::EO) ? 1U : 0U;
}

std::string case_name(ParityCase c) {
  switch (c) {
    case ParityCase::OO: return "oo";
    case ParityCase::EE: return "ee";
    case ParityCase::EO: return "eo";
    case ParityCase::OE: return "oe";
  }
  return "?";
}

std::optional<ParityCase> parse_case(std::string_view name) {
  for (ParityCase c : kAllCases) {
    if (case_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string case_description(ParityCase c) {
  auto word = [](unsigned p) { return p ? "odd" : "even"; };
  return std::string("m ") + word(m_parity(c)) + ", N " + word(n_parity(c));
}

AlgebraFlavor case_flavor(ParityCase c) {
  switch (c) {
    case ParityCase::OO: return kSymX;
    case ParityCase::EE: return kASymX;
    case ParityCase::EO: return kSymXi;
    case ParityCase::OE: return kASymXi;
  }
  throw std::invalid_argument("case_flavor: unknown case");
}

int c2_eigenvalue(ParityCase c) { return case_flavor(c).odd() ? 1 : -1; }
int c0_eigenvalue(ParityCase) { return 1; }

bool admitted_to_c2(ParityCase c, const ExponentTriple& triple) {
  return involution_sign(triple, case_flavor(c).parity) == c2_eigenvalue(c);
}

bool admitted_to_c0(ParityCase c, const ExponentTriple& triple) {
  return involution_sign(triple, case_flavor(c).parity) == c0_eigenvalue(c);
}

std::vector<BasisVector> chain_basis(ParityCase c, unsigned defect, unsigned t) {
  if (defect > 2) throw std::invalid_argument("chain_basis: defect must be 0, 1 or 2");
  if (t < defect) return {};
  const unsigned degree = t - defect;
  const AlgebraFlavor flavor = case_flavor(c);
  std::vector<BasisVector> basis;
  for (const ExponentTriple& triple : admissible_basis(flavor, degree)) {
    if (defect == 2 && !admitted_to_c2(c, triple)) continue;
    if (defect == 0 && !admitted_to_c0(c, triple)) continue;
    AlgebraElement element = symmetrize(triple, flavor);
    if (element.is_zero()) {
      throw ConsistencyError("admissible triple " + triple.to_string() + " symmetrizes to zero in " +
                             flavor.name());
    }
    basis.push_back({triple, std::move(element)});
  }
  return basis;
}

std::vector<Rational> coordinates(const AlgebraElement& g, std::span<const BasisVector> basis) {
  std::vector<Rational> coords;
  coords.reserve(basis.size());
  AlgebraElement rebuilt(g.flavor(), g.degree());
  for (const BasisVector& b : basis) {
    if (b.element.flavor() != g.flavor() || b.element.degree() != g.degree()) {
      throw std::invalid_argument("coordinates: basis and element live in different spaces");
    }
    // Each symmetrization has coefficient 1 on its own sorted monomial and 0 on
    // every other basis label.
    coords.push_back(g.coefficient(b.label));
    rebuilt += b.element.scaled(coords.back());
  }
  if (rebuilt != g) {
    throw ConsistencyError("coordinates: " + to_string(g) + " is not in the span of the basis");
  }
  return coords;
}

AlgebraElement apply_d2(ParityCase c, const AlgebraElement& f) {
  if (f.flavor() != case_flavor(c)) {
    throw std::invalid_argument("apply_d2: expected " + case_flavor(c).name() + ", got " +
                                f.flavor().name());
  }
  if (involution_A(f) != f.scaled(c2_eigenvalue(c))) {
    throw std::invalid_argument("apply_d2: argument is not in the A-eigenspace of C2");
  }
  const bool negative = (n_parity(c) + f.supergrading()) % 2 == 1;
  return mul_e1(f, Side::Right).scaled(negative ? -2 : 2);
}

AlgebraElement apply_d1(ParityCase c, const AlgebraElement& f) {
  if (f.flavor() != case_flavor(c)) {
    throw std::invalid_argument("apply_d1: expected " + case_flavor(c).name() + ", got " +
                                f.flavor().name());
  }
  const bool negative = (m_parity(c) * n_parity(c)) % 2 == 1;
  const AlgebraElement projected = project_star_even(mul_e1(f, Side::Left));
  return negative ? projected.scaled(-1) : projected;
}

namespace {

RationalMatrix differential_matrix(ParityCase c, const std::vector<BasisVector>& source,
                                   const std::vector<BasisVector>& target, bool is_d2) {
  RationalMatrix m(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const AlgebraElement image =
        is_d2 ? apply_d2(c, source[col].element) : apply_d1(c, source[col].element);
    if (target.empty()) {
      if (!image.is_zero()) {
        throw ConsistencyError("differential image " + to_string(image) + " has no target basis");
      }
      continue;
    }
    const std::vector<Rational> coords = coordinates(image, target);
    for (std::size_t row = 0; row < coords.size(); ++row) m.set(row, col, coords[row]);
  }
  return m;
}

}  // namespace

HodgeSlice build_slice(ParityCase c, unsigned t) {
  if (t == 0) {
    throw std::invalid_argument("build_slice: Hodge degree must be at least 1");
  }
  HodgeSlice s;
  s.parity_case = c;
  s.t = t;
  s.c2 = chain_basis(c, 2, t);
  s.c1 = chain_basis(c, 1, t);
  s.c0 = chain_basis(c, 0, t);
  s.d2 = differential_matrix(c, s.c2, s.c1, true);
  s.d1 = differential_matrix(c, s.c1, s.c0, false);
  return s;
}

}  // namespace twoloop
