#include "twoloop/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twoloop {

namespace {

int parity_sign(unsigned long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

AlgebraElement power(const AlgebraElement& base, unsigned n) {
  AlgebraElement result = AlgebraElement::constant(base.flavor(), 1);
  for (unsigned i = 0; i < n; ++i) result = multiply(result, base);
  return result;
}

const char* variable_name(VariableParity parity) {
  return parity == VariableParity::Odd ? "xi" : "x";
}

}  // namespace

std::string AlgebraFlavor::name() const {
  std::string n = antisymmetric() ? "ASym" : "Sym";
  return n + (odd() ? "<xi>" : "[x]");
}

std::string ExponentTriple::to_string() const {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) +
         ")";
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::monomial(AlgebraFlavor flavor, ExponentTriple exponents,
                                        const Rational& coeff) {
  AlgebraElement f(flavor, exponents.degree());
  f.add_term(exponents, coeff);
  return f;
}

AlgebraElement AlgebraElement::constant(AlgebraFlavor flavor, const Rational& value) {
  return monomial(flavor, ExponentTriple{0, 0, 0}, value);
}

Rational AlgebraElement::coefficient(const ExponentTriple& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational{} : it->second;
}

unsigned AlgebraElement::supergrading() const { return flavor_.odd() ? degree_ % 2 : 0; }

void AlgebraElement::add_term(const ExponentTriple& e, const Rational& coeff) {
  if (e.degree() != degree_) {
    throw std::invalid_argument("AlgebraElement: monomial " + e.to_string() +
                                " does not have degree " + std::to_string(degree_));
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::with_flavor(AlgebraFlavor flavor) const {
  if (flavor.parity != flavor_.parity) {
    throw std::invalid_argument("AlgebraElement::with_flavor: variable parity mismatch");
  }
  AlgebraElement f = *this;
  f.flavor_ = flavor;
  return f;
}

AlgebraElement AlgebraElement::scaled(const Rational& factor) const {
  AlgebraElement f(flavor_, degree_);
  if (factor.is_zero()) return f;
  for (const auto& [e, c] : terms_) f.terms_.emplace(e, c * factor);
  return f;
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (o.flavor_ != flavor_) {
    throw std::invalid_argument("AlgebraElement: flavour mismatch " + flavor_.name() + " vs " +
                                o.flavor_.name());
  }
  if (o.degree_ != degree_) {
    throw std::invalid_argument("AlgebraElement: mixed degrees " + std::to_string(degree_) +
                                " and " + std::to_string(o.degree_));
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

// ---------------------------------------------------------------------------
// Products and normal forms

std::pair<ExponentTriple, int> normalize_word(std::span<const int> word, VariableParity parity) {
  std::array<unsigned, 3> counts{};
  unsigned long long inversions = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int g = word[i];
    if (g < 1 || g > 3) {
      throw std::invalid_argument("normalize_word: generator index " + std::to_string(g) +
                                  " outside {1,2,3}");
    }
    // Every earlier letter with a larger index forms an inversion with this one.
    for (int h = g + 1; h <= 3; ++h) inversions += counts[h - 1];
    ++counts[g - 1];
  }
  const int sign = parity == VariableParity::Odd ? parity_sign(inversions) : 1;
  return {ExponentTriple{counts[0], counts[1], counts[2]}, sign};
}

int monomial_product_sign(const ExponentTriple& a, const ExponentTriple& b,
                          VariableParity parity) {
  if (parity == VariableParity::Commuting) return 1;
  const unsigned long long inv = static_cast<unsigned long long>(a[1]) * b[0] +
                                 static_cast<unsigned long long>(a[2]) * b[0] +
                                 static_cast<unsigned long long>(a[2]) * b[1];
  return parity_sign(inv);
}

AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g) {
  if (f.flavor().parity != g.flavor().parity) {
    throw std::invalid_argument("multiply: operands live in different ambient algebras");
  }
  const bool anti = f.flavor().antisymmetric() != g.flavor().antisymmetric();
  const AlgebraFlavor flavor{f.flavor().parity, anti ? Symmetry::Antisymmetric : Symmetry::Symmetric};
  AlgebraElement product(flavor, f.degree() + g.degree());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      const ExponentTriple sum{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
      const int s = monomial_product_sign(a, b, flavor.parity);
      product.add_term(sum, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return product;
}

AlgebraElement mul_e1(const AlgebraElement& f, Side side) {
  const AlgebraElement e = named::e1(f.flavor().parity);
  return side == Side::Left ? multiply(e, f) : multiply(f, e);
}

int involution_sign(const ExponentTriple& e, VariableParity parity) {
  if (parity == VariableParity::Commuting) return parity_sign(e.degree());
  unsigned long long s = 0;
  for (unsigned k : e.k) s += static_cast<unsigned long long>(k) * (k + 1) / 2;
  return parity_sign(s);
}

AlgebraElement involution_A(const AlgebraElement& f) {
  AlgebraElement r(f.flavor(), f.degree());
  for (const auto& [e, c] : f.terms()) {
    r.add_term(e, involution_sign(e, f.flavor().parity) > 0 ? c : -c);
  }
  return r;
}

bool check_antiautomorphism(const AlgebraElement& f, const AlgebraElement& g) {
  if (!f.flavor().odd() || !g.flavor().odd()) {
    throw std::invalid_argument("check_antiautomorphism: requires odd variables");
  }
  const AlgebraElement lhs = involution_A(multiply(f, g));
  AlgebraElement rhs = multiply(involution_A(g), involution_A(f));
  if ((f.supergrading() * g.supergrading()) % 2 == 1) rhs = rhs.scaled(-1);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// S3 action

Permutation Permutation::transposition(unsigned i, unsigned j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) {
    throw std::invalid_argument("Permutation::transposition: need distinct i, j in {1,2,3}");
  }
  Permutation p;
  std::swap(p.image[i - 1], p.image[j - 1]);
  return p;
}

std::array<Permutation, 6> Permutation::all() {
  return {Permutation{{0, 1, 2}}, Permutation{{1, 0, 2}}, Permutation{{0, 2, 1}},
          Permutation{{2, 1, 0}}, Permutation{{1, 2, 0}}, Permutation{{2, 0, 1}}};
}

int Permutation::sign() const {
  int s = 1;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (image[i] > image[j]) s = -s;
    }
  }
  return s;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation p;
  for (int i = 0; i < 3; ++i) p.image[i] = image[other.image[i]];
  return p;
}

AlgebraElement s3_act(const Permutation& perm, const AlgebraElement& f) {
  const bool odd = f.flavor().odd();
  const int twist = f.flavor().antisymmetric() ? perm.sign() : 1;
  AlgebraElement r(f.flavor(), f.degree());
  for (const auto& [e, c] : f.terms()) {
    // The renamed word is a block of e[0] copies of perm(1), then e[1] copies
    // of perm(2), then e[2] copies of perm(3).
    ExponentTriple renamed;
    unsigned long long inversions = 0;
    for (int i = 0; i < 3; ++i) {
      renamed.k[perm.image[i]] = e[i];
      for (int j = i + 1; j < 3; ++j) {
        if (perm.image[i] > perm.image[j]) inversions += static_cast<unsigned long long>(e[i]) * e[j];
      }
    }
    const int s = twist * (odd ? parity_sign(inversions) : 1);
    r.add_term(renamed, s > 0 ? c : -c);
  }
  return r;
}

int transposition_sign(AlgebraFlavor flavor, unsigned a, unsigned b) {
  const int base = flavor.odd() ? parity_sign(static_cast<unsigned long long>(a) * b) : 1;
  return flavor.antisymmetric() ? -base : base;
}

bool is_s3_invariant(const AlgebraElement& f) {
  // The two adjacent transpositions generate S3.
  return s3_act(Permutation::transposition(1, 2), f) == f &&
         s3_act(Permutation::transposition(2, 3), f) == f;
}

AlgebraElement symmetrize(const ExponentTriple& triple, AlgebraFlavor flavor) {
  if (!triple.is_sorted()) {
    throw std::invalid_argument("symmetrize: expected k1 >= k2 >= k3, got " + triple.to_string());
  }
  const AlgebraElement mono = AlgebraElement::monomial(flavor, triple);
  AlgebraElement orbit(flavor, triple.degree());
  for (const Permutation& p : Permutation::all()) orbit += s3_act(p, mono);
  if (orbit.is_zero()) return orbit;
  const Rational lead = orbit.coefficient(triple);
  if (lead.is_zero()) {
    throw std::logic_error("symmetrize: nonzero orbit sum without its sorted monomial");
  }
  return orbit.scaled(lead.inverse());
}

std::vector<ExponentTriple> sorted_triples(unsigned degree) {
  std::vector<ExponentTriple> out;
  for (unsigned k1 = degree + 1; k1-- > 0;) {
    if (3 * k1 < degree) break;
    const unsigned rest = degree - k1;
    for (unsigned k2 = std::min(k1, rest) + 1; k2-- > 0;) {
      const unsigned k3 = rest - k2;
      if (k3 > k2) break;
      out.emplace_back(k1, k2, k3);
    }
  }
  return out;
}

bool is_admissible(AlgebraFlavor flavor, const ExponentTriple& t) {
  if (!t.is_sorted()) return false;
  const bool commuting = !flavor.odd();
  for (int i = 0; i < 2; ++i) {
    if (t[i] != t[i + 1]) continue;
    if (commuting) {
      if (flavor.antisymmetric()) return false;
      continue;
    }
    const bool even = t[i] % 2 == 0;
    if (flavor.antisymmetric() == even) return false;
  }
  return true;
}

std::vector<ExponentTriple> admissible_basis(AlgebraFlavor flavor, unsigned degree) {
  std::vector<ExponentTriple> out;
  for (const ExponentTriple& t : sorted_triples(degree)) {
    if (is_admissible(flavor, t)) out.push_back(t);
  }
  return out;
}

AlgebraElement project_star_even(const AlgebraElement& f) {
  return (f + involution_A(f)).scaled(Rational(1, 2));
}

// ---------------------------------------------------------------------------
// Elementary symmetric polynomials

ElementaryCoefficients elementary_decompose(const AlgebraElement& f) {
  if (f.flavor() != kSymX) {
    throw std::invalid_argument("elementary_decompose: expected Sym[x], got " + f.flavor().name());
  }
  if (!is_s3_invariant(f)) {
    throw std::invalid_argument("elementary_decompose: polynomial is not symmetric");
  }
  ElementaryCoefficients out;
  AlgebraElement rest = f;
  while (!rest.is_zero()) {
    // The lexicographically largest monomial of a symmetric polynomial is sorted.
    const auto& [lead, c] = *rest.terms().rbegin();
    const ExponentTriple abc{lead[0] - lead[1], lead[1] - lead[2], lead[2]};
    const Rational coeff = c;
    out.emplace(abc, coeff);
    rest -= multiply(multiply(power(named::e1(VariableParity::Commuting), abc[0]),
                              power(named::e2(), abc[1])),
                     power(named::e3(), abc[2]))
                .scaled(coeff);
  }
  return out;
}

AlgebraElement reconstruct_from_elementary(const ElementaryCoefficients& coeffs, unsigned degree) {
  AlgebraElement f(kSymX, degree);
  for (const auto& [abc, c] : coeffs) {
    if (abc[0] + 2 * abc[1] + 3 * abc[2] != degree) {
      throw std::invalid_argument("reconstruct_from_elementary: term " + abc.to_string() +
                                  " has the wrong weight");
    }
    f += multiply(multiply(power(named::e1(VariableParity::Commuting), abc[0]),
                           power(named::e2(), abc[1])),
                  power(named::e3(), abc[2]))
             .scaled(c);
  }
  return f;
}

namespace named {

AlgebraElement e1(VariableParity parity) {
  AlgebraElement f(AlgebraFlavor{parity, Symmetry::Symmetric}, 1);
  f.add_term({1, 0, 0}, 1);
  f.add_term({0, 1, 0}, 1);
  f.add_term({0, 0, 1}, 1);
  return f;
}

AlgebraElement e2() {
  AlgebraElement f(kSymX, 2);
  f.add_term({1, 1, 0}, 1);
  f.add_term({1, 0, 1}, 1);
  f.add_term({0, 1, 1}, 1);
  return f;
}

AlgebraElement e3() { return AlgebraElement::monomial(kSymX, {1, 1, 1}); }

AlgebraElement delta() {
  auto linear = [](ExponentTriple plus, ExponentTriple minus) {
    AlgebraElement f(kSymX, 1);
    f.add_term(plus, 1);
    f.add_term(minus, -1);
    return f;
  };
  const AlgebraElement x12 = linear({1, 0, 0}, {0, 1, 0});
  const AlgebraElement x13 = linear({1, 0, 0}, {0, 0, 1});
  const AlgebraElement x23 = linear({0, 1, 0}, {0, 0, 1});
  return multiply(multiply(x12, x13), x23).with_flavor(kASymX);
}

AlgebraElement delta2() {
  AlgebraElement f(kASymXi, 2);
  for (const auto& word : {std::array<int, 2>{1, 2}, {2, 3}, {3, 1}}) {
    const auto [e, s] = normalize_word(word, VariableParity::Odd);
    f.add_term(e, s);
  }
  return f;
}

AlgebraElement delta3() { return AlgebraElement::monomial(kASymXi, {1, 1, 1}); }

}  // namespace named

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const AlgebraElement& f) {
  if (f.is_zero()) return "0";
  const char* var = variable_name(f.flavor().parity);
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    bool any = false;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (any) mono << '*';
      mono << var << (i + 1);
      if (e[i] > 1) mono << '^' << e[i];
      any = true;
    }
    const Rational mag = c.abs();
    if (!any) {
      os << mag;
    } else if (mag == Rational(1)) {
      os << mono.str();
    } else {
      os << mag << '*' << mono.str();
    }
  }
  return os.str();
}

std::string render_symmetrized(const ExponentTriple& t, Symmetry symmetry) {
  const bool anti = symmetry == Symmetry::Antisymmetric;
  return std::string(anti ? "[" : "(") + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + (anti ? "]" : ")");
}

}  // namespace twoloop
