#pragma once

// Polynomial algebras in three variables used to encode two-loop hairy graphs.
//
// A monomial x1^k1 x2^k2 x3^k3 stands for the theta graph carrying k1, k2, k3
// hairs on its three edges. Two ambient algebras are modelled:
//   * commuting variables x1, x2, x3 (Q[x1,x2,x3]);
//   * odd variables xi1, xi2, xi3 with xi_i xi_j = -xi_j xi_i for i != j while
//     xi_i^2 stays nonzero. Monomials are kept in the sorted normal form
//     xi1^a xi2^b xi3^c and reordering contributes a sign.
// Each ambient algebra carries a symmetric and an antisymmetric S3 flavour,
// giving the four AlgebraFlavor values.

#include "twoloop/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace twoloop {

enum class VariableParity : std::uint8_t { Commuting, Odd };
enum class Symmetry : std::uint8_t { Symmetric, Antisymmetric };
enum class Side : std::uint8_t { Left, Right };

struct AlgebraFlavor {
  VariableParity parity = VariableParity::Commuting;
  Symmetry symmetry = Symmetry::Symmetric;

  [[nodiscard]] bool odd() const { return parity == VariableParity::Odd; }
  [[nodiscard]] bool antisymmetric() const { return symmetry == Symmetry::Antisymmetric; }
  /// "Sym[x]", "ASym[x]", "Sym<xi>" or "ASym<xi>".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const AlgebraFlavor&, const AlgebraFlavor&) = default;
};

inline constexpr AlgebraFlavor kSymX{VariableParity::Commuting, Symmetry::Symmetric};
inline constexpr AlgebraFlavor kASymX{VariableParity::Commuting, Symmetry::Antisymmetric};
inline constexpr AlgebraFlavor kSymXi{VariableParity::Odd, Symmetry::Symmetric};
inline constexpr AlgebraFlavor kASymXi{VariableParity::Odd, Symmetry::Antisymmetric};
inline constexpr std::array<AlgebraFlavor, 4> kAllFlavors{kSymX, kASymX, kSymXi, kASymXi};

/// Hair counts (k1, k2, k3), equivalently the exponents of a monomial.
struct ExponentTriple {
  std::array<unsigned, 3> k{};

  constexpr ExponentTriple() = default;
  constexpr ExponentTriple(unsigned k1, unsigned k2, unsigned k3) : k{k1, k2, k3} {}

  [[nodiscard]] constexpr unsigned operator[](std::size_t i) const { return k[i]; }
  [[nodiscard]] constexpr unsigned degree() const { return k[0] + k[1] + k[2]; }
  /// k1 >= k2 >= k3.
  [[nodiscard]] constexpr bool is_sorted() const { return k[0] >= k[1] && k[1] >= k[2]; }
  [[nodiscard]] std::string to_string() const;

  friend constexpr auto operator<=>(const ExponentTriple&, const ExponentTriple&) = default;
};

/// Homogeneous, finitely supported Q-combination of monomials in one flavour.
/// Stored coefficients are never zero; the zero element still carries its
/// degree so that grading checks stay meaningful.
class AlgebraElement {
 public:
  using Terms = std::map<ExponentTriple, Rational>;

  AlgebraElement(AlgebraFlavor flavor, unsigned degree) : flavor_(flavor), degree_(degree) {}

  static AlgebraElement monomial(AlgebraFlavor flavor, ExponentTriple exponents,
                                 const Rational& coeff = 1);
  static AlgebraElement constant(AlgebraFlavor flavor, const Rational& value);

  [[nodiscard]] AlgebraFlavor flavor() const { return flavor_; }
  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const ExponentTriple& e) const;
  /// Z/2 supergrading: degree mod 2 for odd variables, always 0 for commuting ones.
  [[nodiscard]] unsigned supergrading() const;

  /// Adds coeff * monomial; the monomial must have this element's degree.
  void add_term(const ExponentTriple& e, const Rational& coeff);

  /// Same support, different flavour tag; used when a product lands in a
  /// different symmetry type.
  [[nodiscard]] AlgebraElement with_flavor(AlgebraFlavor flavor) const;
  [[nodiscard]] AlgebraElement scaled(const Rational& factor) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, const AlgebraElement& f) {
    return f.scaled(c);
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void check_compatible(const AlgebraElement& o) const;

  AlgebraFlavor flavor_;
  unsigned degree_;
  Terms terms_;
};

/// Sorts a word over {1,2,3} into x1^a x2^b x3^c. For odd variables the sign
/// is (-1)^(number of swaps of distinct generators); commuting words get +1.
std::pair<ExponentTriple, int> normalize_word(std::span<const int> word, VariableParity parity);

/// Sign picked up when the word of `a` is followed by the word of `b` and the
/// concatenation is sorted.
int monomial_product_sign(const ExponentTriple& a, const ExponentTriple& b, VariableParity parity);

/// Full product in the ambient algebra. The symmetry tag of the result is the
/// product of the tags (antisymmetric * antisymmetric = symmetric).
AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g);

/// e1 * f (Side::Left) or f * e1 (Side::Right).
AlgebraElement mul_e1(const AlgebraElement& f, Side side);

/// Eigenvalue of A on a monomial: (-1)^(k1+k2+k3) for commuting variables and
/// (-1)^(sum k_i(k_i+1)/2) for odd ones.
int involution_sign(const ExponentTriple& e, VariableParity parity);
AlgebraElement involution_A(const AlgebraElement& f);

/// A(f g) == (-1)^(|f||g|) A(g) A(f). Only defined for odd variables.
bool check_antiautomorphism(const AlgebraElement& f, const AlgebraElement& g);

/// A permutation of {1,2,3}; image[i] is the 0-based image of variable i+1.
struct Permutation {
  std::array<unsigned, 3> image{0, 1, 2};

  static Permutation identity() { return {}; }
  /// Transposition of variables i and j (1-based).
  static Permutation transposition(unsigned i, unsigned j);
  static std::array<Permutation, 6> all();

  [[nodiscard]] int sign() const;
  /// (this o other)(i) = this(other(i)).
  [[nodiscard]] Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Renames variables by `perm`, renormalises, and twists by sign(perm) in the
/// antisymmetric flavours.
AlgebraElement s3_act(const Permutation& perm, const AlgebraElement& f);

/// Sign rule for swapping adjacent edges carrying a and b hairs:
/// x^(.., a, b, ..) -> sign * x^(.., b, a, ..).
int transposition_sign(AlgebraFlavor flavor, unsigned a, unsigned b);

/// True iff f is fixed by s3_act for every permutation.
bool is_s3_invariant(const AlgebraElement& f);

/// Signed S3-orbit sum of the monomial, rescaled so the sorted monomial has
/// coefficient 1. Returns the zero element when the orbit sum cancels.
/// Requires k1 >= k2 >= k3.
AlgebraElement symmetrize(const ExponentTriple& triple, AlgebraFlavor flavor);

/// All k1 >= k2 >= k3 of the given degree, in descending lexicographic order.
std::vector<ExponentTriple> sorted_triples(unsigned degree);

/// Triples whose symmetrizations form a basis of the degree-d part:
///   Sym[x]    all partitions into at most three parts;
///   ASym[x]   strict k1 > k2 > k3;
///   Sym<xi>   equal neighbours must be even;
///   ASym<xi>  equal neighbours must be odd.
std::vector<ExponentTriple> admissible_basis(AlgebraFlavor flavor, unsigned degree);
bool is_admissible(AlgebraFlavor flavor, const ExponentTriple& triple);

/// (f + A f) / 2.
AlgebraElement project_star_even(const AlgebraElement& f);

/// Coefficients in the basis e1^a e2^b e3^c, keyed by (a, b, c).
using ElementaryCoefficients = std::map<ExponentTriple, Rational>;

/// Expresses a symmetric polynomial of Sym[x] in elementary symmetric
/// polynomials. Throws std::invalid_argument for other flavours or
/// non-invariant input.
ElementaryCoefficients elementary_decompose(const AlgebraElement& f);
AlgebraElement reconstruct_from_elementary(const ElementaryCoefficients& coeffs, unsigned degree);

namespace named {
/// e1 = x1 + x2 + x3 in the symmetric flavour of the given parity.
AlgebraElement e1(VariableParity parity);
AlgebraElement e2();
AlgebraElement e3();
/// (x1 - x2)(x1 - x3)(x2 - x3).
AlgebraElement delta();
/// xi1 xi2 + xi2 xi3 + xi3 xi1.
AlgebraElement delta2();
/// xi1 xi2 xi3.
AlgebraElement delta3();
}  // namespace named

/// Text form such as "-1/2*x1^2*x2 + x3^3"; odd variables print as xi1..xi3.
/// Terms appear in descending lexicographic order of exponents.
std::string to_string(const AlgebraElement& f);

/// "(k1,k2,k3)" for symmetrizations, "[k1,k2,k3]" for antisymmetrizations.
std::string render_symmetrized(const ExponentTriple& triple, Symmetry symmetry);

}  // namespace twoloop
