#pragma once

// Orientation signs of hairy theta graphs computed from the orientation set.
//
// A theta graph has junction vertices B1 (left) and B2 (right) joined by three
// edges. Edge j carries k_j hairs; hair i on edge 1 consists of an internal
// vertex C'_i on the edge, an external vertex C_i and the hair edge c_i. The
// edge itself is cut into k_j + 1 segments: b_j (leaving B1) followed by c'_i
// (leaving C'_i). Edges 2 and 3 use the letters D and E. In defect 2 each
// junction carries a hair a_i ending at A_i; in defect 1 only B1 does.
//
// Orientation list:
//   defect 2: A1 A2 a1 a2 B1 B2 b1 b2 b3, then the C, D, E blocks
//   defect 1: A1 a1 B1 B2 b1 b2 b3, then blocks
//   defect 0: B1 B2 b1 b2 b3, then blocks
// where each block is (X_i x_i X'_i x'_i).
//
// Degrees: external vertices -m, internal vertices -N, edges N - 1.

#include "twoloop/algebra.hpp"
#include "twoloop/complex_builder.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twoloop {

enum class DegreeClass : std::uint8_t { ExternalVertex, InternalVertex, Edge };

enum class ElementRole : std::uint8_t {
  JunctionHairVertex,  ///< A_i
  JunctionHairEdge,    ///< a_i
  Junction,            ///< B_i
  FirstSegment,        ///< b_j
  HairVertex,          ///< C_i, D_i, E_i
  HairEdge,            ///< c_i, d_i, e_i
  EdgeVertex,          ///< C'_i, D'_i, E'_i
  Segment,             ///< c'_i, d'_i, e'_i
};

struct OrientationElement {
  ElementRole role;
  unsigned edge = 0;   ///< 1..3 for per-edge data, 0 otherwise
  unsigned index = 0;  ///< 1-based position (side for A, a, B; hair number otherwise)

  [[nodiscard]] DegreeClass degree_class() const;
  /// Parity of the degree in the given case: 1 if odd.
  [[nodiscard]] unsigned parity(ParityCase c) const;
  /// Printable name such as "A1", "b2", "D'3", "e'1".
  [[nodiscard]] std::string id() const;

  friend bool operator==(const OrientationElement&, const OrientationElement&) = default;
  friend auto operator<=>(const OrientationElement&, const OrientationElement&) = default;
};

struct OrientedThetaEncoding {
  unsigned defect = 0;
  ExponentTriple hairs;
  std::vector<OrientationElement> orientation;
};

/// Canonical encoding; throws std::invalid_argument for defect > 2.
OrientedThetaEncoding make_theta_encoding(unsigned defect, const ExponentTriple& hairs);

struct SymmetryOp {
  enum class Kind : std::uint8_t { VerticalReflection, EdgeTransposition };
  Kind kind = Kind::VerticalReflection;
  unsigned i = 0, j = 0;  ///< edges swapped by a transposition, 1-based

  static SymmetryOp reflection() { return {}; }
  /// Throws std::invalid_argument unless i != j in {1, 2, 3}.
  static SymmetryOp transposition(unsigned i, unsigned j);
  [[nodiscard]] std::string to_string() const;
};

/// Product over inversions (a < b, perm[a] > perm[b]) of (-1)^(p_a p_b).
/// perm[a] is the new position of element a. Throws std::invalid_argument on
/// a length mismatch or if perm is not a permutation.
int koszul_sign(std::span<const std::size_t> perm, std::span<const unsigned> parities);

/// (-1)^(N * reversed_edges).
int reversal_sign(std::size_t reversed_edges, ParityCase c);

/// Sign relating the graph g to its image under op, written in the canonical
/// orientation of the image. Throws std::invalid_argument for a reflection at
/// defect 1.
int symmetry_sign(const OrientedThetaEncoding& g, const SymmetryOp& op, ParityCase c);

/// Hair triple of the image of op.
ExponentTriple image_hairs(const ExponentTriple& hairs, const SymmetryOp& op);

/// Closed-form sign for the same question. Reflections are defined at defects
/// 0 and 2; transpositions at every defect. Throws std::invalid_argument
/// otherwise.
int lemma_sign_formula(const SymmetryOp& op, const ExponentTriple& hairs, unsigned defect,
                       ParityCase c);

struct SignGridCell {
  ParityCase parity_case;
  unsigned defect;
  SymmetryOp op;
  ExponentTriple hairs;
  int computed;
  int closed_form;
  [[nodiscard]] bool pass() const { return computed == closed_form; }
};

/// Every case, every applicable (defect, op) pair and every k_i <= max_exponent.
std::vector<SignGridCell> sign_verification_grid(unsigned max_exponent);

}  // namespace twoloop
