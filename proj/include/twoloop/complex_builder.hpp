#pragma once

// The two-loop hairy complex 0 -> C2 -> C1 -> C0 -> 0 at a fixed Hodge degree.
//
// C_i is spanned by theta graphs of defect i. At Hodge degree t a graph in C0
// carries all t hairs on the edges (polynomial degree t), a graph in C1 has
// one hair on the left junction vertex (degree t - 1) and a graph in C2 has a
// hair on each junction vertex (degree t - 2).
//
//   case  C2                 C1          C0
//   oo    Sym[x],    A = -1  Sym[x]      Sym[x],    A = +1, degree > 0
//   ee    ASym[x],   A = -1  ASym[x]     ASym[x],   A = +1
//   eo    Sym<xi>,   A = +1  Sym<xi>     Sym<xi>,   A = +1, degree > 0
//   oe    ASym<xi>,  A = +1  ASym<xi>    ASym<xi>,  A = +1
//
// Differentials, uniform over the four cases:
//   d2 f = (-1)^(N + |f|) * 2 * f e1
//   d1 f = (-1)^(mN) * (e1 f + A(e1 f)) / 2

#include "twoloop/algebra.hpp"
#include "twoloop/rational_matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twoloop {

/// Parities of (m, N). The names read m first: EO means m even, N odd.
enum class ParityCase : std::uint8_t { OO, EE, EO, OE };
inline constexpr std::array<ParityCase, 4> kAllCases{ParityCase::OO, ParityCase::EE,
                                                     ParityCase::EO, ParityCase::OE};

/// 0 for even, 1 for odd.
unsigned m_parity(ParityCase c);
unsigned n_parity(ParityCase c);
/// "oo", "ee", "eo" or "oe".
std::string case_name(ParityCase c);
std::optional<ParityCase> parse_case(std::string_view name);
/// Human-readable "m even, N odd" style description.
std::string case_description(ParityCase c);

AlgebraFlavor case_flavor(ParityCase c);

/// A-eigenvalue selecting C2 (-1 in the commuting cases, +1 otherwise) and C0 (+1).
int c2_eigenvalue(ParityCase c);
int c0_eigenvalue(ParityCase c);
bool admitted_to_c2(ParityCase c, const ExponentTriple& triple);
bool admitted_to_c0(ParityCase c, const ExponentTriple& triple);

struct BasisVector {
  ExponentTriple label;    ///< sorted triple whose symmetrization this is
  AlgebraElement element;  ///< the symmetrization itself
};

struct HodgeSlice {
  ParityCase parity_case = ParityCase::OO;
  unsigned t = 0;
  std::vector<BasisVector> c2, c1, c0;
  RationalMatrix d2;  ///< |C1| x |C2|
  RationalMatrix d1;  ///< |C0| x |C1|
};

/// Basis of C_defect at Hodge degree t, in admissible-basis order.
std::vector<BasisVector> chain_basis(ParityCase c, unsigned defect, unsigned t);

/// Coordinates of g in the given symmetrized basis. Throws ConsistencyError
/// when g is not in the span.
std::vector<Rational> coordinates(const AlgebraElement& g, std::span<const BasisVector> basis);

/// Differential on the defect-2 space. Throws std::invalid_argument if f has the
/// wrong flavour or A-eigenvalue.
AlgebraElement apply_d2(ParityCase c, const AlgebraElement& f);
/// Differential on the defect-1 space. Throws std::invalid_argument on a flavour mismatch.
AlgebraElement apply_d1(ParityCase c, const AlgebraElement& f);

/// Throws std::invalid_argument for t == 0.
HodgeSlice build_slice(ParityCase c, unsigned t);

}  // namespace twoloop
