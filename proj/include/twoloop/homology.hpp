#pragma once

#include "twoloop/complex_builder.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace twoloop {

struct RankRow {
  unsigned t = 0;
  std::size_t a = 0;   ///< rank of H at defect 0
  std::size_t b = 0;   ///< rank of H at defect 1
  std::size_t h2 = 0;  ///< rank of H at defect 2
  std::int64_t chi = 0;
  std::array<std::size_t, 3> dims{};   ///< |C2|, |C1|, |C0|
  std::array<std::size_t, 2> ranks{};  ///< rank d2, rank d1

  friend bool operator==(const RankRow&, const RankRow&) = default;
};

/// Throws ConsistencyError if d1 * d2 != 0.
RankRow homology_ranks(const HodgeSlice& slice);

/// (-1)^(total degree of C0) * (|C0| - |C1| + |C2|).
std::int64_t euler_characteristic(const HodgeSlice& slice);

/// Explicit homology generators at Hodge degree t, as listed for each case.
struct HomologyGenerators {
  std::vector<AlgebraElement> h0;  ///< elements of C0 (degree t)
  std::vector<AlgebraElement> h1;  ///< elements of C1 (degree t - 1)
  std::vector<std::string> h0_labels;
  std::vector<std::string> h1_labels;
};

HomologyGenerators printed_homology_generators(ParityCase c, unsigned t);

struct BasisCheckReport {
  bool ok = true;
  std::size_t expected_h0 = 0, expected_h1 = 0;
  std::size_t listed_h0 = 0, listed_h1 = 0;
  std::vector<std::string> problems;
};

/// Checks that the generators lie in the right chain groups, are cycles, have
/// the expected count, and are independent modulo the incoming boundary.
BasisCheckReport check_homology_basis(const HodgeSlice& slice, const HomologyGenerators& gens);

/// check_homology_basis on the listed generators. Supported for 1 <= t <= 30;
/// throws std::invalid_argument otherwise.
bool verify_homology_basis(ParityCase c, unsigned t);
inline constexpr unsigned kMaxBasisHodge = 30;

/// True iff every row has a * b == 0 and h2 == 0.
bool defect_concentration_check(std::span<const RankRow> rows);

/// Rows for t = 1..max_t, one slice per t, computed in order.
std::vector<RankRow> rank_rows_serial(ParityCase c, unsigned max_t);
/// Same rows, slices distributed over OpenMP threads.
std::vector<RankRow> rank_rows_parallel(ParityCase c, unsigned max_t);

}  // namespace twoloop
