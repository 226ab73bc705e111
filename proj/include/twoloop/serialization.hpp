#pragma once

#include "twoloop/complex_builder.hpp"
#include "twoloop/homology.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twoloop {

/// One output table row. `detail` holds dim_c2, dim_c1, dim_c0, rank_d2,
/// rank_d1 when the row came from a brute-force computation.
struct TableRow {
  ParityCase parity_case = ParityCase::OO;
  unsigned t = 0;
  std::int64_t a = 0, b = 0, chi = 0;
  std::optional<std::array<std::size_t, 5>> detail;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

TableRow table_row(ParityCase c, const RankRow& row);

/// {"case","t","c2","c1","c0","d2":[[r,c,"p/q"],...],"d1":[...]}, two-space indent.
std::string slice_to_json(const HodgeSlice& slice);

/// Header t,a,b,chi,dim_c2,dim_c1,dim_c0,rank_d2,rank_d1, prefixed by a case
/// column when with_case is set. Missing detail is written as empty fields.
std::string rows_to_csv(const std::vector<TableRow>& rows, bool with_case);
/// Parses output of rows_to_csv. Rows without a case column get `default_case`.
/// Throws std::invalid_argument on malformed input.
std::vector<TableRow> rows_from_csv(std::string_view text, ParityCase default_case);

std::string rows_to_json(const std::vector<TableRow>& rows);
std::vector<TableRow> rows_from_json(std::string_view text);

/// Fixed-width table for terminals.
std::string rows_to_text(const std::vector<TableRow>& rows, bool with_case);

}  // namespace twoloop
