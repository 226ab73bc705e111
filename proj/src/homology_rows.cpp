#include "twoloop/homology.hpp"

#include <exception>

namespace twoloop {

std::vector<RankRow> rank_rows_serial(ParityCase c, unsigned max_t) {
  std::vector<RankRow> rows;
  rows.reserve(max_t);
  for (unsigned t = 1; t <= max_t; ++t) rows.push_back(homology_ranks(build_slice(c, t)));
  return rows;
}

std::vector<RankRow> rank_rows_parallel(ParityCase c, unsigned max_t) {
  std::vector<RankRow> rows(max_t);
  std::exception_ptr failure;
  const long n = static_cast<long>(max_t);
  // Larger t costs more; dynamic scheduling keeps threads busy.
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = n - 1; i >= 0; --i) {
    try {
      rows[static_cast<std::size_t>(i)] =
          homology_ranks(build_slice(c, static_cast<unsigned>(i) + 1));
    } catch (...) {
#pragma omp critical(twoloop_rank_rows_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace twoloop
