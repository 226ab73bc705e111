#include "twoloop/homology.hpp"

#include "twoloop/closed_forms.hpp"
#include "twoloop/errors.hpp"

#include <stdexcept>

namespace twoloop {

RankRow homology_ranks(const HodgeSlice& slice) {
  if (slice.d1.cols() != slice.d2.rows() || !is_zero_composition(slice.d1, slice.d2)) {
    throw ConsistencyError("d1 * d2 != 0 for case " + case_name(slice.parity_case) + " at t = " +
                           std::to_string(slice.t));
  }
  RankRow row;
  row.t = slice.t;
  row.dims = {slice.c2.size(), slice.c1.size(), slice.c0.size()};
  const std::size_t r2 = rank(slice.d2);
  const std::size_t r1 = rank(slice.d1);
  row.ranks = {r2, r1};
  row.a = slice.c0.size() - r1;
  row.b = slice.c1.size() - r1 - r2;
  row.h2 = slice.c2.size() - r2;
  row.chi = euler_characteristic(slice);
  return row;
}

std::int64_t euler_characteristic(const HodgeSlice& slice) {
  const auto [m, n] = representatives(slice.parity_case);
  const std::int64_t d0 = total_degree(slice.parity_case, slice.t, m, n);
  const auto alt = static_cast<std::int64_t>(slice.c0.size()) -
                   static_cast<std::int64_t>(slice.c1.size()) +
                   static_cast<std::int64_t>(slice.c2.size());
  return d0 % 2 == 0 ? alt : -alt;
}

namespace {

AlgebraElement sym(ParityCase c, unsigned k1, unsigned k2, unsigned k3) {
  return symmetrize({k1, k2, k3}, case_flavor(c));
}

std::string label(ParityCase c, unsigned k1, unsigned k2, unsigned k3) {
  return render_symmetrized({k1, k2, k3}, case_flavor(c).symmetry);
}

AlgebraElement pow(const AlgebraElement& f, unsigned n) {
  AlgebraElement r = AlgebraElement::constant(f.flavor(), 1);
  for (unsigned i = 0; i < n; ++i) r = multiply(r, f);
  return r;
}

std::string elementary_label(bool with_delta, unsigned beta, unsigned gamma) {
  std::string s = with_delta ? "Delta" : "";
  auto factor = [&s](const std::string& name, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  factor("e2", beta);
  factor("e3", gamma);
  return s.empty() ? "1" : s;
}

// e2^beta e3^gamma (times Delta when requested) over all (beta, gamma) of the
// given polynomial degree with a constraint on gamma.
void elementary_generators(unsigned degree, bool with_delta, bool gamma_odd, bool positive,
                           std::vector<AlgebraElement>& out, std::vector<std::string>& labels) {
  const unsigned base = with_delta ? 3 : 0;
  if (degree < base) return;
  const unsigned rest = degree - base;
  for (unsigned gamma = 0; 3 * gamma <= rest; ++gamma) {
    if ((gamma % 2 == 1) != gamma_odd) continue;
    const unsigned r = rest - 3 * gamma;
    if (r % 2 != 0) continue;
    const unsigned beta = r / 2;
    if (positive && beta + gamma == 0) continue;
    AlgebraElement g = multiply(pow(named::e2(), beta), pow(named::e3(), gamma));
    if (with_delta) g = multiply(named::delta(), g);
    out.push_back(g);
    labels.push_back(elementary_label(with_delta, beta, gamma));
  }
}

}  // namespace

HomologyGenerators printed_homology_generators(ParityCase c, unsigned t) {
  if (t == 0) throw std::invalid_argument("printed_homology_generators: t must be positive");
  HomologyGenerators g;
  const unsigned d0 = t;
  const unsigned d1 = t - 1;
  switch (c) {
    case ParityCase::OO:
      elementary_generators(d0, false, false, true, g.h0, g.h0_labels);
      elementary_generators(d1, false, false, false, g.h1, g.h1_labels);
      return g;
    case ParityCase::EE:
      elementary_generators(d0, true, true, false, g.h0, g.h0_labels);
      elementary_generators(d1, true, true, false, g.h1, g.h1_labels);
      return g;
    case ParityCase::EO:
      for (unsigned k2 = 1; 2 * k2 + 1 <= d0; k2 += 2) {
        const unsigned k3 = d0 - 2 * k2 - 1;
        if ((k3 % 4 == 0 || k3 % 4 == 3) && k2 > k3) {
          g.h0.push_back(sym(c, k2 + 1, k2, k3));
          g.h0_labels.push_back(label(c, k2 + 1, k2, k3));
        }
      }
      if (d0 >= 2 && (d0 - 2) % 3 == 0 && ((d0 - 2) / 3) % 4 == 3) {
        const unsigned k3 = (d0 - 2) / 3;
        g.h0.push_back(sym(c, k3 + 1, k3 + 1, k3));
        g.h0_labels.push_back(label(c, k3 + 1, k3 + 1, k3));
      }
      for (unsigned k2 = 0; 2 * k2 <= d1; k2 += 2) {
        const unsigned k3 = d1 - 2 * k2;
        if (k3 % 4 == 0 && k2 >= k3) {
          g.h1.push_back(sym(c, k2, k2, k3));
          g.h1_labels.push_back(label(c, k2, k2, k3));
        }
      }
      for (unsigned k2 = 1; 2 * k2 + 2 <= d1; k2 += 2) {
        const unsigned k3 = d1 - 2 * k2 - 2;
        if (k3 % 4 == 3 && k2 > k3) {
          g.h1.push_back(sym(c, k2 + 1, k2 + 1, k3).scaled(2) - sym(c, k2 + 1, k2, k3 + 1));
          g.h1_labels.push_back("2" + label(c, k2 + 1, k2 + 1, k3) + "-" +
                                label(c, k2 + 1, k2, k3 + 1));
        }
      }
      return g;
    case ParityCase::OE:
      for (unsigned k2 = 0; 2 * k2 + 1 <= d0; k2 += 2) {
        const unsigned k3 = d0 - 2 * k2 - 1;
        if ((k3 % 4 == 1 || k3 % 4 == 2) && k2 > k3) {
          g.h0.push_back(sym(c, k2 + 1, k2, k3));
          g.h0_labels.push_back(label(c, k2 + 1, k2, k3));
        }
      }
      if (d0 >= 2 && (d0 - 2) % 3 == 0 && ((d0 - 2) / 3) % 4 == 0) {
        const unsigned k3 = (d0 - 2) / 3;
        g.h0.push_back(sym(c, k3 + 1, k3 + 1, k3));
        g.h0_labels.push_back(label(c, k3 + 1, k3 + 1, k3));
      }
      for (unsigned k2 = 0; 2 * k2 + 2 <= d1; k2 += 2) {
        const unsigned k3 = d1 - 2 * k2 - 2;
        if (k3 % 4 == 2 && k2 > k3) {
          g.h1.push_back(sym(c, k2 + 1, k2 + 1, k3).scaled(2) - sym(c, k2 + 1, k2, k3 + 1));
          g.h1_labels.push_back("2" + label(c, k2 + 1, k2 + 1, k3) + "-" +
                                label(c, k2 + 1, k2, k3 + 1));
        }
      }
      for (unsigned k2 = 1; 2 * k2 <= d1; k2 += 2) {
        const unsigned k3 = d1 - 2 * k2;
        if (k3 % 4 == 1 && k2 >= k3) {
          g.h1.push_back(sym(c, k2, k2, k3));
          g.h1_labels.push_back(label(c, k2, k2, k3));
        }
      }
      return g;
  }
  throw std::invalid_argument("printed_homology_generators: unknown case");
}

namespace {

// Coordinates of each generator as extra columns, or nullopt-style failure
// recorded in the report.
bool append_columns(const std::vector<AlgebraElement>& gens, const std::vector<std::string>& labels,
                    const std::vector<BasisVector>& basis, unsigned degree, const char* group,
                    RationalMatrix& out, BasisCheckReport& report) {
  std::vector<std::vector<Rational>> cols;
  bool ok = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero() || gens[i].degree() != degree) {
      report.problems.push_back(labels[i] + " is zero or has the wrong degree for " + group);
      ok = false;
      continue;
    }
    try {
      cols.push_back(coordinates(gens[i], basis));
    } catch (const ConsistencyError&) {
      report.problems.push_back(labels[i] + " does not lie in " + group);
      ok = false;
    } catch (const std::invalid_argument&) {
      report.problems.push_back(labels[i] + " has the wrong flavour for " + group);
      ok = false;
    }
  }
  out = RationalMatrix::from_columns(basis.size(), cols);
  return ok;
}

}  // namespace

BasisCheckReport check_homology_basis(const HodgeSlice& slice, const HomologyGenerators& gens) {
  BasisCheckReport report;
  const RankRow row = homology_ranks(slice);
  report.expected_h0 = row.a;
  report.expected_h1 = row.b;
  report.listed_h0 = gens.h0.size();
  report.listed_h1 = gens.h1.size();

  RationalMatrix g0, g1;
  const bool in0 = append_columns(gens.h0, gens.h0_labels, slice.c0, slice.t, "C0", g0, report);
  const bool in1 =
      append_columns(gens.h1, gens.h1_labels, slice.c1, slice.t - 1, "C1", g1, report);

  if (in1) {
    for (std::size_t i = 0; i < gens.h1.size(); ++i) {
      if (!apply_d1(slice.parity_case, gens.h1[i]).is_zero()) {
        report.problems.push_back(gens.h1_labels[i] + " is not a cycle");
      }
    }
  }
  if (gens.h0.size() != row.a) {
    report.problems.push_back("H0 count " + std::to_string(gens.h0.size()) + " != rank " +
                              std::to_string(row.a));
  }
  if (gens.h1.size() != row.b) {
    report.problems.push_back("H1 count " + std::to_string(gens.h1.size()) + " != rank " +
                              std::to_string(row.b));
  }
  if (in0 && rank(slice.d1.hstack(g0)) != row.ranks[1] + gens.h0.size()) {
    report.problems.push_back("H0 generators are dependent modulo the image of d1");
  }
  if (in1 && rank(slice.d2.hstack(g1)) != row.ranks[0] + gens.h1.size()) {
    report.problems.push_back("H1 generators are dependent modulo the image of d2");
  }
  report.ok = report.problems.empty();
  return report;
}

bool verify_homology_basis(ParityCase c, unsigned t) {
  if (t == 0 || t > kMaxBasisHodge) {
    throw std::invalid_argument("verify_homology_basis: supported for 1 <= t <= " +
                                std::to_string(kMaxBasisHodge));
  }
  return check_homology_basis(build_slice(c, t), printed_homology_generators(c, t)).ok;
}

bool defect_concentration_check(std::span<const RankRow> rows) {
  for (const RankRow& r : rows) {
    if (r.a * r.b != 0 || r.h2 != 0) return false;
  }
  return true;
}

}  // namespace twoloop
