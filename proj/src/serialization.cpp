#include "twoloop/serialization.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace twoloop {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<const char*, 5> kDetailColumns{"dim_c2", "dim_c1", "dim_c0", "rank_d2",
                                                    "rank_d1"};

Json triples(const std::vector<BasisVector>& basis) {
  Json out = Json::array();
  for (const BasisVector& b : basis) out.push_back({b.label[0], b.label[1], b.label[2]});
  return out;
}

Json entries(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& [idx, v] : m.entries()) {
    out.push_back({idx.first, idx.second, v.to_fraction_string()});
  }
  return out;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

ParityCase parse_case_or_throw(const std::string& s) {
  const auto c = parse_case(s);
  if (!c) throw std::invalid_argument("unknown case '" + s + "'");
  return *c;
}

}  // namespace

TableRow table_row(ParityCase c, const RankRow& row) {
  TableRow r;
  r.parity_case = c;
  r.t = row.t;
  r.a = static_cast<std::int64_t>(row.a);
  r.b = static_cast<std::int64_t>(row.b);
  r.chi = row.chi;
  r.detail = std::array<std::size_t, 5>{row.dims[0], row.dims[1], row.dims[2], row.ranks[0],
                                        row.ranks[1]};
  return r;
}

std::string slice_to_json(const HodgeSlice& slice) {
  Json j;
  j["case"] = case_name(slice.parity_case);
  j["t"] = slice.t;
  j["c2"] = triples(slice.c2);
  j["c1"] = triples(slice.c1);
  j["c0"] = triples(slice.c0);
  j["d2"] = entries(slice.d2);
  j["d1"] = entries(slice.d1);
  return j.dump(2) + "\n";
}

std::string rows_to_csv(const std::vector<TableRow>& rows, bool with_case) {
  std::ostringstream os;
  if (with_case) os << "case,";
  os << "t,a,b,chi";
  for (const char* col : kDetailColumns) os << ',' << col;
  os << '\n';
  for (const TableRow& r : rows) {
    if (with_case) os << case_name(r.parity_case) << ',';
    os << r.t << ',' << r.a << ',' << r.b << ',' << r.chi;
    for (std::size_t i = 0; i < kDetailColumns.size(); ++i) {
      os << ',';
      if (r.detail) os << (*r.detail)[i];
    }
    os << '\n';
  }
  return os.str();
}

std::vector<TableRow> rows_from_csv(std::string_view text, ParityCase default_case) {
  std::vector<TableRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("rows_from_csv: empty input");
  const auto header = split(line, ',');
  const bool with_case = !header.empty() && header.front() == "case";
  const std::size_t expected = 9 + (with_case ? 1 : 0);
  if (header.size() != expected) throw std::invalid_argument("rows_from_csv: bad header");
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto f = split(line, ',');
    if (f.size() != expected) throw std::invalid_argument("rows_from_csv: bad row '" + line + "'");
    std::size_t i = 0;
    TableRow r;
    r.parity_case = with_case ? parse_case_or_throw(f[i++]) : default_case;
    r.t = static_cast<unsigned>(parse_int(f[i++]));
    r.a = parse_int(f[i++]);
    r.b = parse_int(f[i++]);
    r.chi = parse_int(f[i++]);
    if (!f[i].empty()) {
      std::array<std::size_t, 5> d{};
      for (std::size_t k = 0; k < 5; ++k) d[k] = static_cast<std::size_t>(parse_int(f[i + k]));
      r.detail = d;
    }
    rows.push_back(r);
  }
  return rows;
}

std::string rows_to_json(const std::vector<TableRow>& rows) {
  Json arr = Json::array();
  for (const TableRow& r : rows) {
    Json j;
    j["case"] = case_name(r.parity_case);
    j["t"] = r.t;
    j["a"] = r.a;
    j["b"] = r.b;
    j["chi"] = r.chi;
    if (r.detail) {
      for (std::size_t k = 0; k < 5; ++k) j[kDetailColumns[k]] = (*r.detail)[k];
    }
    arr.push_back(j);
  }
  Json root;
  root["rows"] = arr;
  return root.dump(2) + "\n";
}

std::vector<TableRow> rows_from_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("rows_from_json: ") + e.what());
  }
  if (!root.contains("rows") || !root["rows"].is_array()) {
    throw std::invalid_argument("rows_from_json: missing rows array");
  }
  std::vector<TableRow> rows;
  for (const Json& j : root["rows"]) {
    TableRow r;
    r.parity_case = parse_case_or_throw(j.at("case").get<std::string>());
    r.t = j.at("t").get<unsigned>();
    r.a = j.at("a").get<std::int64_t>();
    r.b = j.at("b").get<std::int64_t>();
    r.chi = j.at("chi").get<std::int64_t>();
    if (j.contains(kDetailColumns[0])) {
      std::array<std::size_t, 5> d{};
      for (std::size_t k = 0; k < 5; ++k) d[k] = j.at(kDetailColumns[k]).get<std::size_t>();
      r.detail = d;
    }
    rows.push_back(r);
  }
  return rows;
}

std::string rows_to_text(const std::vector<TableRow>& rows, bool with_case) {
  std::ostringstream os;
  auto cell = [&os](const auto& v, int w) { os << std::setw(w) << v; };
  if (with_case) cell("case", 5);
  cell("t", 4);
  cell("h0", 5);
  cell("h1", 5);
  cell("chi", 6);
  const bool detail = !rows.empty() && rows.front().detail.has_value();
  if (detail) {
    for (const char* col : kDetailColumns) cell(col, 9);
  }
  os << '\n';
  for (const TableRow& r : rows) {
    if (with_case) cell(case_name(r.parity_case), 5);
    cell(r.t, 4);
    cell(r.a, 5);
    cell(r.b, 5);
    cell(r.chi, 6);
    if (detail && r.detail) {
      for (std::size_t v : *r.detail) cell(v, 9);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace twoloop
