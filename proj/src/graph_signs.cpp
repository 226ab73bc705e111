#include "twoloop/graph_signs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace twoloop {

namespace {

using R = ElementRole;

int parity_sign(unsigned long long e) { return e % 2 == 0 ? 1 : -1; }

char edge_letter(unsigned edge, bool upper) {
  static constexpr char kUpper[] = {'?', 'C', 'D', 'E'};
  static constexpr char kLower[] = {'?', 'c', 'd', 'e'};
  return upper ? kUpper[edge] : kLower[edge];
}

OrientationElement el(R role, unsigned edge, unsigned index) { return {role, edge, index}; }

struct GraphEdge {
  OrientationElement element;
  unsigned theta_edge;  // 0 for edges off the theta frame
  OrientationElement tail, head;
};

// Vertex after which segment p of a theta edge starts (p = 0 is B1) or at
// which it ends (p = k + 1 is B2).
OrientationElement frame_node(unsigned edge, unsigned p, unsigned k) {
  if (p == 0) return el(R::Junction, 0, 1);
  if (p == k + 1) return el(R::Junction, 0, 2);
  return el(R::EdgeVertex, edge, p);
}

std::vector<GraphEdge> graph_edges(unsigned defect, const ExponentTriple& hairs) {
  std::vector<GraphEdge> edges;
  for (unsigned side = 1; side <= defect; ++side) {
    edges.push_back({el(R::JunctionHairEdge, 0, side), 0, el(R::Junction, 0, side),
                     el(R::JunctionHairVertex, 0, side)});
  }
  for (unsigned e = 1; e <= 3; ++e) {
    const unsigned k = hairs[e - 1];
    for (unsigned p = 0; p <= k; ++p) {
      const OrientationElement seg = p == 0 ? el(R::FirstSegment, e, e) : el(R::Segment, e, p);
      edges.push_back({seg, e, frame_node(e, p, k), frame_node(e, p + 1, k)});
    }
    for (unsigned i = 1; i <= k; ++i) {
      edges.push_back({el(R::HairEdge, e, i), 0, el(R::EdgeVertex, e, i), el(R::HairVertex, e, i)});
    }
  }
  return edges;
}

bool is_vertex(R role) {
  return role == R::JunctionHairVertex || role == R::Junction || role == R::HairVertex ||
         role == R::EdgeVertex;
}

unsigned edge_image(unsigned e, const SymmetryOp& op) {
  if (op.kind == SymmetryOp::Kind::VerticalReflection || e == 0) return e;
  if (e == op.i) return op.j;
  if (e == op.j) return op.i;
  return e;
}

OrientationElement vertex_image(const OrientationElement& v, const SymmetryOp& op,
                                const ExponentTriple& hairs) {
  if (op.kind == SymmetryOp::Kind::EdgeTransposition) {
    if (v.role == R::HairVertex || v.role == R::EdgeVertex) {
      return el(v.role, edge_image(v.edge, op), v.index);
    }
    return v;
  }
  switch (v.role) {
    case R::JunctionHairVertex:
    case R::Junction:
      return el(v.role, 0, 3 - v.index);
    case R::HairVertex:
    case R::EdgeVertex:
      return el(v.role, v.edge, hairs[v.edge - 1] + 1 - v.index);
    default:
      throw std::logic_error("vertex_image: not a vertex");
  }
}

}  // namespace

DegreeClass OrientationElement::degree_class() const {
  switch (role) {
    case R::JunctionHairVertex:
    case R::HairVertex:
      return DegreeClass::ExternalVertex;
    case R::Junction:
    case R::EdgeVertex:
      return DegreeClass::InternalVertex;
    default:
      return DegreeClass::Edge;
  }
}

unsigned OrientationElement::parity(ParityCase c) const {
  switch (degree_class()) {
    case DegreeClass::ExternalVertex: return m_parity(c);
    case DegreeClass::InternalVertex: return n_parity(c);
    case DegreeClass::Edge: return 1U - n_parity(c);
  }
  return 0;
}

std::string OrientationElement::id() const {
  const std::string n = std::to_string(index);
  switch (role) {
    case R::JunctionHairVertex: return "A" + n;
    case R::JunctionHairEdge: return "a" + n;
    case R::Junction: return "B" + n;
    case R::FirstSegment: return "b" + n;
    case R::HairVertex: return std::string(1, edge_letter(edge, true)) + n;
    case R::HairEdge: return std::string(1, edge_letter(edge, false)) + n;
    case R::EdgeVertex: return std::string(1, edge_letter(edge, true)) + "'" + n;
    case R::Segment: return std::string(1, edge_letter(edge, false)) + "'" + n;
  }
  return "?";
}

OrientedThetaEncoding make_theta_encoding(unsigned defect, const ExponentTriple& hairs) {
  if (defect > 2) throw std::invalid_argument("make_theta_encoding: defect must be 0, 1 or 2");
  OrientedThetaEncoding g;
  g.defect = defect;
  g.hairs = hairs;
  auto& o = g.orientation;
  for (unsigned s = 1; s <= defect; ++s) o.push_back(el(R::JunctionHairVertex, 0, s));
  for (unsigned s = 1; s <= defect; ++s) o.push_back(el(R::JunctionHairEdge, 0, s));
  o.push_back(el(R::Junction, 0, 1));
  o.push_back(el(R::Junction, 0, 2));
  for (unsigned e = 1; e <= 3; ++e) o.push_back(el(R::FirstSegment, e, e));
  for (unsigned e = 1; e <= 3; ++e) {
    for (unsigned i = 1; i <= hairs[e - 1]; ++i) {
      o.push_back(el(R::HairVertex, e, i));
      o.push_back(el(R::HairEdge, e, i));
      o.push_back(el(R::EdgeVertex, e, i));
      o.push_back(el(R::Segment, e, i));
    }
  }
  return g;
}

SymmetryOp SymmetryOp::transposition(unsigned i, unsigned j) {
  if (i == j || i < 1 || j < 1 || i > 3 || j > 3) {
    throw std::invalid_argument("SymmetryOp::transposition: need distinct edges in 1..3");
  }
  return {Kind::EdgeTransposition, std::min(i, j), std::max(i, j)};
}

std::string SymmetryOp::to_string() const {
  if (kind == Kind::VerticalReflection) return "reflection";
  return "transpose(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

int koszul_sign(std::span<const std::size_t> perm, std::span<const unsigned> parities) {
  if (perm.size() != parities.size()) {
    throw std::invalid_argument("koszul_sign: permutation and parities differ in length");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw std::invalid_argument("koszul_sign: not a permutation");
    seen[p] = true;
  }
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    if (parities[a] % 2 == 0) continue;
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b] && parities[b] % 2 == 1) sign = -sign;
    }
  }
  return sign;
}

int reversal_sign(std::size_t reversed_edges, ParityCase c) {
  return parity_sign(static_cast<unsigned long long>(reversed_edges) * n_parity(c));
}

ExponentTriple image_hairs(const ExponentTriple& hairs, const SymmetryOp& op) {
  if (op.kind == SymmetryOp::Kind::VerticalReflection) return hairs;
  ExponentTriple out = hairs;
  std::swap(out.k[op.i - 1], out.k[op.j - 1]);
  return out;
}

int symmetry_sign(const OrientedThetaEncoding& g, const SymmetryOp& op, ParityCase c) {
  if (op.kind == SymmetryOp::Kind::VerticalReflection && g.defect == 1) {
    throw std::invalid_argument(
        "symmetry_sign: the reflection of a defect-1 graph is a different graph");
  }
  const ExponentTriple target_hairs = image_hairs(g.hairs, op);
  const OrientedThetaEncoding target = make_theta_encoding(g.defect, target_hairs);

  std::map<OrientationElement, std::size_t> target_pos;
  for (std::size_t p = 0; p < target.orientation.size(); ++p) target_pos[target.orientation[p]] = p;

  // Target edges keyed by (frame edge, unordered endpoints).
  using Key = std::tuple<unsigned, OrientationElement, OrientationElement>;
  auto key = [](unsigned theta, const OrientationElement& u, const OrientationElement& v) {
    return u < v ? Key{theta, u, v} : Key{theta, v, u};
  };
  std::map<Key, const GraphEdge*> target_edges;
  const std::vector<GraphEdge> tedges = graph_edges(g.defect, target_hairs);
  for (const GraphEdge& e : tedges) {
    if (!target_edges.emplace(key(e.theta_edge, e.tail, e.head), &e).second) {
      throw std::logic_error("symmetry_sign: ambiguous edge in target graph");
    }
  }

  std::map<OrientationElement, OrientationElement> image;
  std::size_t reversed = 0;
  for (const GraphEdge& e : graph_edges(g.defect, g.hairs)) {
    const OrientationElement u = vertex_image(e.tail, op, g.hairs);
    const OrientationElement v = vertex_image(e.head, op, g.hairs);
    const auto it = target_edges.find(key(edge_image(e.theta_edge, op), u, v));
    if (it == target_edges.end()) {
      throw std::logic_error("symmetry_sign: image of " + e.element.id() + " is not an edge");
    }
    image[e.element] = it->second->element;
    if (it->second->tail != u) ++reversed;
  }

  std::vector<std::size_t> perm;
  std::vector<unsigned> parities;
  perm.reserve(g.orientation.size());
  for (const OrientationElement& x : g.orientation) {
    const OrientationElement y = is_vertex(x.role) ? vertex_image(x, op, g.hairs) : image.at(x);
    perm.push_back(target_pos.at(y));
    parities.push_back(x.parity(c));
  }
  return koszul_sign(perm, parities) * reversal_sign(reversed, c);
}

int lemma_sign_formula(const SymmetryOp& op, const ExponentTriple& hairs, unsigned defect,
                       ParityCase c) {
  if (defect > 2) throw std::invalid_argument("lemma_sign_formula: defect must be 0, 1 or 2");
  const unsigned long long m = m_parity(c);
  const unsigned long long n = n_parity(c);
  const unsigned long long k1 = hairs[0], k2 = hairs[1], k3 = hairs[2];
  if (op.kind == SymmetryOp::Kind::EdgeTransposition) {
    unsigned long long blocks = 0;
    if (op.i == 1 && op.j == 2) blocks = k1 * k2;
    if (op.i == 2 && op.j == 3) blocks = k2 * k3;
    // (1 3) = (1 2)(2 3)(1 2)
    if (op.i == 1 && op.j == 3) blocks = k1 * k2 + k1 * k3 + k2 * k3;
    return parity_sign(n + 1) * parity_sign(blocks * (m + n));
  }
  if (defect == 1) {
    throw std::invalid_argument("lemma_sign_formula: no reflection formula at defect 1");
  }
  const unsigned long long tri = (k1 * (k1 + 1) + k2 * (k2 + 1) + k3 * (k3 + 1)) / 2 - (k1 + k2 + k3);
  const int base = parity_sign(k1 + k2 + k3) * parity_sign((m + n) * tri);
  return defect == 2 ? parity_sign(m + n + 1) * base : base;
}

std::vector<SignGridCell> sign_verification_grid(unsigned max_exponent) {
  std::vector<SymmetryOp> transpositions{SymmetryOp::transposition(1, 2),
                                         SymmetryOp::transposition(2, 3),
                                         SymmetryOp::transposition(1, 3)};
  std::vector<SignGridCell> cells;
  for (ParityCase c : kAllCases) {
    for (unsigned k1 = 0; k1 <= max_exponent; ++k1) {
      for (unsigned k2 = 0; k2 <= max_exponent; ++k2) {
        for (unsigned k3 = 0; k3 <= max_exponent; ++k3) {
          const ExponentTriple h{k1, k2, k3};
          auto add = [&](unsigned defect, const SymmetryOp& op) {
            const int computed = symmetry_sign(make_theta_encoding(defect, h), op, c);
            cells.push_back({c, defect, op, h, computed, lemma_sign_formula(op, h, defect, c)});
          };
          add(2, SymmetryOp::reflection());
          add(0, SymmetryOp::reflection());
          for (unsigned d = 0; d <= 2; ++d) {
            for (const SymmetryOp& op : transpositions) add(d, op);
          }
        }
      }
    }
  }
  return cells;
}

}  // namespace twoloop
