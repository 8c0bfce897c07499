#include "spin7/crystal.hpp"

#include <map>

namespace spin7 {

WeightVec to_s_coords(int w1, int w2, int w3) {
  return {2 * w1 + 2 * w2 + w3, 2 * w2 + w3, w3};
}

std::array<int, 3> from_s_coords(const WeightVec& s) {
  if ((s.s1 - s.s2) % 2 != 0 || (s.s2 - s.s3) % 2 != 0)
    throw parity_error("coordinates are not in the image of the weight lattice");
  return {(s.s1 - s.s2) / 2, (s.s2 - s.s3) / 2, s.s3};
}

bool is_dominant(const WeightVec& s) { return s.s1 >= s.s2 && s.s2 >= s.s3 && s.s3 >= 0; }

const std::array<WeightVec, 8>& spin_steps() {
  static const std::array<WeightVec, 8> steps = [] {
    std::array<WeightVec, 8> s{};
    int k = 0;
    for (int a : {1, -1})
      for (int b : {1, -1})
        for (int c : {1, -1}) s[static_cast<std::size_t>(k++)] = WeightVec{a, b, c};
    return s;
  }();
  return steps;
}

Int count_dominant_walks(int length) {
  if (length < 0) throw index_out_of_range("negative walk length");
  std::map<WeightVec, Int> state;
  state[WeightVec{0, 0, 0}] = 1;
  for (int step = 0; step < length; ++step) {
    int remaining = length - step - 1;
    std::map<WeightVec, Int> next;
    for (const auto& [w, count] : state) {
      for (const WeightVec& d : spin_steps()) {
        WeightVec t = w + d;
        if (!is_dominant(t)) continue;
        if (t.s1 > remaining) continue;  // cannot return to the origin in time
        next[t] += count;
      }
    }
    state = std::move(next);
  }
  auto it = state.find(WeightVec{0, 0, 0});
  return it == state.end() ? Int(0) : it->second;
}

bool dominant_sequence(const std::vector<WeightVec>& steps) {
  WeightVec acc{0, 0, 0};
  for (const WeightVec& d : steps) {
    acc = acc + d;
    if (!is_dominant(acc)) return false;
  }
  return true;
}

Int dyck_formula(int m) {
  if (m < 1) throw index_out_of_range("dyck_formula requires m >= 1");
  Rational prod = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) prod *= Rational(i + j + 6, i + j);
  if (boost::multiprecision::denominator(prod) != 1)
    throw non_integral("non-crossing Dyck path product is not an integer");
  return boost::multiprecision::numerator(prod);
}

const std::array<WeightVec, 3>& simple_roots() {
  // Images of the B3 simple roots under the coordinate change:
  // alpha1 = (1,-1,0), alpha2 = (0,1,-1) in fundamental-weight-free terms
  // map to (2,-2,0), (0,2,-2); the short root alpha3 maps to (0,0,2).
  static const std::array<WeightVec, 3> roots{WeightVec{2, -2, 0}, WeightVec{0, 2, -2},
                                              WeightVec{0, 0, 2}};
  return roots;
}

const CrystalGraph& crystal_graph(CrystalKind which) {
  static const CrystalGraph spin = [] {
    CrystalGraph g;
    g.kind = CrystalKind::spin;
    g.vertices = {
        WeightVec{1, 1, 1},    WeightVec{1, 1, -1},  WeightVec{1, -1, 1},  WeightVec{-1, 1, 1},
        WeightVec{1, -1, -1},  WeightVec{-1, 1, -1}, WeightVec{-1, -1, 1},
        WeightVec{-1, -1, -1},
    };
    g.edges = {{0, 1, 3}, {1, 2, 2}, {2, 3, 1}, {2, 4, 3},
               {3, 5, 3}, {4, 5, 1}, {5, 6, 2}, {6, 7, 3}};
    return g;
  }();
  static const CrystalGraph vec = [] {
    CrystalGraph g;
    g.kind = CrystalKind::vector_rep;
    g.vertices = {WeightVec{2, 0, 0},  WeightVec{0, 2, 0},  WeightVec{0, 0, 2},
                  WeightVec{0, 0, 0},  WeightVec{0, 0, -2}, WeightVec{0, -2, 0},
                  WeightVec{-2, 0, 0}};
    g.edges = {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 4, 3}, {4, 5, 2}, {5, 6, 1}};
    return g;
  }();
  return which == CrystalKind::spin ? spin : vec;
}

CrystalValidation validate_crystal(const CrystalGraph& g) {
  CrystalValidation v;
  auto fail = [&v](std::string msg) {
    v.pass = false;
    v.violations.push_back(std::move(msg));
  };
  std::vector<int> indeg(g.vertices.size(), 0), outdeg(g.vertices.size(), 0);
  for (const CrystalEdge& e : g.edges) {
    if (e.label < 1 || e.label > 3) {
      fail("edge label out of range");
      continue;
    }
    WeightVec diff = g.vertices[static_cast<std::size_t>(e.from)] -
                     g.vertices[static_cast<std::size_t>(e.to)];
    if (!(diff == simple_roots()[static_cast<std::size_t>(e.label - 1)]))
      fail("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
           " does not drop by alpha_" + std::to_string(e.label));
    ++outdeg[static_cast<std::size_t>(e.from)];
    ++indeg[static_cast<std::size_t>(e.to)];
  }
  int sources = 0, sinks = 0;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (indeg[i] == 0) ++sources;
    if (outdeg[i] == 0) ++sinks;
  }
  if (sources != 1) fail("expected a unique highest weight vertex");
  if (sinks != 1) fail("expected a unique lowest weight vertex");
  return v;
}

}  // namespace spin7
