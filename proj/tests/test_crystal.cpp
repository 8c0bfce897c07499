#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spin7/crystal.hpp"

using namespace spin7;

TEST_CASE("coordinate change") {
  CHECK(to_s_coords(0, 0, 1) == WeightVec{1, 1, 1});
  CHECK(to_s_coords(1, 0, 0) == WeightVec{2, 0, 0});
  CHECK(to_s_coords(0, 0, 0) == WeightVec{0, 0, 0});

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> v(-6, 6);
  for (int t = 0; t < 200; ++t) {
    int w1 = v(rng), w2 = v(rng), w3 = v(rng);
    auto back = from_s_coords(to_s_coords(w1, w2, w3));
    CHECK(back == std::array<int, 3>{w1, w2, w3});
  }
  CHECK_THROWS_AS(from_s_coords(WeightVec{1, 0, 0}), parity_error);
}

TEST_CASE("dominance") {
  CHECK(is_dominant(WeightVec{1, 1, 1}));
  CHECK(!is_dominant(WeightVec{1, -1, 1}));
  CHECK(is_dominant(WeightVec{2, 2, 0}));
  CHECK(!is_dominant(WeightVec{0, 1, 0}));
}

TEST_CASE("closed dominant walk counts") {
  CHECK(count_dominant_walks(0) == 1);
  CHECK(count_dominant_walks(2) == 1);
  CHECK(count_dominant_walks(3) == 0);
  CHECK(count_dominant_walks(4) == 4);
  CHECK(count_dominant_walks(6) == 30);
  CHECK(count_dominant_walks(8) == 330);
  for (int L = 1; L <= 11; L += 2) CHECK(count_dominant_walks(L) == 0);
}

TEST_CASE("non-crossing Dyck path product") {
  CHECK(dyck_formula(1) == 4);
  CHECK(dyck_formula(2) == 30);
  CHECK(dyck_formula(3) == 330);
  for (int m = 1; m <= 12; ++m) CHECK_NOTHROW(dyck_formula(m));
}

TEST_CASE("walks and the product formula agree beyond the certified range") {
  // dim A_P(n) = walks(2n) = dyck(n-1); also observed at the next level.
  for (int n = 2; n <= 5; ++n) CHECK(count_dominant_walks(2 * n) == dyck_formula(n - 1));
}

TEST_CASE("dominant sequences") {
  CHECK(dominant_sequence({WeightVec{1, 1, 1}, WeightVec{-1, -1, -1}}));
  CHECK(!dominant_sequence({WeightVec{-1, 1, 1}}));

  // enumeration oracle: dominant words of length six returning to zero
  std::size_t count = 0;
  std::vector<WeightVec> stack;
  auto rec = [&](auto&& self, WeightVec at, int depth) -> void {
    if (depth == 6) {
      if (at == WeightVec{0, 0, 0}) ++count;
      return;
    }
    for (const WeightVec& s : spin_steps()) {
      WeightVec t = at + s;
      if (!is_dominant(t)) continue;
      self(self, t, depth + 1);
    }
  };
  rec(rec, WeightVec{0, 0, 0}, 0);
  CHECK(count == 30);
}

TEST_CASE("simple roots come from the coordinate change") {
  // Cartan rows of B3 mapped through to_s_coords.
  CHECK(to_s_coords(2, -1, 0) == simple_roots()[0]);
  CHECK(to_s_coords(-1, 2, -2) == simple_roots()[1]);
  CHECK(to_s_coords(0, -1, 2) == simple_roots()[2]);
}

TEST_CASE("crystal graphs validate") {
  const CrystalGraph& spin = crystal_graph(CrystalKind::spin);
  CHECK(spin.vertices.size() == 8);
  CHECK(spin.edges.size() == 8);
  CHECK(validate_crystal(spin).pass);
  // top edge drops by alpha_3
  CHECK(spin.vertices[0] == WeightVec{1, 1, 1});
  CHECK(spin.edges[0].label == 3);
  CHECK(spin.vertices[0] - spin.vertices[1] == simple_roots()[2]);

  const CrystalGraph& vec = crystal_graph(CrystalKind::vector_rep);
  CHECK(vec.vertices.size() == 7);
  CHECK(vec.edges.size() == 6);
  CHECK(validate_crystal(vec).pass);
  // a path with labels 1,2,3,3,2,1
  std::vector<int> labels;
  for (const CrystalEdge& e : vec.edges) labels.push_back(e.label);
  CHECK(labels == std::vector<int>{1, 2, 3, 3, 2, 1});

  // a corrupted edge is reported
  CrystalGraph broken = spin;
  broken.edges[0].label = 1;
  CHECK(!validate_crystal(broken).pass);
}

TEST_CASE("spin graph edges match the weight differences") {
  const CrystalGraph& g = crystal_graph(CrystalKind::spin);
  for (const CrystalEdge& e : g.edges) {
    WeightVec diff = g.vertices[static_cast<std::size_t>(e.from)] -
                     g.vertices[static_cast<std::size_t>(e.to)];
    CHECK(diff == simple_roots()[static_cast<std::size_t>(e.label - 1)]);
  }
}
