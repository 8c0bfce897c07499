#pragma once

#include <array>
#include <string>
#include <vector>

#include "spin7/errors.hpp"
#include "spin7/numeric.hpp"

namespace spin7 {

/// Weight in the rescaled coordinates (s1, s2, s3); spin weights are the
/// eight vectors with all entries +-1 and dominance is s1 >= s2 >= s3 >= 0.
struct WeightVec {
  int s1 = 0, s2 = 0, s3 = 0;

  friend bool operator==(const WeightVec&, const WeightVec&) = default;
  friend WeightVec operator+(const WeightVec& a, const WeightVec& b) {
    return {a.s1 + b.s1, a.s2 + b.s2, a.s3 + b.s3};
  }
  friend WeightVec operator-(const WeightVec& a, const WeightVec& b) {
    return {a.s1 - b.s1, a.s2 - b.s2, a.s3 - b.s3};
  }
  friend bool operator<(const WeightVec& a, const WeightVec& b) {
    return std::array{a.s1, a.s2, a.s3} < std::array{b.s1, b.s2, b.s3};
  }
};

/// (w1,w2,w3) -> (2w1+2w2+w3, 2w2+w3, w3).
WeightVec to_s_coords(int w1, int w2, int w3);

/// Inverse coordinate change; requires s1-s2 and s2-s3 even.
std::array<int, 3> from_s_coords(const WeightVec& s);

bool is_dominant(const WeightVec& s);

/// The eight spin steps (+-1,+-1,+-1).
const std::array<WeightVec, 8>& spin_steps();

/// Closed dominant walks of the given length with spin steps: every partial
/// sum dominant, start and end at the origin. Equals dim A_P(n) at length 2n.
Int count_dominant_walks(int length);

bool dominant_sequence(const std::vector<WeightVec>& steps);

/// Triples of non-crossing Dyck paths: prod_{1<=i<=j<=m} (i+j+6)/(i+j),
/// asserted integral (sequence A006149).
Int dyck_formula(int m);

enum class CrystalKind { spin, vector_rep };

struct CrystalEdge {
  int from = 0, to = 0;  // vertex indices
  int label = 0;         // simple root 1..3
};

struct CrystalGraph {
  CrystalKind kind = CrystalKind::spin;
  std::vector<WeightVec> vertices;
  std::vector<CrystalEdge> edges;
};

struct CrystalValidation {
  bool pass = true;
  std::vector<std::string> violations;
};

/// Literal transcriptions of the two crystal-graph figures.
const CrystalGraph& crystal_graph(CrystalKind which);

/// Check every edge drops by the labelled simple root and that the graph has
/// a unique source and a unique sink.
CrystalValidation validate_crystal(const CrystalGraph& g);

/// Simple roots in s-coordinates: the images of the B3 simple roots.
const std::array<WeightVec, 3>& simple_roots();

}  // namespace spin7
