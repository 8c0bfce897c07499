#pragma once

#include <array>
#include <vector>

#include "spin7/element.hpp"
#include "spin7/repmatrix.hpp"

namespace spin7 {

/// One irreducible representation of A(3), dimensions 1..4. The index-2
/// images come from the index-1 images by the entry involution
/// A_ij <-> A_{n-j+1,n-i+1}; braid inverses by q <-> q^-1.
struct RepSpec {
  int dim = 0;
  RepMatrix u1, k1, h1, u2, k2, h2;
  RepMatrix sigma1, sigma2, sigma1_inv, sigma2_inv;

  const RepMatrix& image(const Gen& g) const;
};

/// The dimension-k irreducible representation; k < 4 is produced from the
/// printed four-dimensional matrices by deleting the first 4-k rows/columns.
const RepSpec& rep(int k);

/// Algebra homomorphism on a word (empty word -> identity).
RepMatrix evaluate(const TraceWord& w, const RepSpec& spec);

/// Linear extension to elements of C(3).
RepMatrix evaluate(const AlgElement& a, const RepSpec& spec);

/// Simultaneous evaluation in all four representations.
std::array<RepMatrix, 4> pi_evaluate(const AlgElement& a);
std::array<RepMatrix, 4> pi_evaluate(const TraceWord& w);

/// Flatten the four blocks into the 30-coordinate vector used for solving.
std::vector<RatFunc> pi_flatten(const std::array<RepMatrix, 4>& blocks);

/// Braid matrix from the generator images:
/// (q+q^-1) sigma_i = -q^-7 - q^-2 U_i + q^-4 K_i + q^-5 H_i.
RepMatrix braid_from_generators(int i, const RepSpec& spec);

}  // namespace spin7
