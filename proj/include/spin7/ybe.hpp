#pragma once

#include <random>
#include <string>

#include "spin7/tower.hpp"

namespace spin7 {

/// Laurent polynomials in the spectral variables u (inner) and v (outer)
/// over the fraction field in q.
using UPoly = LaurentPolyT<RatFunc>;
using UVPoly = LaurentPolyT<UPoly>;
using ParamElement = ElementT<UVPoly>;

/// Spectral argument: the formal substitution u -> c * u^du * v^dv.
/// (1,1,0) is u itself, (1,1,1) is uv, (c,0,0) a numeric specialization.
struct SpectralArg {
  RatFunc c = RatFunc(1);
  int du = 1;
  int dv = 0;
};

UVPoly uv_const(const RatFunc& c);
UVPoly uv_monomial(const RatFunc& c, int du, int dv);

/// (u^s q^a - u^-s q^-a) after substituting the argument for u.
UVPoly spectral_factor(int s, int a, const SpectralArg& arg);

/// First Yang-Baxter solution: the four-term expansion of R_i over
/// {1, U_i, K_i, H_i} divided by (q - q^-1)^2 (q^2 - q^-2).
ParamElement build_R(int i, int n, const SpectralArg& arg = {});

/// Second solution, assembled from the spectral idempotents with the
/// printed eigenvalues of (q - q^-1)^4 S_i(u).
ParamElement build_S(int i, int n, const SpectralArg& arg = {});

/// Eigenvalues of -(q-q^-1)^4 R(u) and (q-q^-1)^4 S(u) on the summand with
/// the given weight.
UVPoly r_eigenvalue(WeightLabel w, const SpectralArg& arg = {});
UVPoly s_eigenvalue(WeightLabel w, const SpectralArg& arg = {});

enum class YbeSolution { R, S };
enum class YbeMode { symbolic, sampled };

struct CheckOutcome {
  bool pass = true;
  std::string detail;  // first failing identity / witness term or sample point
};

/// B_i(u) B_{i+1}(uv) B_i(v) = B_{i+1}(v) B_i(uv) B_{i+1}(u) in A_P(3).
CheckOutcome check_ybe(YbeSolution which, YbeMode mode, unsigned seed = 1);

/// The three U-sandwich families for R, as normal-form identities in A_P(3).
CheckOutcome check_sandwich();

/// R/S specializations, unitarity R(u)R(1/u) scalar, commuting at distance,
/// and the eigenvalue table on the spectral idempotents.
CheckOutcome check_specializations();
CheckOutcome check_unitarity(YbeSolution which);
CheckOutcome check_distant_commute();
CheckOutcome check_eigenvalue_table(TowerContext& ctx);

}  // namespace spin7
