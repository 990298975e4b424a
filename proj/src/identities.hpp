#ifndef TGLIE_IDENTITIES_HPP
#define TGLIE_IDENTITIES_HPP

#include "model.hpp"

namespace tglie {

/// One-variable series with exact coefficients on a tracked range.  The tag
/// records the expansion direction; combining opposite directions is only
/// meaningful through the two-sided difference helpers below.
struct SeriesTag {
  enum Value { Ascending, Descending } v;
};

enum class RationalIdentity {
  PfracSumS,      // sum of weighted s/(s-t_i) partial fractions
  PfracSumT,      // sum of weighted t_i/(s-t_i) partial fractions
  PfracSquareS,   // squared version of PfracSumS
  PfracSquareT,   // squared version of PfracSumT
  ProfileProdS,   // mixed first/second order profile expansion of prod s/(s-t_i)
  ProfileProdT    // mixed profile expansion of prod t_i/(s-t_i)
};

std::string rational_identity_name(RationalIdentity id);

/// Exact check over fresh symbols; `profile` (entries 1 or 2) is used by the
/// profile expansions and ignored otherwise.
bool verify_rational(RationalIdentity id, int n, const std::vector<int>& profile);

enum class SeriesIdentity {
  ProfileSeriesZ,    // power-series form of ProfileProdS in z
  ProfileSeriesTZ,   // power-series form of ProfileProdT in t z
  DeltaSplit,        // difference of opposite expansions as delta and Ddelta
  DeltaEval,         // f(z) delta(az) = f(a^{-1}) delta(az)
  DDeltaEval,        // f(z) Ddelta(az) = f(a^{-1}) Ddelta(az) - (Df)(a^{-1}) delta(az)
  LaurentReflection, // general-profile difference identity with delta support
  BivarDeltaEval,    // F(z1,z2) delta(z2/cz1) = F(z1,cz1) delta(z2/cz1)
  BivarDDeltaEval    // the Ddelta version with the derivative correction
};

std::string series_identity_name(SeriesIdentity id);

/// Exact windowed check over fresh symbols.  `profile` entries: {1,2} for the
/// profile series, [-2,2] for the reflection identity.  Randomized instances
/// (DeltaEval etc.) take the instance count and a seed.
bool verify_series(SeriesIdentity id, int n, const std::vector<int>& profile,
                   long long window);
bool verify_series_random(SeriesIdentity id, long long window, uint64_t seed,
                          int instances);

/// The reflection identity evaluated at explicit nonzero field values
/// (used for the root-of-unity specialization).
bool verify_reflection_at(const KFieldPtr& K, const std::vector<Scalar>& ts,
                          const std::vector<int>& profile, long long window);

/// Specialization of the reflection identity to t_p = omega^{-p},
/// a_p = <nu^p alpha, beta>; requires every pairing >= -2.
bool verify_reflection_specialization(const Model& M, const IntVec& alpha,
                                      const IntVec& beta, long long window);

/// The orbit-pairing side identity for shifts with pairing -2; returns
/// nullopt when no such shift exists (vacuous).
std::optional<bool> verify_orbit_weight_sum(const Model& M, const IntVec& alpha,
                                            const IntVec& beta);

}  // namespace tglie

#endif
