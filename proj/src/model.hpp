#ifndef TGLIE_MODEL_HPP
#define TGLIE_MODEL_HPP

#include "groupmod.hpp"

namespace tglie {

/// Everything needed to run brackets and vertex operators for one quadruple:
/// the validated lattice data, the cocycle tables, the group-algebra lift and
/// the coefficient module.
struct Model {
  QuadruplePtr quad;
  std::shared_ptr<CocycleTable> epsC;
  std::shared_ptr<EtaTable> eta;
  std::shared_ptr<HeisenbergBasis> hb;
  TModulePtr T;

  const KFieldPtr& field() const { return quad->field(); }
  FockVector vacuum() const;
};

struct ModelOptions {
  std::optional<std::vector<std::vector<long long>>> epsC_overrides;
  std::optional<std::vector<long long>> eta_overrides;
  TKind tkind = TKind::Trivial;
};

Model build_model(const QuadrupleSpec& spec, const ModelOptions& opts);

/// omega0-exponent matrix of the sign cocycle on the Q-basis, for use as an
/// epsilon_C override.
std::vector<std::vector<long long>> eps_star_overrides(const Quadruple& quad);

/// Deterministic test vectors: one vacuum per small label plus seeded random
/// creation monomials up to the degree bound.
std::vector<FockVector> sample_fock_vectors(const Model& M, uint64_t seed,
                                            int count, int max_degree);

}  // namespace tglie

#endif
