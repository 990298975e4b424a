#ifndef TGLIE_REALIZATIONS_HPP
#define TGLIE_REALIZATIONS_HPP

#include "vertex.hpp"

namespace tglie {

/// Named presets: the quadruple, the cocycle/lift overrides and the module
/// choice realizing a known algebra on the generalized Fock space.
struct RealizationPreset {
  std::string name;
  int N;
  QuadrupleSpec spec;
  ModelOptions opts;
};

/// name in {twisted_affine, twisted_affine_plain, gl_homogeneous,
/// gl_principal, trig_A, trig_B, unitary, o2N, o2N_twisted}.
/// Throws on unknown names or unsupported parameters.
RealizationPreset realization_preset(const std::string& name, int N);
std::vector<std::string> realization_names();

struct RealizationSweep {
  long long mode_window = 2;
  int exp_window = 1;
  int max_degree = 2;
  int samples = 24;
  uint64_t seed = 1;
};

struct CheckOutcome {
  std::string id;
  int status;  // 0 pass, 1 fail, 2 vacuous
  std::string witness;
};

/// Full verification of one preset: structural gates (assumptions,
/// compatibility, span hypothesis), the dictionary transport of the bracket
/// into the target algebra's own relations, the operator commutators on
/// sampled vectors, and the preset-specific extras.
std::vector<CheckOutcome> verify_realization(const std::string& name, int N,
                                             const RealizationSweep& sweep);

}  // namespace tglie

#endif
