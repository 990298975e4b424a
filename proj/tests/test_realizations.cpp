#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realizations.hpp"

using namespace tglie;

namespace {

void run_preset(const std::string& name, int N, int samples = 6) {
  RealizationSweep sweep;
  sweep.mode_window = 1;
  sweep.exp_window = 1;
  sweep.max_degree = 1;
  sweep.samples = samples;
  sweep.seed = 7;
  auto out = verify_realization(name, N, sweep);
  for (const auto& rec : out) {
    std::string msg = rec.id + (rec.witness.empty() ? "" : " @ " + rec.witness);
    CHECK_MESSAGE(rec.status == 0, msg);
  }
}

}  // namespace

TEST_CASE("presets pass their structural gates and dictionary sweeps") {
  run_preset("twisted_affine", 2);
  run_preset("twisted_affine_plain", 2);
  run_preset("gl_homogeneous", 2);
  run_preset("gl_principal", 2);
  run_preset("trig_A", 1);
  run_preset("trig_B", 1);
  run_preset("unitary", 2);
  run_preset("o2N", 2);
  run_preset("o2N_twisted", 2);
}

TEST_CASE("preset catalog is closed under the name list") {
  for (const auto& n : realization_names()) {
    int N = n.rfind("trig", 0) == 0 ? 1 : 2;
    auto p = realization_preset(n, N);
    CHECK(p.name == n);
    CHECK(check_assumptions(p.spec).all_pass());
  }
  CHECK_THROWS_AS(realization_preset("nonsense", 2), std::invalid_argument);
}
