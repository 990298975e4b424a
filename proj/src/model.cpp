#include "model.hpp"

#include <random>

namespace tglie {

FockVector Model::vacuum() const {
  return FockVector::basis(FockKey{T->vacuum_label(), {}}, Scalar::one(field()));
}

Model build_model(const QuadrupleSpec& spec, const ModelOptions& opts) {
  Model m;
  m.quad = std::make_shared<Quadruple>(spec);
  m.epsC = std::make_shared<CocycleTable>(m.quad, opts.epsC_overrides);
  m.T = std::make_shared<TModule>(opts.tkind, m.quad, m.epsC.get());
  m.eta = std::make_shared<EtaTable>(m.quad, m.epsC.get(), opts.eta_overrides,
                                     m.T.get());
  m.hb = std::make_shared<HeisenbergBasis>(m.quad);
  return m;
}

std::vector<FockVector> sample_fock_vectors(const Model& M, uint64_t seed,
                                            int count, int max_degree) {
  std::mt19937_64 rng(seed);
  std::vector<FockVector> out;
  auto labels = M.T->labels(1);
  for (const auto& l : labels) {
    out.push_back(FockVector::basis(FockKey{l, {}}, Scalar::one(M.field())));
    if (static_cast<int>(out.size()) >= count) break;
  }
  std::uniform_int_distribution<size_t> pl(0, labels.size() - 1);
  std::uniform_int_distribution<int> deg(1, std::max(1, max_degree));
  std::uniform_int_distribution<int> rep(0, M.quad->N() - 1);
  std::uniform_int_distribution<int> coeff(1, 3);
  while (static_cast<int>(out.size()) < count) {
    FockVector v =
        FockVector::basis(FockKey{labels[pl(rng)], {}}, Scalar::one(M.field()));
    int budget = deg(rng);
    int guard = 0;
    while (budget > 0 && guard++ < 24) {
      std::uniform_int_distribution<int> part(1, budget);
      int p = part(rng);
      FockVector w = heisenberg_apply(*M.hb, rep(rng), -p, v);
      if (!w.is_zero()) {
        v = w.scaled(Scalar::from_rat(M.field(), Rat(coeff(rng))));
        budget -= p;
      }
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<long long>> eps_star_overrides(const Quadruple& quad) {
  const auto& B = quad.q_basis();
  std::vector<std::vector<long long>> ov(B.size(),
                                         std::vector<long long>(B.size(), 0));
  for (size_t u = 0; u < B.size(); ++u)
    for (size_t v = 0; v < B.size(); ++v)
      ov[u][v] = eps_star_sign(B[u], B[v]) == 1 ? 0 : quad.m0() / 2;
  return ov;
}

}  // namespace tglie
