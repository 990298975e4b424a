#ifndef TGLIE_GROUPMOD_HPP
#define TGLIE_GROUPMOD_HPP

#include <optional>

#include "fock.hpp"

namespace tglie {

class TModule;

/// Scalar table of the finite-order lift of the isometry to the twisted
/// group algebra: lift^r(e_alpha) = eta(r, alpha) e_{nu^r alpha}.
class EtaTable {
 public:
  EtaTable() = default;
  /// Searches for basis values (default all ones, overridable) such that the
  /// lift is an algebra automorphism with lift^m = Id; when a module is
  /// supplied, candidates satisfying its scalar condition are preferred.
  /// Throws when the search space is exhausted.
  EtaTable(QuadruplePtr quad, const CocycleTable* epsC,
           const std::optional<std::vector<long long>>& overrides,
           const TModule* compat = nullptr);

  long long eta1_exp(const IntVec& alpha) const;           // omega0-exponent
  long long eta_exp(int r, const IntVec& alpha) const;
  Cyclotomic eta(int r, const IntVec& alpha) const;
  const std::vector<long long>& basis_exps() const { return h_; }

 private:
  QuadruplePtr quad_;
  const CocycleTable* epsC_ = nullptr;
  std::vector<long long> h_;                    // eta(1, basis_u) exponents
  std::vector<std::vector<long long>> gmat_;    // g(a_u,a_v) exponents
  bool lift_order_ok() const;
};

enum class TKind { GroupAlgebraQ, QuotientP2P, QuotientP2ZeN, Trivial };

std::string tkind_name(TKind k);
std::optional<TKind> tkind_from_name(const std::string& s);

/// Catalog module over the twisted group algebra, carrying the label set,
/// the action factors and the weight representatives.
class TModule {
 public:
  TModule(TKind kind, QuadruplePtr quad, const CocycleTable* epsC);

  TKind kind() const { return kind_; }

  /// canonical label for a raw lattice vector
  IntVec canonical_label(const IntVec& raw) const;
  IntVec vacuum_label() const;

  /// e_alpha . label = factor * new_label; alpha must lie in Q
  std::pair<Cyclotomic, IntVec> act(const IntVec& alpha, const IntVec& label) const;

  /// the weight representative beta of a label (pairings against invariant
  /// vectors are taken with this representative; canonical labels serve as
  /// their own representatives)
  const IntVec& weight_rep(const IntVec& label) const { return label; }

  /// all labels with coordinates bounded by `window` (canonical forms)
  std::vector<IntVec> labels(int window) const;

 private:
  TKind kind_;
  QuadruplePtr quad_;
  const CocycleTable* epsC_;
};

using TModulePtr = std::shared_ptr<const TModule>;

struct CompatibilityReport {
  struct Entry {
    std::string id;
    bool pass;
    std::string witness;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
  std::string to_string() const;
};

/// Checks both module conditions on a window of labels and all basis
/// vectors: label shifts respect the weight grading, and the lift acts on
/// each weight space by the prescribed root of unity.
CompatibilityReport check_compatibility(const Quadruple& quad,
                                        const CocycleTable& epsC,
                                        const TModule& T, const EtaTable& eta,
                                        int label_window = 2);

/// e_beta as an operator on labelled Fock vectors.
FockVector act_group(const TModule& T, const IntVec& beta, const FockVector& v);

/// gamma_{(0)}(0) as an operator: multiplies a label by m^{-1} <S(gamma), beta>.
FockVector act_zero_mode(const Quadruple& quad, const TModule& T,
                         const IntVec& gamma, const FockVector& v);

/// z^{S(gamma)}-type operator: integer exponent tag per label.
std::map<long long, FockVector> act_z_power(const Quadruple& quad, const TModule& T,
                                            const IntVec& sum_vec,
                                            const FockVector& v);

/// c^{S(gamma)}-type operator with an extra half-integer constant shift:
/// multiplies each label by c^{<sum_vec, beta> + half_extra/2}.
FockVector act_c_power(const Quadruple& quad, const TModule& T, const ExpVec& c,
                       const IntVec& sum_vec, long long twice_extra,
                       const FockVector& v);

}  // namespace tglie

#endif
