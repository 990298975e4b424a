#ifndef TGLIE_VERTEX_HPP
#define TGLIE_VERTEX_HPP

#include "glie.hpp"

namespace tglie {

/// A twisted vertex operator attached to an index pair and a group element.
/// Diagonal pairs at the trivial group element route to the current algebra;
/// otherwise the operator is the normalized normal-ordered product.
struct VertexOpSpec {
  JKey j;
  ExpVec c;
  bool cartan = false;
  Scalar normalization;  // m^{-1} zeta(alpha) kappa(j, c); zero kills the operator

  static VertexOpSpec make(const Model& M, const JKey& j, const ExpVec& c);
  static VertexOpSpec make(const Model& M, const GenKey& k) {
    return make(M, k.j, k.c);
  }
};

struct ModeResult {
  FockVector out;
  long long eplus_terms = 0;
  long long eminus_terms = 0;
};

/// Exact coefficient of z^{-n} in the operator applied to v.
ModeResult apply_mode_counted(const Model& M, const VertexOpSpec& spec,
                              long long n, const FockVector& v);
FockVector apply_mode(const Model& M, const VertexOpSpec& spec, long long n,
                      const FockVector& v);

/// Operator-level symmetry checks on test vectors: the flip identity
///   y_{A,B}(c,n) = (-1)^{delta_ij} c^{-n} y_{-B,-A}(c^{-1},n)
/// and the isometry-orbit identity
///   omega^{rn} y_{A,B}(c,n) = eta(r,alpha) y_{A_r,B_r}(c,n).
bool check_flip_identity(const Model& M, const JKey& j, const ExpVec& c,
                         long long window, const std::vector<FockVector>& vs);
bool check_orbit_identity(const Model& M, const JKey& j, const ExpVec& c, int r,
                          long long window, const std::vector<FockVector>& vs);

/// Group-element pattern of a commutator argument pair.
int case_classifier(const ExpVec& c1, const ExpVec& c2);

struct TheoremCheck {
  bool pass;
  FockVector lhs, rhs;
};

/// Exact comparison of the operator commutator with the closed-form bracket
/// acting through the mode map (central element acting as one).
TheoremCheck verify_theorem(const Model& M, const GenKey& k1, const GenKey& k2,
                            const FockVector& v);

/// The scalar identity tying the normalization constants to the product of
/// root-of-unity factors, for a pair of lattice vectors and an orbit shift.
bool norm_constant_product_holds(const Model& M, const IntVec& alpha,
                                 const IntVec& beta, int r);

}  // namespace tglie

#endif
