#ifndef TGLIE_GLIE_HPP
#define TGLIE_GLIE_HPP

#include "assoc.hpp"
#include "model.hpp"

namespace tglie {

/// Spanning-element label of the lattice Lie algebra: an index pair in J, a
/// group-element exponent and a mode.
struct GenKey {
  JKey j;
  ExpVec c;  // q-units
  long long n = 0;
  friend bool operator==(const GenKey&, const GenKey&) = default;
  friend auto operator<=>(const GenKey&, const GenKey&) = default;
  std::string to_string() const;
};

struct GenCanon {
  bool zero = false;
  GenKey key;
  Scalar factor;  // element(input) = factor * element(key)
};

/// Deterministic representative under the symmetrization flip and the
/// isometry-orbit relations; detects labels forced to vanish.
GenCanon canonicalize_generator(const Model& M, const GenKey& key);

/// The full flip/orbit equivalence class with exact factors:
/// element(key) = factor * element(k) for each (k, factor) listed.
/// Returns nullopt when the relations force the element to vanish.
std::optional<std::map<GenKey, Scalar>> generator_orbit(const Model& M,
                                                        const GenKey& key);

class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(const KFieldPtr& K) : central_(Scalar::zero(K)) {}

  const std::map<GenKey, Scalar>& terms() const { return t_; }
  const Scalar& central() const { return central_; }
  bool is_zero() const;

  /// canonicalizes the key before inserting
  void add(const Model& M, const GenKey& k, const Scalar& v);
  void add_central(const Scalar& v);

  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement scaled(const Scalar& s) const;
  bool operator==(const LieElement& o) const;

  std::string to_string() const;

 private:
  std::map<GenKey, Scalar> t_;
  Scalar central_;
};

LieElement lie_generator(const Model& M, const GenKey& k);

/// Closed-form bracket of two spanning elements: four shifted generator
/// families plus two mode-weighted central families, summed over the
/// isometry order.
LieElement bracket_pair(const Model& M, const GenKey& x, const GenKey& y);
LieElement bracket_cr(const Model& M, const LieElement& x, const LieElement& y);

/// The lattice involutive algebra on the index set J, for feeding the
/// first-principles bracket: multiplication through the product cocycle,
/// the signed-pair involution and the isometry lift as the automorphism.
struct GQAssoc {
  InvolutiveAlgebra algebra;
  std::vector<JKey> keys;        // basis order
  std::map<JKey, int> index_of;
};
GQAssoc build_gq_as_assoc(const Model& M);

/// Raw expansion of a spanning element over the lattice algebra.
AssocElement expand_generator(const Model& M, const GQAssoc& G, const GenKey& k);
AssocElement expand_element(const Model& M, const GQAssoc& G, const LieElement& x);

}  // namespace tglie

#endif
