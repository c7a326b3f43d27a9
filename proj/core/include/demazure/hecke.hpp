#pragma once

#include <optional>

#include "demazure/twisted.hpp"

namespace demazure {

// Formal affine Hecke algebra over the extended lattice Z gamma + Lambda:
// the subalgebra of the twisted group algebra generated by the scalars and
// the elements T_alpha = x_gamma X_alpha + delta_alpha.  The extra direction
// gamma is the first lattice coordinate; it pairs to zero with every coroot,
// so W fixes it and x_gamma is central.
class HeckeContext {
public:
  HeckeContext(const RootDatum& base, const FormalGroupLaw& law, int order,
               int length_bound, int jobs = 1);
  HeckeContext(const HeckeContext&) = delete;
  HeckeContext& operator=(const HeckeContext&) = delete;

  // Extended datum: rank of the base lattice plus one.
  const RootDatum& datum() const { return datum_; }
  const WeylSlice& slice() const { return slice_; }
  const FormalGroupAlgebra& fga() const { return fga_; }
  const LocAlgebra& ctx() const { return loc_; }
  // Ambient twisted group algebra the Hecke algebra sits inside.
  const TwistedAlgebra& twisted() const { return alg_; }

  const LatticeVec& gamma() const { return gamma_; }
  const FormalSeries& x_gamma() const { return x_gamma_; }
  // Base lattice vector embedded with zero gamma coordinate.
  LatticeVec lift(const LatticeVec& v) const;

  // T_alpha = x_gamma X_alpha + delta_{s_alpha}; s_alpha must lie in the
  // slice.
  TwistedElement t_elem(const Root& alpha) const;
  TwistedElement t_elem(std::size_t i) const;
  // Left-to-right product T_{i_1} ... T_{i_l}; the empty word gives delta_e.
  TwistedElement t_product(const std::vector<int>& word) const;
  // T_{I_w} over the canonical word of w.  Its delta expansion is Bruhat
  // triangular with top coefficient prod_{alpha in Phi_w} (x_alpha -
  // x_gamma)/x_alpha.
  const TwistedElement& t_basis_elem(int w) const;

  // Expansion of z in the T basis.  The inverse change of basis leaves the
  // root-localized scalars, so each diagonal step multiplies by prod x_alpha
  // and then divides exactly by the factors x_alpha - x_gamma; a failed
  // division already certifies non-membership, reported with witness root
  // alpha - gamma.  Otherwise z lies in the Hecke algebra exactly when every
  // coefficient is denominator free.
  MembershipResult t_membership(const TwistedElement& z) const;

private:
  static RootDatum extend(const RootDatum& base);
  // q / prod_{alpha in Phi_w} ((x_alpha - x_gamma)/x_alpha); on failure
  // *failed names the offending class alpha - gamma.
  LocalizedElement divide_diagonal(LocalizedElement q, int w, LatticeVec* failed) const;
  void build_basis() const;

  RootDatum datum_;
  FormalGroupAlgebra fga_;
  WeylSlice slice_;
  LocAlgebra loc_;
  TwistedAlgebra alg_;
  LatticeVec gamma_;
  FormalSeries x_gamma_;
  mutable std::mutex basis_mutex_;
  mutable std::optional<std::vector<TwistedElement>> t_basis_;
};

}  // namespace demazure
