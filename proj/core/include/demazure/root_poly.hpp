#pragma once

#include "demazure/twisted.hpp"

namespace demazure {

// Formal root polynomials: ordered products of the factors h^X_i(lambda) =
// 1 - y_{-lambda} X_i (resp. h^Y_i(lambda) = 1 - y_lambda Y_i) over the roots
// cut out by a reduced word.  The scalars carry a second, W-fixed copy of the
// lattice for the y-variables, so y's commute with every delta and every
// divided-difference element; evaluation sends y_lambda to x_{-lambda} and
// lands back in the algebra this context was built from.
class RootPolyContext {
public:
  explicit RootPolyContext(const TwistedAlgebra& base, int jobs = 1);
  RootPolyContext(const RootPolyContext&) = delete;
  RootPolyContext& operator=(const RootPolyContext&) = delete;

  const TwistedAlgebra& base() const { return *base_; }
  // Working algebra over the doubled lattice: x-block first, y-block second.
  const TwistedAlgebra& doubled() const { return alg_; }
  const WeylSlice& slice() const { return slice_; }
  const FormalGroupAlgebra& fga() const { return fga_; }
  const LocAlgebra& ctx() const { return loc_; }

  // Base lattice vector placed in the x-block (resp. the y-block).
  LatticeVec x_embed(const LatticeVec& v) const;
  LatticeVec y_embed(const LatticeVec& v) const;
  // The class y_lambda for a base lattice vector.
  FormalSeries y_of(const LatticeVec& v) const;

  // 1 - y_{-lambda} X_i for X, 1 - y_lambda Y_i for Y; lambda in base
  // coordinates.
  TwistedElement h_factor(BasisKind kind, std::size_t i, const LatticeVec& lambda) const;

  // Ordered product of h factors over the word, the k-th factor taken at
  // s_{i_1}...s_{i_{k-1}}(alpha_{i_k}); rejects non-reduced words.
  TwistedElement root_polynomial(BasisKind kind, const std::vector<int>& word) const;

  // theta_w = prod_{alpha in Phi_w} (-x_{-alpha}/x_alpha), over the base ring.
  LocalizedElement theta(int w) const;

  // y_lambda -> x_{-lambda} on a scalar, then down to the base ring; the
  // argument must not mention y's in its denominator.
  LocalizedElement evaluate_scalar(const LocalizedElement& q) const;
  // Coefficientwise evaluation onto the base algebra.
  TwistedElement evaluate(const TwistedElement& z) const;

  // Expansion of z over the X (resp. Y) word basis of the doubled algebra;
  // Bruhat-triangular for root polynomials.
  std::map<int, LocalizedElement> k_coefficients(const TwistedElement& z, BasisKind kind) const;

private:
  static RootDatum doubled_datum(const RootDatum& base);
  LatticeVec project_vec(const LatticeVec& v) const;

  const TwistedAlgebra* base_;
  RootDatum datum_;
  FormalGroupAlgebra fga_;
  WeylSlice slice_;
  LocAlgebra loc_;
  TwistedAlgebra alg_;
  std::vector<FormalSeries> ev_images_;
};

}  // namespace demazure
