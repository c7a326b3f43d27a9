#pragma once

#include "demazure/series.hpp"

namespace demazure {

enum class LawKind { additive, multiplicative, hyperbolic };

// One-dimensional formal group law over Q[params], one of
//   additive        F(x,y) = x + y
//   multiplicative  F(x,y) = x + y - beta*x*y
//   hyperbolic      F(x,y) = (x + y - mu1*x*y) / (1 + mu2*x*y)
// with the law parameters either symbolic generators or fixed rationals.
class FormalGroupLaw {
public:
  static FormalGroupLaw additive();
  static FormalGroupLaw multiplicative(ParamSetPtr params, Coefficient beta);
  static FormalGroupLaw hyperbolic(ParamSetPtr params, Coefficient mu1, Coefficient mu2);
  // Symbolic versions declaring the conventional parameter names.
  static FormalGroupLaw multiplicative_symbolic();
  static FormalGroupLaw hyperbolic_symbolic();

  LawKind kind() const { return kind_; }
  const ParamSetPtr& params() const { return params_; }
  const Coefficient& beta() const { return beta_; }
  const Coefficient& mu1() const { return mu1_; }
  const Coefficient& mu2() const { return mu2_; }

  // F(a, b); both arguments need zero constant term.
  FormalSeries combine(const FormalSeries& a, const FormalSeries& b) const;
  // The formal inverse series i(a): combine(a, inverse(a)) == 0.
  FormalSeries inverse(const FormalSeries& a) const;
  // F(x, y) in a fresh two-variable ring truncated to `order`.
  FormalSeries law_series(int order) const;

private:
  FormalGroupLaw(LawKind kind, ParamSetPtr params, Coefficient beta, Coefficient mu1,
                 Coefficient mu2)
      : kind_(kind), params_(std::move(params)), beta_(std::move(beta)), mu1_(std::move(mu1)),
        mu2_(std::move(mu2)) {}

  LawKind kind_;
  ParamSetPtr params_;
  Coefficient beta_, mu1_, mu2_;
};

// 1 + v + v^2 + ... truncated to v's order; v must have positive valuation.
FormalSeries geometric_series(const FormalSeries& v);

// Reciprocal of a series whose constant term is a nonzero rational.
FormalSeries invert_unit(const FormalSeries& u);

}  // namespace demazure
