#include "demazure/formal_group.hpp"

#include "demazure/errors.hpp"

namespace demazure {

FormalGroupLaw FormalGroupLaw::additive() {
  ParamSetPtr none = ParamSet::make({});
  Coefficient z = Coefficient::zero(none);
  return FormalGroupLaw(LawKind::additive, none, z, z, z);
}

FormalGroupLaw FormalGroupLaw::multiplicative(ParamSetPtr params, Coefficient beta) {
  Coefficient z = Coefficient::zero(params);
  return FormalGroupLaw(LawKind::multiplicative, params, std::move(beta), z, z);
}

FormalGroupLaw FormalGroupLaw::hyperbolic(ParamSetPtr params, Coefficient mu1, Coefficient mu2) {
  Coefficient z = Coefficient::zero(params);
  return FormalGroupLaw(LawKind::hyperbolic, params, z, std::move(mu1), std::move(mu2));
}

FormalGroupLaw FormalGroupLaw::multiplicative_symbolic() {
  ParamSetPtr p = ParamSet::make({"beta"});
  return multiplicative(p, Coefficient::parameter(p, 0));
}

FormalGroupLaw FormalGroupLaw::hyperbolic_symbolic() {
  ParamSetPtr p = ParamSet::make({"mu1", "mu2"});
  return hyperbolic(p, Coefficient::parameter(p, 0), Coefficient::parameter(p, 1));
}

FormalSeries geometric_series(const FormalSeries& v) {
  if (v.valuation(1) < 1)
    throw ValidationError("geometric series needs positive valuation");
  if (v.order() == FormalSeries::kExactOrder && !v.is_zero())
    throw PrecisionError("geometric series of a nonzero series needs a finite order");
  FormalSeries sum = FormalSeries::constant(v.nvars(), v.params(), v.order(), 1);
  if (v.is_zero()) return sum;
  FormalSeries pow = sum;
  int val = v.valuation(1);
  for (int k = 1; static_cast<long long>(k) * val <= v.order(); ++k) {
    pow = pow * v;
    if (pow.is_zero()) break;
    sum = sum + pow;
  }
  return sum;
}

FormalSeries invert_unit(const FormalSeries& u) {
  Coefficient c0 = u.constant_coeff();
  if (!c0.is_constant() || c0.is_zero())
    throw ValidationError("series is not a unit with rational constant term");
  Coefficient inv = c0.inverse();
  // u = c0 (1 - v), 1/u = (1/c0) sum v^k.
  FormalSeries one = FormalSeries::constant(u.nvars(), u.params(), u.order(), 1);
  FormalSeries v = one - u.scaled(inv);
  return geometric_series(v).scaled(inv);
}

static void require_no_constant(const FormalSeries& a, const char* who) {
  if (!a.constant_coeff().is_zero())
    throw ValidationError(std::string(who) + ": argument has a nonzero constant term");
}

FormalSeries FormalGroupLaw::combine(const FormalSeries& a, const FormalSeries& b) const {
  require_no_constant(a, "formal group combine");
  require_no_constant(b, "formal group combine");
  switch (kind_) {
    case LawKind::additive:
      return a + b;
    case LawKind::multiplicative:
      return a + b - (a * b).scaled(beta_);
    case LawKind::hyperbolic: {
      FormalSeries ab = a * b;
      FormalSeries num = a + b - ab.scaled(mu1_);
      FormalSeries v = -ab.scaled(mu2_);  // 1/(1 + mu2 ab) = sum (-mu2 ab)^k
      if (v.is_zero()) return num;
      return num * geometric_series(v);
    }
  }
  throw ValidationError("unknown formal group law");
}

FormalSeries FormalGroupLaw::inverse(const FormalSeries& a) const {
  require_no_constant(a, "formal inverse");
  switch (kind_) {
    case LawKind::additive:
      return -a;
    case LawKind::multiplicative: {
      // i(x) = -x/(1 - beta x)
      FormalSeries v = a.scaled(beta_);
      if (v.is_zero()) return -a;
      return -(a * geometric_series(v));
    }
    case LawKind::hyperbolic: {
      // Solving F(x, y) = 0 forces x + y - mu1 x y = 0, so i(x) = -x/(1 - mu1 x).
      FormalSeries v = a.scaled(mu1_);
      if (v.is_zero()) return -a;
      return -(a * geometric_series(v));
    }
  }
  throw ValidationError("unknown formal group law");
}

FormalSeries FormalGroupLaw::law_series(int order) const {
  FormalSeries x = FormalSeries::variable(2, params_, order, 0);
  FormalSeries y = FormalSeries::variable(2, params_, order, 1);
  return combine(x, y);
}

}  // namespace demazure
