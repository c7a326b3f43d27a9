#pragma once

#include <mutex>

#include "demazure/formal_group.hpp"
#include "demazure/root_datum.hpp"

namespace demazure {

// Completed group algebra of a lattice under a formal group law, truncated at
// a fixed working order: series in one variable x_{omega_j} per lattice basis
// vector, with x_0 = 0 and x_{lam+mu} = F(x_lam, x_mu).
class FormalGroupAlgebra {
public:
  FormalGroupAlgebra(const RootDatum& datum, FormalGroupLaw law, int order);

  const RootDatum& datum() const { return *datum_; }
  const FormalGroupLaw& law() const { return law_; }
  int order() const { return order_; }
  std::size_t nvars() const { return datum_->lattice_rank(); }
  const ParamSetPtr& params() const { return law_.params(); }

  FormalSeries zero() const { return FormalSeries(nvars(), params(), order_); }
  FormalSeries one() const { return FormalSeries::constant(nvars(), params(), order_, 1); }
  FormalSeries constant(Rational v) const {
    return FormalSeries::constant(nvars(), params(), order_, std::move(v));
  }

  // The class x_lambda at the working order (memoized).
  FormalSeries x_of(const LatticeVec& lam) const;
  FormalSeries x_of_root(const Root& r) const { return x_of(r.lattice); }
  FormalSeries x_of_minus(const Root& r) const;

  // Ring endomorphism induced by a lattice map: variable j -> x_{M e_j}.
  FormalSeries act(const IntMatrix& m, const FormalSeries& a) const;
  FormalSeries reflect(std::size_t i, const FormalSeries& a) const;
  // x_lambda -> x_{-lambda}.
  FormalSeries tau(const FormalSeries& a) const;

  // Exact division: quotient q with q*b = a, where b has linear lowest term.
  // Throws NonDivisibleError when no such q exists; q.order = order(a) - 1.
  FormalSeries divide_exact(const FormalSeries& a, const FormalSeries& b) const;
  // Division by x_alpha for a positive real root alpha.
  FormalSeries divide_by_root(const FormalSeries& a, const Root& alpha) const;

  // (a - s_i(a)) / x_{alpha_i}
  FormalSeries demazure(std::size_t i, const FormalSeries& a) const;
  FormalSeries demazure_root(const Root& alpha, const FormalSeries& a) const;
  // kappa_alpha = 1/x_alpha + 1/x_{-alpha}, computed by two exact divisions.
  FormalSeries kappa(const Root& alpha) const;
  // C_alpha(a) = kappa_alpha a - Delta_alpha(a)
  FormalSeries pushpull(const Root& alpha, const FormalSeries& a) const;

private:
  FormalSeries compute_x(const LatticeVec& lam) const;

  const RootDatum* datum_;
  FormalGroupLaw law_;
  int order_;
  mutable std::mutex mutex_;
  mutable std::map<LatticeVec, FormalSeries> x_cache_;
};

}  // namespace demazure
