#pragma once

#include "demazure/formal_group_algebra.hpp"
#include "demazure/weyl.hpp"

namespace demazure {

// Shared context: working algebra, Weyl slice, and per-root caches for the
// units x_gamma / x_{-gamma} used when a reflection sends a denominator root
// negative.
class LocAlgebra {
public:
  LocAlgebra(const FormalGroupAlgebra& fga, const WeylSlice& slice);

  const FormalGroupAlgebra& fga() const { return *fga_; }
  const WeylSlice& slice() const { return *slice_; }
  const RootDatum& datum() const { return fga_->datum(); }

  // x_gamma / x_{-gamma}: a unit with constant term -1.
  const FormalSeries& neg_unit(const LatticeVec& gamma) const;

private:
  const FormalGroupAlgebra* fga_;
  const WeylSlice* slice_;
  mutable std::mutex mutex_;
  mutable std::map<LatticeVec, FormalSeries> neg_units_;
};

// Element num / prod x_gamma^k over the positive real roots gamma, kept in
// normal form: no denominator class divides the numerator.
class LocalizedElement {
public:
  using Den = std::map<LatticeVec, int>;

  LocalizedElement() : ctx_(nullptr) {}
  LocalizedElement(const LocAlgebra& ctx, FormalSeries num);
  LocalizedElement(const LocAlgebra& ctx, FormalSeries num, Den den);

  static LocalizedElement zero(const LocAlgebra& ctx);
  static LocalizedElement one(const LocAlgebra& ctx);
  static LocalizedElement of_constant(const LocAlgebra& ctx, Rational v);
  static LocalizedElement inverse_root(const LocAlgebra& ctx, const Root& gamma);

  const LocAlgebra& ctx() const;
  const FormalSeries& num() const { return num_; }
  const Den& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // True when the denominator is trivial, i.e. the element lies in S.
  bool regular() const { return den_.empty(); }
  // The underlying series; requires regular().
  const FormalSeries& series() const;

  LocalizedElement operator+(const LocalizedElement& other) const;
  LocalizedElement operator-(const LocalizedElement& other) const;
  LocalizedElement operator*(const LocalizedElement& other) const;
  LocalizedElement operator-() const;
  LocalizedElement scaled(const Coefficient& c) const;
  LocalizedElement times(const FormalSeries& s) const;
  bool operator==(const LocalizedElement& other) const;
  bool operator!=(const LocalizedElement& other) const { return !(*this == other); }

  // Reciprocal; the normalized numerator must be a unit series.
  LocalizedElement inverse() const;

  // Image under a slice element (lattice substitution plus denominator
  // transport), and under negation of the lattice.
  LocalizedElement weyl_act(int w) const;
  LocalizedElement tau() const;

  // (q - s_i(q)) / x_{alpha_i}, staying in the localized ring.
  LocalizedElement demazure(std::size_t i) const;

  std::string to_string() const;

private:
  void normalize();
  LocalizedElement act_roots(const IntMatrix& m) const;

  const LocAlgebra* ctx_;
  FormalSeries num_;
  Den den_;
};

}  // namespace demazure
