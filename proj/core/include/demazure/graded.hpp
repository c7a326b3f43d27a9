#pragma once

#include "demazure/duals.hpp"

namespace demazure {

class NilHeckeAlgebra;

// Element of the nil affine Hecke algebra of a slice: finite sum of left
// polynomial scalars against the basis x_w.  Coefficients are exact
// polynomials; add() stamps them with the exact order marker.
class NilHeckeElement {
public:
  NilHeckeElement() : alg_(nullptr) {}
  explicit NilHeckeElement(const NilHeckeAlgebra& alg) : alg_(&alg) {}

  const NilHeckeAlgebra& alg() const;
  const std::map<int, FormalSeries>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  FormalSeries coefficient(int w) const;  // zero when absent
  void add(int w, const FormalSeries& q);

  NilHeckeElement operator+(const NilHeckeElement& other) const;
  NilHeckeElement operator-(const NilHeckeElement& other) const;
  NilHeckeElement operator-() const;
  NilHeckeElement operator*(const NilHeckeElement& other) const;
  NilHeckeElement scaled(const FormalSeries& q) const;  // left scalar
  bool operator==(const NilHeckeElement& other) const;
  bool operator!=(const NilHeckeElement& other) const { return !(*this == other); }

private:
  const NilHeckeAlgebra* alg_;
  std::map<int, FormalSeries> support_;
};

// The nil affine Hecke algebra over a slice, realized as the additive-law
// twisted algebra with exact polynomial scalars under x_w = (-1)^{l(w)} X_{I_w}.
// Holds its own additive instance, so it is pinned in place once built.
class NilHeckeAlgebra {
public:
  explicit NilHeckeAlgebra(const WeylSlice& slice, int jobs = 1);
  NilHeckeAlgebra(const NilHeckeAlgebra&) = delete;
  NilHeckeAlgebra& operator=(const NilHeckeAlgebra&) = delete;

  const WeylSlice& slice() const { return *slice_; }
  const FormalGroupAlgebra& fga() const { return fga_; }
  const LocAlgebra& ctx() const { return ctx_; }
  const TwistedAlgebra& twisted() const { return alg_; }

  NilHeckeElement zero() const { return NilHeckeElement(*this); }
  NilHeckeElement unit() const;          // x_e
  NilHeckeElement x_basis(int w) const;  // x_w
  NilHeckeElement scalar(const FormalSeries& q) const;

  // x_u x_v = x_{uv} when lengths add, 0 otherwise, with the divided
  // difference commutation moving scalars to the left.
  NilHeckeElement nil_product(const NilHeckeElement& a, const NilHeckeElement& b) const;

  TwistedElement to_twisted(const NilHeckeElement& a) const;
  // pre: z expands over polynomial scalars; otherwise ValidationError.
  NilHeckeElement from_twisted(const TwistedElement& z) const;

  // delta_v = sum_w b_{v,w} x_w; every b_{v,w} comes out denominator free.
  std::map<int, FormalSeries> delta_coefficients(int v) const;

private:
  const WeylSlice* slice_;
  FormalGroupAlgebra fga_;
  LocAlgebra ctx_;
  TwistedAlgebra alg_;
};

// Degree of an element in the scalar-valuation-minus-length filtration,
// with the coefficient degrees of its X expansion as the certificate.
struct FiltrationDegree {
  int i = 0;
  std::map<int, int> coefficient_degrees;  // w -> deg q_w, zero rows dropped
};

// The filtration maps of a twisted algebra into the nil Hecke algebra of
// the same slice: eta on elements, phi on functionals.
class GradedFiltration {
public:
  explicit GradedFiltration(const TwistedAlgebra& source, int jobs = 1);
  GradedFiltration(const GradedFiltration&) = delete;
  GradedFiltration& operator=(const GradedFiltration&) = delete;

  const TwistedAlgebra& source() const { return *source_; }
  const NilHeckeAlgebra& nil() const { return nil_; }

  // min over the X expansion of deg q_w - l(w); the zero element reports
  // FormalSeries::kExactOrder.  pre: z passes membership.
  FiltrationDegree filtration_degree(const TwistedElement& z) const;
  // q X_{I_w} -> (-1)^{l(w)} (q)_{i+l(w)} x_w on each expansion row.
  // pre: z passes membership and i is at most its filtration degree.
  NilHeckeElement eta(const TwistedElement& z, int i) const;

  // max i with every delta value of valuation >= i; zero reports
  // FormalSeries::kExactOrder, a pole among the values reports INT_MIN.
  int dual_filtration_degree(const DualElement& f) const;
  // Degree-i leading forms of the delta values, as a functional on the nil
  // side.  pre: every delta value is regular of valuation >= i.
  DualElement phi(const DualElement& f, int i) const;

private:
  const TwistedAlgebra* source_;
  NilHeckeAlgebra nil_;
};

}  // namespace demazure
