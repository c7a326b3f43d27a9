#pragma once

#include "demazure/twisted.hpp"

namespace demazure {

// Functional on the twisted algebra recorded by its values on the delta
// basis.  Since the coproduct is diagonal on delta terms, the dual product
// is pointwise on these values, and the dual of the slice is a commutative
// ring with unit the all-ones functional.
class DualElement {
public:
  DualElement() : alg_(nullptr) {}
  explicit DualElement(const TwistedAlgebra& alg) : alg_(&alg) {}

  const TwistedAlgebra& alg() const;
  const std::map<int, LocalizedElement>& delta_values() const { return values_; }
  bool is_zero() const { return values_.empty(); }
  LocalizedElement value(int w) const;  // zero when absent
  void add(int w, const LocalizedElement& q);

  DualElement operator+(const DualElement& other) const;
  DualElement operator-(const DualElement& other) const;
  DualElement operator-() const;
  DualElement operator*(const DualElement& other) const;  // pointwise
  DualElement scaled(const LocalizedElement& q) const;
  bool operator==(const DualElement& other) const;
  bool operator!=(const DualElement& other) const { return !(*this == other); }

private:
  const TwistedAlgebra* alg_;
  std::map<int, LocalizedElement> values_;
};

// Expansion slice of the dual word basis product for a fixed pair:
// B*_{I_u} B*_{I_v} = sum_w table[w] B*_{I_w} with B in {X, Y}.  Entries
// are exact for every w in the slice because the defining system is
// triangular for the Bruhat order.
struct StructureConstants {
  int u = -1;
  int v = -1;
  BasisKind kind = BasisKind::Y;
  std::vector<int> word_u;
  std::vector<int> word_v;
  std::map<int, FormalSeries> table;  // nonzero entries only
};

enum class ConstantsMethod { triangular, recursion };

class DualAlgebra {
public:
  explicit DualAlgebra(const TwistedAlgebra& alg, int jobs = 1);

  const TwistedAlgebra& twisted() const { return *alg_; }
  const WeylSlice& slice() const { return alg_->slice(); }

  DualElement zero() const { return DualElement(*alg_); }
  // The unit X*_{I_e}: every delta value equals one.
  DualElement unit() const;
  // X*_{I_w} or Y*_{I_w}; delta values form the w column of the b table.
  DualElement dual_basis_elem(BasisKind kind, int w) const;
  // sum_u coeffs[u] * (dual basis element at u).
  DualElement dual_from_basis(const std::map<int, FormalSeries>& coeffs, BasisKind kind) const;
  // Word-basis coefficients f(X_{I_w}) = sum_v a_{w,v} f(delta_v); the dual
  // of the slice subalgebra is cut out by every coefficient being regular.
  std::map<int, LocalizedElement> coefficients(const DualElement& f, BasisKind kind) const;
  bool is_member(const DualElement& f) const;

  // Product expansion of dual word basis elements, either by solving the
  // triangular system sum_w p_w b_{t,w} = b_{t,u} b_{t,v} upward in t, or by
  // the closed recursion p_w = (b_{w,u} b_{w,v} - sum_{t<w} p_t b_{w,t}) / b_{w,w}.
  StructureConstants structure_constants(int u, int v, BasisKind kind,
                                         ConstantsMethod method) const;

  // Billey's closed formula for b^Y_{u,v} under the additive law: the sum
  // over increasing position sequences in the canonical word of u whose
  // subword is reduced for v, of the products of prefix-rotated simple roots.
  FormalSeries billey(int u, int v) const;

private:
  LocalizedElement inv_diag(BasisKind kind, int w) const;  // 1 / b_{w,w}
  void check_index(int w) const;

  const TwistedAlgebra* alg_;
  int jobs_;
};

}  // namespace demazure
