#include "demazure/graded.hpp"

#include <climits>

namespace demazure {

const NilHeckeAlgebra& NilHeckeElement::alg() const {
  if (alg_ == nullptr) throw ValidationError("element has no algebra attached");
  return *alg_;
}

FormalSeries NilHeckeElement::coefficient(int w) const {
  auto it = support_.find(w);
  if (it == support_.end()) return alg().fga().zero();
  return it->second;
}

void NilHeckeElement::add(int w, const FormalSeries& q) {
  const WeylSlice& sl = alg().slice();
  if (w < 0 || w >= static_cast<int>(sl.size()))
    throw OutOfSliceError("basis index outside the slice");
  if (q.nvars() != alg().fga().nvars())
    throw ValidationError("coefficient variable count does not match the lattice");
  FormalSeries lifted = q;
  lifted.set_order(FormalSeries::kExactOrder);
  auto it = support_.find(w);
  if (it == support_.end()) {
    if (!lifted.is_zero()) support_.emplace(w, std::move(lifted));
    return;
  }
  it->second = it->second + lifted;
  if (it->second.is_zero()) support_.erase(it);
}

NilHeckeElement NilHeckeElement::operator+(const NilHeckeElement& other) const {
  NilHeckeElement r = *this;
  for (const auto& [w, q] : other.support_) r.add(w, q);
  return r;
}

NilHeckeElement NilHeckeElement::operator-(const NilHeckeElement& other) const {
  return *this + (-other);
}

NilHeckeElement NilHeckeElement::operator-() const {
  NilHeckeElement r(*alg_);
  for (const auto& [w, q] : support_) r.support_.emplace(w, -q);
  return r;
}

NilHeckeElement NilHeckeElement::operator*(const NilHeckeElement& other) const {
  return alg().nil_product(*this, other);
}

NilHeckeElement NilHeckeElement::scaled(const FormalSeries& q) const {
  NilHeckeElement r(*alg_);
  for (const auto& [w, c] : support_) r.add(w, q * c);
  return r;
}

bool NilHeckeElement::operator==(const NilHeckeElement& other) const {
  for (const auto& [w, q] : support_) {
    auto it = other.support_.find(w);
    if (it == other.support_.end() ? !q.is_zero() : q != it->second) return false;
  }
  for (const auto& [w, q] : other.support_) {
    if (support_.find(w) == support_.end() && !q.is_zero()) return false;
  }
  return true;
}

NilHeckeAlgebra::NilHeckeAlgebra(const WeylSlice& slice, int jobs)
    : slice_(&slice),
      fga_(slice.datum(), FormalGroupLaw::additive(), FormalSeries::kExactOrder),
      ctx_(fga_, slice),
      alg_(ctx_, jobs) {}

NilHeckeElement NilHeckeAlgebra::unit() const { return x_basis(0); }

NilHeckeElement NilHeckeAlgebra::x_basis(int w) const {
  NilHeckeElement r(*this);
  r.add(w, fga_.one());
  return r;
}

NilHeckeElement NilHeckeAlgebra::scalar(const FormalSeries& q) const {
  NilHeckeElement r(*this);
  r.add(0, q);
  return r;
}

NilHeckeElement NilHeckeAlgebra::nil_product(const NilHeckeElement& a,
                                             const NilHeckeElement& b) const {
  return from_twisted(to_twisted(a) * to_twisted(b));
}

TwistedElement NilHeckeAlgebra::to_twisted(const NilHeckeElement& a) const {
  TwistedElement z = alg_.zero();
  for (const auto& [w, q] : a.support()) {
    FormalSeries c = slice_->length(w) % 2 != 0 ? -q : q;
    z = z + alg_.word_product(BasisKind::X, slice_->word(w)).scaled(LocalizedElement(ctx_, c));
  }
  return z;
}

NilHeckeElement NilHeckeAlgebra::from_twisted(const TwistedElement& z) const {
  MembershipResult mr = alg_.membership(z);
  if (!mr.member) throw ValidationError("element does not expand over polynomial scalars");
  NilHeckeElement r(*this);
  for (const auto& [w, q] : mr.coeffs) {
    if (q.is_zero()) continue;
    FormalSeries c = q.series();
    r.add(w, slice_->length(w) % 2 != 0 ? -c : c);
  }
  return r;
}

std::map<int, FormalSeries> NilHeckeAlgebra::delta_coefficients(int v) const {
  const BasisChange& bc = alg_.basis(BasisKind::X);
  std::map<int, FormalSeries> out;
  for (const auto& [w, q] : bc.b_row(v)) {
    if (q.is_zero()) continue;
    FormalSeries c = q.series();
    out.emplace(w, slice_->length(w) % 2 != 0 ? -c : c);
  }
  return out;
}

GradedFiltration::GradedFiltration(const TwistedAlgebra& source, int jobs)
    : source_(&source), nil_(source.slice(), jobs) {}

FiltrationDegree GradedFiltration::filtration_degree(const TwistedElement& z) const {
  MembershipResult mr = source_->membership(z);
  if (!mr.member) throw ValidationError("filtration degree requires a subalgebra member");
  FiltrationDegree out;
  out.i = FormalSeries::kExactOrder;
  const WeylSlice& sl = source_->slice();
  for (const auto& [w, q] : mr.coeffs) {
    if (q.is_zero()) continue;
    int d = q.series().valuation(0);
    out.coefficient_degrees.emplace(w, d);
    out.i = std::min(out.i, d - sl.length(w));
  }
  return out;
}

NilHeckeElement GradedFiltration::eta(const TwistedElement& z, int i) const {
  MembershipResult mr = source_->membership(z);
  if (!mr.member) throw ValidationError("eta requires a subalgebra member");
  const WeylSlice& sl = source_->slice();
  NilHeckeElement r(nil_);
  for (const auto& [w, q] : mr.coeffs) {
    if (q.is_zero()) continue;
    int l = sl.length(w);
    FormalSeries piece = graded_piece(q.series(), i + l);
    if (piece.is_zero()) continue;
    piece.set_order(FormalSeries::kExactOrder);
    r.add(w, l % 2 != 0 ? -piece : piece);
  }
  return r;
}

int GradedFiltration::dual_filtration_degree(const DualElement& f) const {
  int m = FormalSeries::kExactOrder;
  for (const auto& [w, q] : f.delta_values()) {
    if (q.is_zero()) continue;
    if (!q.regular()) return INT_MIN;
    m = std::min(m, q.series().valuation(m));
  }
  return m;
}

DualElement GradedFiltration::phi(const DualElement& f, int i) const {
  DualElement g(nil_.twisted());
  for (const auto& [w, q] : f.delta_values()) {
    if (q.is_zero()) continue;
    if (!q.regular())
      throw ValidationError("dual filtration level requires regular delta values");
    FormalSeries piece = graded_piece(q.series(), i);
    if (piece.is_zero()) continue;
    piece.set_order(FormalSeries::kExactOrder);
    g.add(w, LocalizedElement(nil_.ctx(), std::move(piece)));
  }
  return g;
}

}  // namespace demazure
