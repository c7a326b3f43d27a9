#include "demazure/localized.hpp"

#include <sstream>

namespace demazure {

LocAlgebra::LocAlgebra(const FormalGroupAlgebra& fga, const WeylSlice& slice)
    : fga_(&fga), slice_(&slice) {
  if (&fga.datum() != &slice.datum())
    throw ValidationError("algebra and slice use different root data");
}

const FormalSeries& LocAlgebra::neg_unit(const LatticeVec& gamma) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = neg_units_.find(gamma);
    if (it != neg_units_.end()) return it->second;
  }
  // x_gamma = x_gamma - x_{-gamma} + x_{-gamma}; dividing x_gamma by x_{-gamma}
  // is exact with a unit quotient (constant term -1).
  LatticeVec neg(gamma.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -gamma[i];
  FormalSeries u = fga_->divide_exact(fga_->x_of(gamma), fga_->x_of(neg));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = neg_units_.emplace(gamma, std::move(u));
  return it->second;
}

LocalizedElement::LocalizedElement(const LocAlgebra& ctx, FormalSeries num)
    : ctx_(&ctx), num_(std::move(num)) {}

LocalizedElement::LocalizedElement(const LocAlgebra& ctx, FormalSeries num, Den den)
    : ctx_(&ctx), num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [v, k] : den_) {
    if (k < 0) throw ValidationError("negative denominator multiplicity");
    const Root& r = ctx_->slice().root_of(v);  // must be a tabulated positive root
    (void)r;
  }
  normalize();
}

const LocAlgebra& LocalizedElement::ctx() const {
  if (!ctx_) throw ValidationError("empty localized element");
  return *ctx_;
}

LocalizedElement LocalizedElement::zero(const LocAlgebra& ctx) {
  return LocalizedElement(ctx, ctx.fga().zero());
}

LocalizedElement LocalizedElement::one(const LocAlgebra& ctx) {
  return LocalizedElement(ctx, ctx.fga().one());
}

LocalizedElement LocalizedElement::of_constant(const LocAlgebra& ctx, Rational v) {
  return LocalizedElement(ctx, ctx.fga().constant(std::move(v)));
}

LocalizedElement LocalizedElement::inverse_root(const LocAlgebra& ctx, const Root& gamma) {
  if (!gamma.positive) throw ValidationError("denominator roots must be positive");
  LocalizedElement r(ctx, ctx.fga().one());
  r.den_[gamma.lattice] = 1;
  return r;
}

const FormalSeries& LocalizedElement::series() const {
  if (!den_.empty())
    throw ValidationError("localized element has a nontrivial denominator: " + to_string());
  return num_;
}

void LocalizedElement::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  const auto& fga = ctx_->fga();
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      try {
        num_ = fga.divide_exact(num_, fga.x_of(it->first));
      } catch (const NonDivisibleError&) {
        break;
      }
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : ++it;
  }
}

LocalizedElement LocalizedElement::operator+(const LocalizedElement& other) const {
  if (!ctx_ || !other.ctx_) throw ValidationError("empty localized element");
  const auto& fga = ctx_->fga();
  Den den;
  for (const auto& [v, k] : den_) den[v] = k;
  for (const auto& [v, k] : other.den_) den[v] = std::max(den[v], k);
  FormalSeries a = num_, b = other.num_;
  for (const auto& [v, k] : den) {
    auto ita = den_.find(v);
    auto itb = other.den_.find(v);
    int ka = ita == den_.end() ? 0 : ita->second;
    int kb = itb == other.den_.end() ? 0 : itb->second;
    for (int j = 0; j < k - ka; ++j) a = a * fga.x_of(v);
    for (int j = 0; j < k - kb; ++j) b = b * fga.x_of(v);
  }
  LocalizedElement r(*ctx_, a + b);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

LocalizedElement LocalizedElement::operator-() const {
  LocalizedElement r = *this;
  r.num_ = -r.num_;
  return r;
}

LocalizedElement LocalizedElement::operator-(const LocalizedElement& other) const {
  return *this + (-other);
}

LocalizedElement LocalizedElement::operator*(const LocalizedElement& other) const {
  if (!ctx_ || !other.ctx_) throw ValidationError("empty localized element");
  LocalizedElement r(*ctx_, num_ * other.num_);
  r.den_ = den_;
  for (const auto& [v, k] : other.den_) r.den_[v] += k;
  r.normalize();
  return r;
}

LocalizedElement LocalizedElement::scaled(const Coefficient& c) const {
  LocalizedElement r(*ctx_, num_.scaled(c));
  r.den_ = c.is_zero() ? Den{} : den_;
  return r;
}

LocalizedElement LocalizedElement::times(const FormalSeries& s) const {
  LocalizedElement r(*ctx_, num_ * s);
  r.den_ = den_;
  r.normalize();
  return r;
}

bool LocalizedElement::operator==(const LocalizedElement& other) const {
  if (den_ == other.den_) return num_ == other.num_;
  // Clear denominators and compare at the joint order.  Truncation can leave
  // equal values with different denominator sets, so cross multiply by the
  // parts missing from each side.
  if (!ctx_ || !other.ctx_) throw ValidationError("empty localized element");
  FormalSeries lhs = num_;
  FormalSeries rhs = other.num_;
  for (const auto& [v, k] : other.den_) {
    int here = den_.count(v) ? den_.at(v) : 0;
    for (int t = here; t < k; ++t) lhs = lhs * ctx_->fga().x_of(v);
  }
  for (const auto& [v, k] : den_) {
    int there = other.den_.count(v) ? other.den_.at(v) : 0;
    for (int t = there; t < k; ++t) rhs = rhs * ctx_->fga().x_of(v);
  }
  return lhs == rhs;
}

LocalizedElement LocalizedElement::inverse() const {
  if (num_.is_zero()) throw ValidationError("zero is not invertible");
  if (!num_.constant_coeff().is_constant() || num_.constant_coeff().is_zero())
    throw ValidationError("numerator is not a unit series: " + num_.to_string());
  const auto& fga = ctx_->fga();
  FormalSeries n = invert_unit(num_);
  for (const auto& [v, k] : den_)
    for (int j = 0; j < k; ++j) n = n * fga.x_of(v);
  return LocalizedElement(*ctx_, std::move(n));
}

LocalizedElement LocalizedElement::act_roots(const IntMatrix& m) const {
  const auto& fga = ctx_->fga();
  const auto& slice = ctx_->slice();
  FormalSeries n = fga.act(m, num_);
  Den den;
  for (const auto& [v, k] : den_) {
    LatticeVec image = m.apply(v);
    auto [sign, root] = slice.classify(image);
    if (sign > 0) {
      den[root->lattice] += k;
    } else {
      // 1/x_{-gamma} = (x_gamma / x_{-gamma}) * (1/x_gamma)
      const FormalSeries& u = ctx_->neg_unit(root->lattice);
      for (int j = 0; j < k; ++j) n = n * u;
      den[root->lattice] += k;
    }
  }
  LocalizedElement r(*ctx_, std::move(n));
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

LocalizedElement LocalizedElement::weyl_act(int w) const {
  return act_roots(ctx_->slice().matrix(w));
}

LocalizedElement LocalizedElement::tau() const {
  std::size_t n = ctx_->fga().nvars();
  IntMatrix neg = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) neg.at(i, i) = -1;
  return act_roots(neg);
}

LocalizedElement LocalizedElement::demazure(std::size_t i) const {
  const auto& slice = ctx_->slice();
  if (slice.simple(static_cast<int>(i)) < 0)
    throw OutOfSliceError("simple reflection is outside the slice");
  LocalizedElement diff = *this - weyl_act(slice.simple(static_cast<int>(i)));
  return diff * inverse_root(*ctx_, ctx_->datum().simple_root(i));
}

std::string LocalizedElement::to_string() const {
  std::ostringstream out;
  out << "(" << num_.to_string() << ")";
  for (const auto& [v, k] : den_) {
    out << " / x[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ",";
      out << v[i];
    }
    out << "]";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace demazure
