#include "demazure/root_poly.hpp"

namespace demazure {

RootDatum RootPolyContext::doubled_datum(const RootDatum& base) {
  std::size_t n = base.rank();
  std::size_t m = base.lattice_rank();
  std::vector<LatticeVec> roots(n, LatticeVec(2 * m, 0));
  std::vector<LatticeVec> coroots(n, LatticeVec(2 * m, 0));
  // Roots and coroots live in the x-block; the y-block pairs to zero with
  // every coroot, so the Weyl action fixes it pointwise.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      roots[i][j] = base.simple_root_vec(i)[j];
      coroots[i][j] = base.simple_coroot_vec(i)[j];
    }
  return RootDatum(base.cartan(), std::move(roots), std::move(coroots));
}

RootPolyContext::RootPolyContext(const TwistedAlgebra& base, int jobs)
    : base_(&base),
      datum_(doubled_datum(base.fga().datum())),
      fga_(datum_, base.fga().law(), base.fga().order()),
      slice_(datum_, base.slice().bound()),
      loc_(fga_, slice_),
      alg_(loc_, jobs) {
  const FormalGroupAlgebra& bf = base_->fga();
  std::size_t m = bf.nvars();
  ev_images_.reserve(2 * m);
  for (std::size_t j = 0; j < m; ++j)
    ev_images_.push_back(FormalSeries::variable(m, bf.params(), bf.order(), j));
  for (std::size_t j = 0; j < m; ++j) {
    LatticeVec neg(m, 0);
    neg[j] = -1;
    ev_images_.push_back(bf.x_of(neg));
  }
}

LatticeVec RootPolyContext::x_embed(const LatticeVec& v) const {
  std::size_t m = base_->fga().nvars();
  if (v.size() != m) throw ValidationError("vector size does not match the base lattice");
  LatticeVec r(2 * m, 0);
  for (std::size_t j = 0; j < m; ++j) r[j] = v[j];
  return r;
}

LatticeVec RootPolyContext::y_embed(const LatticeVec& v) const {
  std::size_t m = base_->fga().nvars();
  if (v.size() != m) throw ValidationError("vector size does not match the base lattice");
  LatticeVec r(2 * m, 0);
  for (std::size_t j = 0; j < m; ++j) r[m + j] = v[j];
  return r;
}

FormalSeries RootPolyContext::y_of(const LatticeVec& v) const { return fga_.x_of(y_embed(v)); }

TwistedElement RootPolyContext::h_factor(BasisKind kind, std::size_t i,
                                         const LatticeVec& lambda) const {
  if (i >= datum_.rank()) throw ValidationError("generator index out of range");
  LatticeVec arg = lambda;
  if (kind == BasisKind::X)
    for (auto& c : arg) c = -c;
  LocalizedElement y(loc_, y_of(arg));
  TwistedElement gen =
      kind == BasisKind::X ? alg_.demazure_elem(i) : alg_.pushpull_elem(i);
  return alg_.one() - gen.scaled(y);
}

TwistedElement RootPolyContext::root_polynomial(BasisKind kind,
                                                const std::vector<int>& word) const {
  const WeylSlice& bs = base_->slice();
  for (int i : word)
    if (i < 0 || static_cast<std::size_t>(i) >= datum_.rank())
      throw ValidationError("generator index out of range");
  int w = bs.reduce_word(word);
  if (bs.length(w) != static_cast<int>(word.size()))
    throw ValidationError("root polynomials need a reduced word");
  TwistedElement r = alg_.one();
  int prefix = 0;
  for (int i : word) {
    LatticeVec lam = bs.act(prefix, bs.datum().simple_root_vec(static_cast<std::size_t>(i)));
    r = r * h_factor(kind, static_cast<std::size_t>(i), lam);
    prefix = bs.right_mult(prefix, i);
  }
  return r;
}

LocalizedElement RootPolyContext::theta(int w) const {
  const LocAlgebra& bc = base_->ctx();
  FormalSeries t = base_->fga().one();
  for (const Root& alpha : base_->slice().inversion_set(w)) {
    LatticeVec neg = alpha.lattice;
    for (auto& c : neg) c = -c;
    // x_{-alpha} / x_alpha, a unit with constant term -1.
    t = t * bc.neg_unit(neg);
  }
  if (base_->slice().length(w) % 2 != 0) t = -t;
  return LocalizedElement(bc, std::move(t));
}

LatticeVec RootPolyContext::project_vec(const LatticeVec& v) const {
  std::size_t m = v.size() / 2;
  LatticeVec r(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    r[j] = v[j];
    if (v[m + j] != 0) throw ValidationError("class does not lie over the x block");
  }
  return r;
}

LocalizedElement RootPolyContext::evaluate_scalar(const LocalizedElement& q) const {
  FormalSeries num = q.num().substituted(ev_images_);
  LocalizedElement::Den den;
  for (const auto& [cls, k] : q.den()) den[project_vec(cls)] = k;
  return LocalizedElement(base_->ctx(), std::move(num), std::move(den));
}

TwistedElement RootPolyContext::evaluate(const TwistedElement& z) const {
  TwistedElement r(*base_);
  for (const auto& [w, q] : z.support()) r.add(w, evaluate_scalar(q));
  return r;
}

std::map<int, LocalizedElement> RootPolyContext::k_coefficients(const TwistedElement& z,
                                                                BasisKind kind) const {
  const BasisChange& bc = alg_.basis(kind);
  std::map<int, LocalizedElement> out;
  for (const auto& [w, q] : z.support())
    for (const auto& [v, b] : bc.b_row(w)) {
      LocalizedElement t = q * b;
      if (t.is_zero()) continue;
      auto it = out.find(v);
      if (it == out.end()) {
        out.emplace(v, std::move(t));
      } else {
        it->second = it->second + t;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

}  // namespace demazure
