#include "demazure/duals.hpp"

#include <algorithm>
#include <thread>

namespace demazure {

const TwistedAlgebra& DualElement::alg() const {
  if (!alg_) throw ValidationError("empty dual element");
  return *alg_;
}

LocalizedElement DualElement::value(int w) const {
  auto it = values_.find(w);
  if (it != values_.end()) return it->second;
  return LocalizedElement::zero(alg().ctx());
}

void DualElement::add(int w, const LocalizedElement& q) {
  if (!alg_) throw ValidationError("empty dual element");
  if (w < 0 || w >= static_cast<int>(alg_->slice().size()))
    throw OutOfSliceError("dual element support outside the slice");
  if (q.is_zero()) return;
  auto it = values_.find(w);
  if (it == values_.end()) {
    values_.emplace(w, q);
    return;
  }
  it->second = it->second + q;
  if (it->second.is_zero()) values_.erase(it);
}

DualElement DualElement::operator+(const DualElement& other) const {
  DualElement r = *this;
  if (!r.alg_) r.alg_ = other.alg_;
  for (const auto& [w, q] : other.values_) r.add(w, q);
  return r;
}

DualElement DualElement::operator-() const {
  DualElement r(*alg_);
  for (const auto& [w, q] : values_) r.values_.emplace(w, -q);
  return r;
}

DualElement DualElement::operator-(const DualElement& other) const { return *this + (-other); }

DualElement DualElement::operator*(const DualElement& other) const {
  DualElement r(alg());
  for (const auto& [w, q] : values_) {
    auto it = other.values_.find(w);
    if (it == other.values_.end()) continue;
    LocalizedElement prod = q * it->second;
    if (!prod.is_zero()) r.values_.emplace(w, std::move(prod));
  }
  return r;
}

DualElement DualElement::scaled(const LocalizedElement& q) const {
  DualElement r(alg());
  if (q.is_zero()) return r;
  for (const auto& [w, v] : values_) {
    LocalizedElement prod = q * v;
    if (!prod.is_zero()) r.values_.emplace(w, std::move(prod));
  }
  return r;
}

bool DualElement::operator==(const DualElement& other) const {
  for (const auto& [w, q] : values_) {
    auto it = other.values_.find(w);
    if (it == other.values_.end()) {
      if (!q.is_zero()) return false;
    } else if (!(q == it->second)) {
      return false;
    }
  }
  for (const auto& [w, q] : other.values_)
    if (!values_.count(w) && !q.is_zero()) return false;
  return true;
}

DualAlgebra::DualAlgebra(const TwistedAlgebra& alg, int jobs)
    : alg_(&alg), jobs_(std::max(1, jobs)) {}

void DualAlgebra::check_index(int w) const {
  if (w < 0 || w >= static_cast<int>(slice().size()))
    throw ValidationError("element index out of range");
}

DualElement DualAlgebra::unit() const {
  DualElement r(*alg_);
  LocalizedElement one = LocalizedElement::one(alg_->ctx());
  for (int w = 0; w < static_cast<int>(slice().size()); ++w) r.add(w, one);
  return r;
}

DualElement DualAlgebra::dual_basis_elem(BasisKind kind, int w) const {
  check_index(w);
  const BasisChange& bc = alg_->basis(kind);
  DualElement r(*alg_);
  for (int t = 0; t < static_cast<int>(slice().size()); ++t) {
    const LocalizedElement& q = bc.b(t, w);
    if (!q.is_zero()) r.add(t, q);
  }
  return r;
}

DualElement DualAlgebra::dual_from_basis(const std::map<int, FormalSeries>& coeffs,
                                         BasisKind kind) const {
  const BasisChange& bc = alg_->basis(kind);
  DualElement r(*alg_);
  for (const auto& [u, q] : coeffs) {
    check_index(u);
    if (q.is_zero()) continue;
    for (int t = 0; t < static_cast<int>(slice().size()); ++t) {
      const LocalizedElement& b = bc.b(t, u);
      if (!b.is_zero()) r.add(t, b.times(q));
    }
  }
  return r;
}

std::map<int, LocalizedElement> DualAlgebra::coefficients(const DualElement& f,
                                                          BasisKind kind) const {
  const BasisChange& bc = alg_->basis(kind);
  std::map<int, LocalizedElement> out;
  for (int w = 0; w < static_cast<int>(slice().size()); ++w) {
    LocalizedElement acc = LocalizedElement::zero(alg_->ctx());
    for (const auto& [v, a] : bc.a_row(w)) {
      auto it = f.delta_values().find(v);
      if (it == f.delta_values().end()) continue;
      acc = acc + a * it->second;
    }
    if (!acc.is_zero()) out.emplace(w, std::move(acc));
  }
  return out;
}

bool DualAlgebra::is_member(const DualElement& f) const {
  for (const auto& [w, q] : coefficients(f, BasisKind::X))
    if (!q.regular()) return false;
  return true;
}

LocalizedElement DualAlgebra::inv_diag(BasisKind kind, int w) const {
  // b_{w,w} is (-1)^{l(w)} c_w for X and c_w for Y, c_w the product of the
  // inversion roots, so the inverse is a pure denominator up to sign.
  LocalizedElement r = LocalizedElement::one(alg_->ctx());
  for (const Root& alpha : slice().inversion_set(w))
    r = r * LocalizedElement::inverse_root(alg_->ctx(), alpha);
  if (kind == BasisKind::X && slice().length(w) % 2 != 0) r = -r;
  return r;
}

StructureConstants DualAlgebra::structure_constants(int u, int v, BasisKind kind,
                                                    ConstantsMethod method) const {
  check_index(u);
  check_index(v);
  const BasisChange& bc = alg_->basis(kind);
  const WeylSlice& sl = slice();
  int n = static_cast<int>(sl.size());

  std::vector<LocalizedElement> p(n, LocalizedElement::zero(alg_->ctx()));
  auto fill = [&](const std::vector<int>& elems, auto&& task) {
    if (jobs_ == 1 || elems.size() < 2) {
      for (int w : elems) task(w);
      return;
    }
    std::vector<std::thread> pool;
    std::size_t nthreads = std::min<std::size_t>(jobs_, elems.size());
    for (std::size_t t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t k = t; k < elems.size(); k += nthreads) task(elems[k]);
      });
    }
    for (auto& th : pool) th.join();
  };

  // Both routes sweep upward in length; entries at one length depend only on
  // strictly shorter ones, so each level is an independent wavefront.
  for (int l = 0; l <= sl.bound(); ++l) {
    std::vector<int> level = sl.elements_of_length(l);
    if (method == ConstantsMethod::triangular) {
      // p_t = (b_{t,u} b_{t,v} - sum_{w<t} p_w b_{t,w}) / b_{t,t}
      fill(level, [&](int t) {
        LocalizedElement acc = bc.b(t, u) * bc.b(t, v);
        for (const auto& [w, b] : bc.b_row(t)) {
          if (w == t || p[w].is_zero()) continue;
          acc = acc - b * p[w];
        }
        if (!acc.is_zero()) p[t] = acc * inv_diag(kind, t);
      });
    } else {
      // Closed recursion over targets Bruhat-above both factors.
      fill(level, [&](int w) {
        if (!sl.bruhat_leq(u, w) || !sl.bruhat_leq(v, w)) return;
        LocalizedElement acc = bc.b(w, u) * bc.b(w, v);
        for (int t = 0; t < n; ++t) {
          if (t == w || p[t].is_zero()) continue;
          const LocalizedElement& b = bc.b(w, t);
          if (b.is_zero()) continue;
          acc = acc - p[t] * b;
        }
        if (!acc.is_zero()) p[w] = acc * inv_diag(kind, w);
      });
    }
  }

  StructureConstants out;
  out.u = u;
  out.v = v;
  out.kind = kind;
  out.word_u = sl.word(u);
  out.word_v = sl.word(v);
  for (int w = 0; w < n; ++w) {
    if (p[w].is_zero()) continue;
    // The product stays inside the dual of the slice subalgebra: each
    // constant must come out denominator free.
    out.table.emplace(w, p[w].series());
  }
  return out;
}

FormalSeries DualAlgebra::billey(int u, int v) const {
  if (alg_->fga().law().kind() != LawKind::additive)
    throw ValidationError("closed subword formula requires the additive law");
  check_index(u);
  check_index(v);
  const WeylSlice& sl = slice();
  const std::vector<int>& word = sl.word(u);
  int l = static_cast<int>(word.size());
  int k = sl.length(v);
  FormalSeries total = alg_->fga().zero();
  if (k > l) return total;

  // Prefix-rotated simple roots: beta_j = s_{i_1}...s_{i_{j-1}}(alpha_{i_j}).
  std::vector<FormalSeries> beta;
  beta.reserve(l);
  int prefix = 0;
  for (int j = 0; j < l; ++j) {
    LatticeVec root = sl.act(prefix, sl.datum().simple_root(word[j]).lattice);
    beta.push_back(alg_->fga().x_of(root));
    prefix = sl.right_mult(prefix, word[j]);
  }

  // Depth-first over increasing position sequences whose subword stays
  // reduced; a sequence contributes iff it has length l(v) and lands on v.
  FormalSeries one = alg_->fga().one();
  auto dfs = [&](auto&& self, int pos, int cur, int count, const FormalSeries& prod) -> void {
    if (count == k) {
      if (cur == v) total = total + prod;
      return;
    }
    if (l - pos < k - count) return;
    for (int j = pos; j < l; ++j) {
      int nxt = sl.right_mult(cur, word[j]);
      if (nxt < 0 || sl.length(nxt) != count + 1) continue;
      self(self, j + 1, nxt, count + 1, prod * beta[j]);
    }
  };
  dfs(dfs, 0, 0, 0, one);
  return total;
}

}  // namespace demazure
