#include "demazure/hecke.hpp"

namespace demazure {

RootDatum HeckeContext::extend(const RootDatum& base) {
  std::size_t n = base.rank();
  std::size_t m = base.lattice_rank();
  std::vector<LatticeVec> roots(n, LatticeVec(m + 1, 0));
  std::vector<LatticeVec> coroots(n, LatticeVec(m + 1, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      roots[i][j + 1] = base.simple_root_vec(i)[j];
      coroots[i][j + 1] = base.simple_coroot_vec(i)[j];
    }
  return RootDatum(base.cartan(), std::move(roots), std::move(coroots));
}

HeckeContext::HeckeContext(const RootDatum& base, const FormalGroupLaw& law, int order,
                           int length_bound, int jobs)
    : datum_(extend(base)),
      fga_(datum_, law, order),
      slice_(datum_, length_bound),
      loc_(fga_, slice_),
      alg_(loc_, jobs),
      gamma_(datum_.lattice_rank(), 0) {
  gamma_[0] = 1;
  x_gamma_ = fga_.x_of(gamma_);
}

LatticeVec HeckeContext::lift(const LatticeVec& v) const {
  if (v.size() + 1 != datum_.lattice_rank())
    throw ValidationError("vector size does not match the base lattice");
  LatticeVec r(datum_.lattice_rank(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) r[j + 1] = v[j];
  return r;
}

TwistedElement HeckeContext::t_elem(const Root& alpha) const {
  int s = slice_.reflection_of(alpha);
  if (s < 0) throw OutOfSliceError("reflection lies outside the slice");
  LocalizedElement inv;
  if (alpha.positive) {
    inv = LocalizedElement::inverse_root(loc_, alpha);
  } else {
    Root pos = alpha;
    for (auto& c : pos.lattice) c = -c;
    for (auto& c : pos.simple) c = -c;
    for (auto& c : pos.coroot) c = -c;
    pos.positive = true;
    // 1/x_{-alpha} = (x_alpha / x_{-alpha}) / x_alpha.
    inv = LocalizedElement(loc_, loc_.neg_unit(pos.lattice)) *
          LocalizedElement::inverse_root(loc_, pos);
  }
  LocalizedElement lead = inv.times(x_gamma_);
  TwistedElement r(alg_);
  r.add(0, lead);
  r.add(s, LocalizedElement::one(loc_) - lead);
  return r;
}

TwistedElement HeckeContext::t_elem(std::size_t i) const {
  if (i >= datum_.rank()) throw ValidationError("generator index out of range");
  return t_elem(datum_.simple_root(i));
}

TwistedElement HeckeContext::t_product(const std::vector<int>& word) const {
  TwistedElement r = alg_.one();
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= datum_.rank())
      throw ValidationError("generator index out of range");
    r = r * t_elem(static_cast<std::size_t>(i));
  }
  return r;
}

void HeckeContext::build_basis() const {
  std::vector<TwistedElement> rows(slice_.size());
  rows[0] = alg_.one();
  // Canonical words have the prefix property, so each row is its prefix row
  // times one generator.
  for (int l = 1; l <= slice_.bound(); ++l)
    for (int w : slice_.elements_of_length(l)) {
      std::vector<int> word = slice_.word(w);
      int last = word.back();
      word.pop_back();
      rows[w] = rows[slice_.reduce_word(word)] * t_elem(static_cast<std::size_t>(last));
    }
  t_basis_.emplace(std::move(rows));
}

const TwistedElement& HeckeContext::t_basis_elem(int w) const {
  if (w < 0 || static_cast<std::size_t>(w) >= slice_.size())
    throw OutOfSliceError("basis index outside the slice");
  std::lock_guard<std::mutex> lock(basis_mutex_);
  if (!t_basis_) build_basis();
  return (*t_basis_)[w];
}

LocalizedElement HeckeContext::divide_diagonal(LocalizedElement q, int w,
                                               LatticeVec* failed) const {
  for (const Root& alpha : slice_.inversion_set(w)) {
    FormalSeries num = q.num() * fga_.x_of_root(alpha);
    try {
      num = fga_.divide_exact(num, fga_.x_of_root(alpha) - x_gamma_);
    } catch (const NonDivisibleError&) {
      if (failed) {
        *failed = alpha.lattice;
        for (std::size_t j = 0; j < failed->size(); ++j) (*failed)[j] -= gamma_[j];
      }
      throw;
    }
    q = LocalizedElement(loc_, std::move(num), q.den());
  }
  return q;
}

MembershipResult HeckeContext::t_membership(const TwistedElement& z) const {
  MembershipResult res;
  std::map<int, LocalizedElement> rem = z.support();
  // Slice index order refines length order, so a reverse sweep peels the
  // longest supported term first.
  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    int v = it->first;
    LocalizedElement q = it->second;
    rem.erase(it);
    if (q.is_zero()) continue;
    LocalizedElement c;
    LatticeVec failed;
    try {
      c = divide_diagonal(std::move(q), v, &failed);
    } catch (const NonDivisibleError&) {
      res.member = false;
      res.witness_w = v;
      res.witness_root = std::move(failed);
      return res;
    }
    const auto& row = t_basis_elem(v).support();
    for (const auto& [u, a_vu] : row) {
      if (u == v) continue;
      LocalizedElement upd = rem.count(u) ? rem.at(u) - c * a_vu : -(c * a_vu);
      if (upd.is_zero())
        rem.erase(u);
      else
        rem[u] = std::move(upd);
    }
    res.coeffs.emplace(v, std::move(c));
  }
  res.member = true;
  for (const auto& [v, q] : res.coeffs) {
    if (q.regular()) continue;
    res.member = false;
    res.witness_w = v;
    res.witness_root = q.den().begin()->first;
    break;
  }
  return res;
}

}  // namespace demazure
