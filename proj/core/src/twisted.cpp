#include "demazure/twisted.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace demazure {

const TwistedAlgebra& TwistedElement::alg() const {
  if (!alg_) throw ValidationError("empty twisted element");
  return *alg_;
}

LocalizedElement TwistedElement::coeff(int w) const {
  auto it = support_.find(w);
  if (it != support_.end()) return it->second;
  return LocalizedElement::zero(alg().ctx());
}

void TwistedElement::add(int w, const LocalizedElement& q) {
  if (q.is_zero()) return;
  if (w < 0 || static_cast<std::size_t>(w) >= alg().slice().size())
    throw OutOfSliceError("twisted element support outside the slice");
  auto it = support_.find(w);
  if (it == support_.end()) {
    support_.emplace(w, q);
    return;
  }
  it->second = it->second + q;
  if (it->second.is_zero()) support_.erase(it);
}

TwistedElement TwistedElement::operator+(const TwistedElement& other) const {
  TwistedElement r = *this;
  for (const auto& [w, q] : other.support_) r.add(w, q);
  return r;
}

TwistedElement TwistedElement::operator-() const {
  TwistedElement r(alg());
  for (const auto& [w, q] : support_) r.support_.emplace(w, -q);
  return r;
}

TwistedElement TwistedElement::operator-(const TwistedElement& other) const {
  return *this + (-other);
}

TwistedElement TwistedElement::operator*(const TwistedElement& other) const {
  const auto& slice = alg().slice();
  TwistedElement r(alg());
  for (const auto& [v, q] : support_) {
    for (const auto& [u, p] : other.support_) {
      int t = slice.mult_checked(v, u);
      r.add(t, q * p.weyl_act(v));
    }
  }
  return r;
}

TwistedElement TwistedElement::scaled(const LocalizedElement& q) const {
  TwistedElement r(alg());
  for (const auto& [w, p] : support_) r.add(w, q * p);
  return r;
}

bool TwistedElement::operator==(const TwistedElement& other) const {
  for (const auto& [w, q] : support_)
    if (!(q == other.coeff(w))) return false;
  for (const auto& [w, q] : other.support_)
    if (!support_.count(w) && !q.is_zero()) return false;
  return true;
}

std::string TwistedElement::to_string() const {
  if (support_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, q] : support_) {
    if (!first) out << " + ";
    first = false;
    out << "[" << q.to_string() << "] d_" << WeylSlice::word_key(alg().slice().word(w));
  }
  return out.str();
}

void TensorElement::add(int a, int b, const LocalizedElement& q) {
  if (q.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = support_.find(key);
  if (it == support_.end()) {
    support_.emplace(key, q);
    return;
  }
  it->second = it->second + q;
  if (it->second.is_zero()) support_.erase(it);
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  TensorElement r = *this;
  if (!r.alg_) r.alg_ = other.alg_;
  for (const auto& [k, q] : other.support_) r.add(k.first, k.second, q);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
  TensorElement r = *this;
  if (!r.alg_) r.alg_ = other.alg_;
  for (const auto& [k, q] : other.support_) r.add(k.first, k.second, -q);
  return r;
}

TensorElement TensorElement::operator*(const TensorElement& other) const {
  if (!alg_) throw ValidationError("empty tensor element");
  const auto& slice = alg_->slice();
  TensorElement r(*alg_);
  for (const auto& [k, q] : support_) {
    for (const auto& [k2, p] : other.support_) {
      int a = slice.mult_checked(k.first, k2.first);
      int b = slice.mult_checked(k.second, k2.second);
      r.add(a, b, q * p.weyl_act(k.first));
    }
  }
  return r;
}

bool TensorElement::operator==(const TensorElement& other) const {
  for (const auto& [k, q] : support_) {
    auto it = other.support_.find(k);
    if (it == other.support_.end()) {
      if (!q.is_zero()) return false;
    } else if (!(q == it->second)) {
      return false;
    }
  }
  for (const auto& [k, q] : other.support_)
    if (!support_.count(k) && !q.is_zero()) return false;
  return true;
}

const LocalizedElement& BasisChange::a(int w, int v) const {
  const Row& row = a_rows_.at(w);
  auto it = row.find(v);
  return it == row.end() ? zero_ : it->second;
}

const LocalizedElement& BasisChange::b(int w, int v) const {
  const Row& row = b_rows_.at(w);
  auto it = row.find(v);
  return it == row.end() ? zero_ : it->second;
}

TwistedAlgebra::TwistedAlgebra(const LocAlgebra& ctx, int jobs)
    : ctx_(&ctx), jobs_(std::max(1, jobs)) {}

TwistedElement TwistedAlgebra::delta(int w) const {
  TwistedElement r(*this);
  r.add(w, LocalizedElement::one(*ctx_));
  return r;
}

TwistedElement TwistedAlgebra::scalar(const LocalizedElement& q) const {
  TwistedElement r(*this);
  r.add(0, q);
  return r;
}

TwistedElement TwistedAlgebra::scalar(const FormalSeries& s) const {
  return scalar(LocalizedElement(*ctx_, s));
}

TwistedElement TwistedAlgebra::demazure_elem(const Root& alpha) const {
  int s = slice().reflection_of(alpha);
  if (s < 0) throw OutOfSliceError("reflection lies outside the slice");
  LocalizedElement inv = LocalizedElement::inverse_root(*ctx_, alpha);
  TwistedElement r(*this);
  r.add(0, inv);
  r.add(s, -inv);
  return r;
}

TwistedElement TwistedAlgebra::demazure_elem(std::size_t i) const {
  return demazure_elem(ctx_->datum().simple_root(i));
}

TwistedElement TwistedAlgebra::pushpull_elem(const Root& alpha) const {
  return scalar(fga().kappa(alpha)) - demazure_elem(alpha);
}

TwistedElement TwistedAlgebra::pushpull_elem(std::size_t i) const {
  return pushpull_elem(ctx_->datum().simple_root(i));
}

TwistedElement TwistedAlgebra::word_product(BasisKind kind, const std::vector<int>& word) const {
  TwistedElement r = one();
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= ctx_->datum().rank())
      throw ValidationError("generator index out of range");
    auto g = kind == BasisKind::X ? demazure_elem(static_cast<std::size_t>(i))
                                  : pushpull_elem(static_cast<std::size_t>(i));
    r = r * g;
  }
  return r;
}

BasisChange::Row TwistedAlgebra::row_times_generator(const BasisChange::Row& row, BasisKind kind,
                                                     std::size_t i) const {
  auto gen = kind == BasisKind::X ? demazure_elem(i) : pushpull_elem(i);
  const auto& slice = ctx_->slice();
  BasisChange::Row out;
  for (const auto& [v, q] : row) {
    for (const auto& [u, g] : gen.support()) {
      int t = slice.mult_checked(v, u);
      LocalizedElement c = q * g.weyl_act(v);
      if (c.is_zero()) continue;
      auto it = out.find(t);
      if (it == out.end()) {
        out.emplace(t, std::move(c));
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

void TwistedAlgebra::build_basis(BasisKind kind) const {
  const auto& slice = ctx_->slice();
  BasisChange bc;
  bc.zero_ = LocalizedElement::zero(*ctx_);
  bc.a_rows_.resize(slice.size());
  bc.b_rows_.resize(slice.size());
  bc.a_rows_[0] = {{0, LocalizedElement::one(*ctx_)}};

  // Canonical words have the prefix property, so each row extends the row of
  // its one-letter-shorter prefix.  Rows within a length level are
  // independent and can be filled by several workers.
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

  for (int l = 1; l <= slice.bound(); ++l) {
    std::vector<int> elems = slice.elements_of_length(l);
    fill(elems, [&](int w) {
      std::vector<int> word = slice.word(w);
      int last = word.back();
      word.pop_back();
      int prefix = slice.reduce_word(word);
      bc.a_rows_[w] = row_times_generator(bc.a_rows_[prefix], kind, static_cast<std::size_t>(last));
    });
  }

  std::vector<int> all(slice.size());
  for (std::size_t w = 0; w < slice.size(); ++w) all[w] = static_cast<int>(w);
  {
    // solve_in_basis reads a_rows_ through basis(kind), which is not published
    // yet; hand the solver the rows directly.
    fill(all, [&](int w) {
      std::map<int, LocalizedElement> rem{{w, LocalizedElement::one(*ctx_)}};
      bc.b_rows_[w] = solve_rows(bc, rem);
    });
  }

  if (kind == BasisKind::X)
    basis_x_.emplace(std::move(bc));
  else
    basis_y_.emplace(std::move(bc));
}

const BasisChange& TwistedAlgebra::basis(BasisKind kind) const {
  std::lock_guard<std::mutex> lock(basis_mutex_);
  auto& slot = kind == BasisKind::X ? basis_x_ : basis_y_;
  if (!slot) build_basis(kind);
  return *slot;
}

std::map<int, LocalizedElement> TwistedAlgebra::solve_rows(
    const BasisChange& bc, std::map<int, LocalizedElement> rem) const {
  std::map<int, LocalizedElement> coeffs;
  // Slice index order refines length order, so a reverse sweep peels the
  // longest supported term first.
  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    int v = it->first;
    LocalizedElement q = it->second;
    rem.erase(it);
    if (q.is_zero()) continue;
    const auto& row = bc.a_rows_.at(v);
    LocalizedElement b = q * row.at(v).inverse();
    coeffs.emplace(v, b);
    for (const auto& [u, a_vu] : row) {
      if (u == v) continue;
      LocalizedElement upd = rem.count(u) ? rem.at(u) - b * a_vu : -(b * a_vu);
      if (upd.is_zero())
        rem.erase(u);
      else
        rem[u] = std::move(upd);
    }
  }
  return coeffs;
}

std::map<int, LocalizedElement> TwistedAlgebra::solve_in_basis(
    BasisKind kind, std::map<int, LocalizedElement> rem) const {
  return solve_rows(basis(kind), std::move(rem));
}

std::map<int, LocalizedElement> TwistedAlgebra::braid_defect(std::size_t i, std::size_t j) const {
  int m = ctx_->datum().cartan().coxeter_order(i, j);
  if (m == 0) throw ValidationError("generator pair has infinite order");
  std::vector<int> w1, w2;
  for (int k = 0; k < m; ++k) {
    w1.push_back(k % 2 == 0 ? static_cast<int>(i) : static_cast<int>(j));
    w2.push_back(k % 2 == 0 ? static_cast<int>(j) : static_cast<int>(i));
  }
  TwistedElement diff = word_product(BasisKind::X, w1) - word_product(BasisKind::X, w2);
  return solve_in_basis(BasisKind::X, diff.support());
}

MembershipResult TwistedAlgebra::membership(const TwistedElement& z) const {
  MembershipResult res;
  res.coeffs = solve_in_basis(BasisKind::X, z.support());
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

bool TwistedAlgebra::residue_check(const TwistedElement& z) const {
  const auto& slice = ctx_->slice();
  const auto& fga = ctx_->fga();
  std::map<LatticeVec, Root> roots;
  for (const auto& [w, q] : z.support())
    for (const auto& [v, k] : q.den()) roots.emplace(v, slice.root_of(v));

  for (const auto& [vec, root] : roots) {
    IntMatrix refl = ctx_->datum().reflection_matrix(root);
    for (const auto& [w, q] : z.support()) {
      // pole order along the root is at most one
      LocalizedElement limited = q.times(fga.x_of(vec));
      if (limited.den().count(vec)) return false;
      // q_w + q_{s_root w} is regular along the root; coefficients outside
      // the support are zero
      int sw = slice.lookup(refl * slice.matrix(w));
      LocalizedElement sum = q + (sw >= 0 ? z.coeff(sw) : LocalizedElement::zero(*ctx_));
      if (sum.den().count(vec)) return false;
    }
  }
  return true;
}

LocalizedElement TwistedAlgebra::act(const TwistedElement& z, const LocalizedElement& u) const {
  LocalizedElement r = LocalizedElement::zero(*ctx_);
  for (const auto& [w, q] : z.support()) r = r + q * u.weyl_act(w);
  return r;
}

LocalizedElement TwistedAlgebra::act(const TwistedElement& z, const FormalSeries& u) const {
  return act(z, LocalizedElement(*ctx_, u));
}

LocalizedElement TwistedAlgebra::counit(const TwistedElement& z) const {
  return act(z, LocalizedElement::one(*ctx_));
}

TensorElement TwistedAlgebra::coproduct(const TwistedElement& z) const {
  TensorElement r(*this);
  for (const auto& [w, q] : z.support()) r.add(w, w, q);
  return r;
}

std::map<SubIdx, LocalizedElement> TwistedAlgebra::push_scalar(const std::vector<int>& word,
                                                               const LocalizedElement& q) const {
  std::map<SubIdx, LocalizedElement> cur{{SubIdx{}, q}};
  auto accumulate = [](std::map<SubIdx, LocalizedElement>& into, SubIdx key,
                       LocalizedElement val) {
    if (val.is_zero()) return;
    auto it = into.find(key);
    if (it == into.end()) {
      into.emplace(std::move(key), std::move(val));
      return;
    }
    it->second = it->second + val;
    if (it->second.is_zero()) into.erase(it);
  };
  // Feed letters from the right: X_i q = s_i(q) X_i + D_i(q).
  for (std::size_t pos = word.size(); pos-- > 0;) {
    std::size_t i = static_cast<std::size_t>(word[pos]);
    int si = slice().simple(static_cast<int>(i));
    if (si < 0) throw OutOfSliceError("simple reflection is outside the slice");
    std::map<SubIdx, LocalizedElement> next;
    for (const auto& [sub, phi] : cur) {
      SubIdx with = sub;
      with.insert(with.begin(), pos);
      accumulate(next, std::move(with), phi.weyl_act(si));
      accumulate(next, sub, phi.demazure(i));
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<int> TwistedAlgebra::subword(const std::vector<int>& word, const SubIdx& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (std::size_t p : idx) out.push_back(word.at(p));
  return out;
}

std::map<std::pair<SubIdx, SubIdx>, LocalizedElement> TwistedAlgebra::coproduct_word_expansion(
    const std::vector<int>& word) const {
  using Table = std::map<std::pair<SubIdx, SubIdx>, LocalizedElement>;
  auto accumulate = [](Table& into, std::pair<SubIdx, SubIdx> key, LocalizedElement val) {
    if (val.is_zero()) return;
    auto it = into.find(key);
    if (it == into.end()) {
      into.emplace(std::move(key), std::move(val));
      return;
    }
    it->second = it->second + val;
    if (it->second.is_zero()) into.erase(it);
  };

  Table cur{{{SubIdx{}, SubIdx{}}, LocalizedElement::one(*ctx_)}};
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    std::size_t i = static_cast<std::size_t>(word[pos]);
    if (i >= ctx_->datum().rank()) throw ValidationError("generator index out of range");
    FormalSeries xi = fga().x_of(ctx_->datum().simple_root(i).lattice);
    // Delta(X_i) = X_i x 1 + 1 x X_i - x_i X_i x X_i
    struct Term {
      bool use1, use2;
      LocalizedElement c;
    };
    std::vector<Term> terms = {
        {true, false, LocalizedElement::one(*ctx_)},
        {false, true, LocalizedElement::one(*ctx_)},
        {true, true, -LocalizedElement(*ctx_, xi)},
    };
    Table next;
    for (const auto& [key, p] : cur) {
      const auto& [e1, e2] = key;
      for (const auto& term : terms) {
        // multiply factor 1 by (c X_i or c): push c left through X_{I_{e1}}
        std::map<SubIdx, LocalizedElement> pushed;
        if (term.c == LocalizedElement::one(*ctx_)) {
          pushed.emplace(SubIdx(e1), p);
        } else {
          auto raw = push_scalar(subword(word, e1), term.c);
          for (const auto& [local, phi] : raw) {
            SubIdx orig;
            orig.reserve(local.size());
            for (std::size_t t : local) orig.push_back(e1[t]);
            pushed.emplace(std::move(orig), p * phi);
          }
        }
        for (const auto& [e1p, scalar] : pushed) {
          SubIdx n1 = e1p;
          if (term.use1) n1.push_back(pos);
          SubIdx n2 = e2;
          if (term.use2) n2.push_back(pos);
          accumulate(next, {std::move(n1), std::move(n2)}, scalar);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

TensorElement TwistedAlgebra::tensor_of_expansion(
    const std::vector<int>& word,
    const std::map<std::pair<SubIdx, SubIdx>, LocalizedElement>& table) const {
  TensorElement r(*this);
  for (const auto& [key, p] : table) {
    TwistedElement t1 = word_product(BasisKind::X, subword(word, key.first));
    TwistedElement t2 = word_product(BasisKind::X, subword(word, key.second));
    for (const auto& [a, qa] : t1.support())
      for (const auto& [b, qb] : t2.support()) r.add(a, b, p * qa * qb);
  }
  return r;
}

}  // namespace demazure
