#include "demazure/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace demazure {

WeylSlice::WeylSlice(const RootDatum& datum, int bound) : datum_(&datum), bound_(bound) {
  if (bound < 0) throw ValidationError("negative length bound");
  std::size_t n = datum.rank();
  std::vector<IntMatrix> gen(n);
  for (std::size_t i = 0; i < n; ++i) gen[i] = datum.reflection_matrix(i);

  words_.push_back({});
  mats_.push_back(IntMatrix::identity(datum.lattice_rank()));
  index_.emplace(mats_[0], 0);

  // Breadth-first by length; within a level candidates arrive in shortlex
  // order, so the first word reaching a new matrix is its canonical word.
  std::size_t level_begin = 0;
  for (int l = 0; l < bound; ++l) {
    std::size_t level_end = words_.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (std::size_t i = 0; i < n; ++i) {
        IntMatrix m = mats_[w] * gen[i];
        if (index_.count(m)) continue;
        std::vector<int> word = words_[w];
        word.push_back(static_cast<int>(i));
        index_.emplace(m, static_cast<int>(words_.size()));
        words_.push_back(std::move(word));
        mats_.push_back(std::move(m));
      }
    }
    level_begin = level_end;
    if (level_begin == words_.size()) break;  // finite group exhausted
  }

  simple_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (bound >= 1) simple_[i] = lookup(gen[i]);

  inverse_.assign(words_.size(), -1);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    IntMatrix m = IntMatrix::identity(datum.lattice_rank());
    for (auto it = words_[w].rbegin(); it != words_[w].rend(); ++it) m = m * gen[*it];
    inverse_[w] = lookup(m);
    if (inverse_[w] < 0) throw ValidationError("slice is not closed under inverses");
  }

  // Tabulate the positive real roots w(alpha_i) seen across the slice.
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      Root r = datum.simple_root(i);
      const auto& word = words_[w];
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = datum.reflect_root(static_cast<std::size_t>(*it), r);
      if (!r.positive) continue;
      auto [it, inserted] = root_table_.emplace(r.lattice, r);
      if (!inserted && (it->second.simple != r.simple || it->second.coroot != r.coroot))
        throw ValidationError("inconsistent root data for a repeated root");
    }
  }
}

std::vector<int> WeylSlice::elements_of_length(int l) const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (length(static_cast<int>(w)) == l) out.push_back(static_cast<int>(w));
  return out;
}

int WeylSlice::lookup(const IntMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int WeylSlice::mult(int u, int v) const { return lookup(mats_[u] * mats_[v]); }

int WeylSlice::mult_checked(int u, int v) const {
  int r = mult(u, v);
  if (r < 0)
    throw OutOfSliceError("product " + word_key(words_[u]) + " * " + word_key(words_[v]) +
                          " leaves the length-" + std::to_string(bound_) + " slice");
  return r;
}

LatticeVec WeylSlice::act(int w, const LatticeVec& lam) const { return mats_[w].apply(lam); }

bool WeylSlice::left_descent(int w, int i) const {
  if (simple_[i] < 0) return false;
  int sw = mult(simple_[i], w);
  return sw >= 0 && length(sw) < length(w);
}

bool WeylSlice::right_descent(int w, int i) const {
  if (simple_[i] < 0) return false;
  int ws = mult(w, simple_[i]);
  return ws >= 0 && length(ws) < length(w);
}

std::vector<Root> WeylSlice::inversion_set(int w) const {
  const auto& word = words_[w];
  std::vector<Root> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    Root r = datum_->simple_root(static_cast<std::size_t>(word[k]));
    for (std::size_t j = k; j-- > 0;)
      r = datum_->reflect_root(static_cast<std::size_t>(word[j]), r);
    if (!r.positive) throw ValidationError("inversion set produced a negative root");
    out.push_back(std::move(r));
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[a].lattice == out[b].lattice)
        throw ValidationError("inversion set has a repeated root");
  return out;
}

bool WeylSlice::bruhat_leq(int u, int v) const {
  if (u == v) return true;
  if (length(u) >= length(v)) return false;
  auto key = std::make_pair(u, v);
  auto memo = bruhat_memo_.find(key);
  if (memo != bruhat_memo_.end()) return memo->second;
  // Lifting: pick a left descent i of v; then u <= v iff
  // (s_i u <= s_i v when i is a descent of u, else u <= s_i v).
  int i = -1;
  for (std::size_t k = 0; k < datum_->rank(); ++k)
    if (left_descent(v, static_cast<int>(k))) {
      i = static_cast<int>(k);
      break;
    }
  int sv = mult(simple_[i], v);
  bool r = left_descent(u, i) ? bruhat_leq(mult(simple_[i], u), sv) : bruhat_leq(u, sv);
  bruhat_memo_.emplace(key, r);
  return r;
}

int WeylSlice::reduce_word(const std::vector<int>& letters) const {
  IntMatrix m = IntMatrix::identity(datum_->lattice_rank());
  for (int i : letters) {
    if (i < 0 || static_cast<std::size_t>(i) >= datum_->rank())
      throw ValidationError("word letter out of range: " + std::to_string(i + 1));
    m = m * datum_->reflection_matrix(static_cast<std::size_t>(i));
  }
  int w = lookup(m);
  if (w < 0)
    throw OutOfSliceError("word reduces to an element beyond the length-" +
                          std::to_string(bound_) + " slice");
  return w;
}

const Root& WeylSlice::root_of(const LatticeVec& v) const {
  auto it = root_table_.find(v);
  if (it == root_table_.end())
    throw OutOfSliceError("root is not tabulated in this slice");
  return it->second;
}

std::pair<int, const Root*> WeylSlice::classify(const LatticeVec& v) const {
  auto it = root_table_.find(v);
  if (it != root_table_.end()) return {1, &it->second};
  LatticeVec neg(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
  it = root_table_.find(neg);
  if (it != root_table_.end()) return {-1, &it->second};
  throw OutOfSliceError("vector is not a tabulated real root");
}

int WeylSlice::reflection_of(const Root& r) const {
  return lookup(datum_->reflection_matrix(r));
}

std::string WeylSlice::word_key(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out << ".";
    out << word[k] + 1;
  }
  return out.str();
}

}  // namespace demazure
