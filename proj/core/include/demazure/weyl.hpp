#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "demazure/root_datum.hpp"

namespace demazure {

// All Weyl group elements of length <= bound, enumerated breadth-first.
// Element identity is the lattice action matrix; each element carries its
// shortlex-least reduced word.  Index order equals (length, word) shortlex
// order, with index 0 the identity.
class WeylSlice {
public:
  WeylSlice(const RootDatum& datum, int bound);

  const RootDatum& datum() const { return *datum_; }
  int bound() const { return bound_; }
  std::size_t size() const { return words_.size(); }

  int length(int w) const { return static_cast<int>(words_[w].size()); }
  const std::vector<int>& word(int w) const { return words_[w]; }
  const IntMatrix& matrix(int w) const { return mats_[w]; }
  int simple(int i) const { return simple_[i]; }
  int inverse(int w) const { return inverse_[w]; }
  std::vector<int> elements_of_length(int l) const;

  // Index lookups return -1 when the element lies outside the slice.
  int lookup(const IntMatrix& m) const;
  int mult(int u, int v) const;
  int right_mult(int w, int i) const { return mult(w, simple_[i]); }
  // Like mult but throws OutOfSliceError naming the factors.
  int mult_checked(int u, int v) const;

  LatticeVec act(int w, const LatticeVec& lam) const;
  bool left_descent(int w, int i) const;   // l(s_i w) < l(w)
  bool right_descent(int w, int i) const;  // l(w s_i) < l(w)

  // Roots alpha_{i_1}, s_{i_1}(alpha_{i_2}), ... along the canonical word;
  // exactly length(w) distinct positive roots.
  std::vector<Root> inversion_set(int w) const;
  bool bruhat_leq(int u, int v) const;

  // Folds a word (0-based letters) and locates the result; errors when the
  // product has length > bound.
  int reduce_word(const std::vector<int>& letters) const;

  // Positive real roots w(alpha_i) discovered across the slice.
  const std::map<LatticeVec, Root>& root_table() const { return root_table_; }
  const Root& root_of(const LatticeVec& v) const;
  // Resolves a vector to +/- a tabulated positive root.
  std::pair<int, const Root*> classify(const LatticeVec& v) const;
  // The reflection s_alpha as a slice element, or -1 if outside.
  int reflection_of(const Root& r) const;

  static std::string word_key(const std::vector<int>& word);  // "e" or "1.2.1" (1-based)

private:
  const RootDatum* datum_;
  int bound_;
  std::vector<std::vector<int>> words_;
  std::vector<IntMatrix> mats_;
  std::vector<int> simple_;
  std::vector<int> inverse_;
  std::map<IntMatrix, int> index_;
  std::map<LatticeVec, Root> root_table_;
  mutable std::map<std::pair<int, int>, bool> bruhat_memo_;
};

}  // namespace demazure
