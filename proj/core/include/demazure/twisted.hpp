#pragma once

#include <optional>

#include "demazure/localized.hpp"

namespace demazure {

class TwistedAlgebra;

// Element of the twisted group algebra: finite sum of q * delta_w with the
// scalars on the left; zero coefficients never stored.
class TwistedElement {
public:
  TwistedElement() : alg_(nullptr) {}
  explicit TwistedElement(const TwistedAlgebra& alg) : alg_(&alg) {}

  const TwistedAlgebra& alg() const;
  const std::map<int, LocalizedElement>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  LocalizedElement coeff(int w) const;
  void add(int w, const LocalizedElement& q);

  TwistedElement operator+(const TwistedElement& other) const;
  TwistedElement operator-(const TwistedElement& other) const;
  TwistedElement operator-() const;
  // Twisted product: q delta_v * q' delta_u = q v(q') delta_{vu}.
  TwistedElement operator*(const TwistedElement& other) const;
  TwistedElement scaled(const LocalizedElement& q) const;  // left scalar
  bool operator==(const TwistedElement& other) const;
  bool operator!=(const TwistedElement& other) const { return !(*this == other); }

  std::string to_string() const;

private:
  const TwistedAlgebra* alg_;
  std::map<int, LocalizedElement> support_;
};

// Sum of q * (delta_a tensor delta_b) with all scalars carried on the left
// factor; (z1 x z2)(z1' x z2') = z1 z1' x z2 z2'.
class TensorElement {
public:
  TensorElement() : alg_(nullptr) {}
  explicit TensorElement(const TwistedAlgebra& alg) : alg_(&alg) {}

  const std::map<std::pair<int, int>, LocalizedElement>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  void add(int a, int b, const LocalizedElement& q);

  TensorElement operator+(const TensorElement& other) const;
  TensorElement operator-(const TensorElement& other) const;
  TensorElement operator*(const TensorElement& other) const;
  bool operator==(const TensorElement& other) const;
  bool operator!=(const TensorElement& other) const { return !(*this == other); }

private:
  const TwistedAlgebra* alg_;
  std::map<std::pair<int, int>, LocalizedElement> support_;
};

// Expansion tables between the delta basis and the X (or Y) word basis.
// Rows of `a`: X_{I_w} = sum_v a_{w,v} delta_v; rows of `b`: delta_w =
// sum_v b_{w,v} X_{I_v}.  Both are triangular for the Bruhat order.
class BasisChange {
public:
  using Row = std::map<int, LocalizedElement>;

  const Row& a_row(int w) const { return a_rows_.at(w); }
  const Row& b_row(int w) const { return b_rows_.at(w); }
  const LocalizedElement& a(int w, int v) const;
  const LocalizedElement& b(int w, int v) const;

private:
  friend class TwistedAlgebra;
  std::vector<Row> a_rows_;
  std::vector<Row> b_rows_;
  LocalizedElement zero_;
};

enum class BasisKind { X, Y };

struct MembershipResult {
  bool member = false;
  std::map<int, LocalizedElement> coeffs;  // expansion in the X word basis
  int witness_w = -1;                      // first failing coefficient
  LatticeVec witness_root;                 // its offending denominator root
};

// Index subsets of a word, used to label subword coefficients.
using SubIdx = std::vector<std::size_t>;

class TwistedAlgebra {
public:
  explicit TwistedAlgebra(const LocAlgebra& ctx, int jobs = 1);

  const LocAlgebra& ctx() const { return *ctx_; }
  const WeylSlice& slice() const { return ctx_->slice(); }
  const FormalGroupAlgebra& fga() const { return ctx_->fga(); }

  TwistedElement zero() const { return TwistedElement(*this); }
  TwistedElement one() const { return delta(0); }
  TwistedElement delta(int w) const;
  TwistedElement scalar(const LocalizedElement& q) const;  // q * delta_e
  TwistedElement scalar(const FormalSeries& s) const;
  TwistedElement demazure_elem(const Root& alpha) const;   // X_alpha
  TwistedElement demazure_elem(std::size_t i) const;
  TwistedElement pushpull_elem(const Root& alpha) const;   // Y_alpha
  TwistedElement pushpull_elem(std::size_t i) const;
  // Left-to-right word products X_{i_1} ... X_{i_l} and the Y version.
  TwistedElement word_product(BasisKind kind, const std::vector<int>& word) const;

  // Expansion tables for the canonical words of every slice element; built
  // lazily, rows at one length computed from their one-letter prefixes.
  const BasisChange& basis(BasisKind kind) const;

  // Coefficients p_v with X_{iji...} - X_{jij...} = sum p_v X_{I_v}; the
  // difference of the two braid words is supported on lengths <= m_ij - 2.
  std::map<int, LocalizedElement> braid_defect(std::size_t i, std::size_t j) const;

  // Expansion of z in the X word basis with a regularity verdict: z lies in
  // the subalgebra generated over S exactly when every coefficient is
  // denominator free.
  MembershipResult membership(const TwistedElement& z) const;

  // Pole conditions along each denominator root alpha: x_alpha q_w and
  // q_w + q_{s_alpha w} must both be regular along alpha.
  bool residue_check(const TwistedElement& z) const;

  LocalizedElement act(const TwistedElement& z, const LocalizedElement& u) const;
  LocalizedElement act(const TwistedElement& z, const FormalSeries& u) const;
  LocalizedElement counit(const TwistedElement& z) const;

  TensorElement coproduct(const TwistedElement& z) const;

  // X_{I_E} * q resorted to left-scalar form: map E' subset of E to phi with
  // X_{I_E} q = sum phi_{E'} X_{I_{E'}}, via X_i q = s_i(q) X_i + D_i(q).
  std::map<SubIdx, LocalizedElement> push_scalar(const std::vector<int>& word,
                                                 const LocalizedElement& q) const;

  // Coproduct of the word product X_I in subword-indexed form:
  // map (E1, E2) to p with coproduct(X_I) = sum p X_{I_{E1}} x X_{I_{E2}}.
  std::map<std::pair<SubIdx, SubIdx>, LocalizedElement> coproduct_word_expansion(
      const std::vector<int>& word) const;

  // Rebuilds the tensor from a subword expansion table; used to confirm the
  // expansion against coproduct(word_product(word)).
  TensorElement tensor_of_expansion(
      const std::vector<int>& word,
      const std::map<std::pair<SubIdx, SubIdx>, LocalizedElement>& table) const;

  static std::vector<int> subword(const std::vector<int>& word, const SubIdx& idx);

private:
  BasisChange::Row row_times_generator(const BasisChange::Row& row, BasisKind kind,
                                       std::size_t i) const;
  void build_basis(BasisKind kind) const;
  std::map<int, LocalizedElement> solve_rows(const BasisChange& bc,
                                             std::map<int, LocalizedElement> rem) const;
  std::map<int, LocalizedElement> solve_in_basis(BasisKind kind,
                                                 std::map<int, LocalizedElement> rem) const;

  const LocAlgebra* ctx_;
  int jobs_;
  mutable std::mutex basis_mutex_;
  mutable std::optional<BasisChange> basis_x_;
  mutable std::optional<BasisChange> basis_y_;
};

}  // namespace demazure
