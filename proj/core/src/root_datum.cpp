#include "demazure/root_datum.hpp"

#include <numeric>

#include <gmpxx.h>

namespace demazure {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m;
  m.n = n;
  m.a.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix r;
  r.n = n;
  r.a.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r.at(i, j) += v * other.at(k, j);
    }
  return r;
}

LatticeVec IntMatrix::apply(const LatticeVec& v) const {
  LatticeVec r(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
  return r;
}

LatticeVec IntMatrix::column(std::size_t j) const {
  LatticeVec r(n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i] = at(i, j);
  return r;
}

CartanMatrix::CartanMatrix(const std::vector<std::vector<int>>& rows) : n_(rows.size()) {
  if (n_ == 0) throw ValidationError("empty Cartan matrix");
  a_.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw ValidationError("Cartan matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != 2) throw ValidationError("Cartan matrix diagonal entry is not 2");
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      if (at(i, j) > 0) throw ValidationError("positive off-diagonal Cartan entry");
      if ((at(i, j) == 0) != (at(j, i) == 0))
        throw ValidationError("Cartan matrix zero pattern is not symmetric");
    }
  }
}

int CartanMatrix::coxeter_order(std::size_t i, std::size_t j) const {
  if (i == j) throw ValidationError("coxeter_order needs distinct indices");
  int p = at(i, j) * at(j, i);
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite
  }
}

RootDatum::RootDatum(CartanMatrix cartan, std::vector<LatticeVec> simple_roots,
                     std::vector<LatticeVec> simple_coroots)
    : cartan_(std::move(cartan)), simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
  std::size_t n = cartan_.rank();
  if (simple_roots_.size() != n || simple_coroots_.size() != n)
    throw ValidationError("root/coroot count does not match the Cartan rank");
  if (simple_roots_.empty() || simple_roots_[0].empty())
    throw ValidationError("empty lattice");
  m_ = simple_roots_[0].size();
  for (const auto& v : simple_roots_)
    if (v.size() != m_) throw ValidationError("simple root coordinate size mismatch");
  for (const auto& v : simple_coroots_)
    if (v.size() != m_) throw ValidationError("simple coroot coordinate size mismatch");
  if (m_ < n) throw ValidationError("lattice rank below the Cartan rank");

  // Integral pairing must reproduce the Cartan matrix.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pairing(simple_roots_[j], i) != cartan_.at(i, j))
        throw ValidationError("coroot pairing does not reproduce the Cartan matrix");

  // Simple roots must be unimodular (coordinate gcd 1), hence extendable to a
  // lattice basis.
  for (const auto& v : simple_roots_) {
    std::int64_t g = 0;
    for (auto c : v) g = std::gcd(g, c < 0 ? -c : c);
    if (g != 1) throw ValidationError("simple root is not unimodular in the lattice");
  }

  // Linear independence of the simple roots over Q (exact elimination).
  std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(m_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m_; ++j) rows[i][j] = static_cast<long>(simple_roots_[i][j]);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m_ && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (rows[i][col] == 0) continue;
      mpq_class f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < m_; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  if (rank != n) throw ValidationError("simple roots are linearly dependent");
}

RootDatum RootDatum::root_lattice(CartanMatrix cartan) {
  std::size_t n = cartan.rank();
  std::vector<LatticeVec> roots(n, LatticeVec(n, 0));
  std::vector<LatticeVec> coroots(n, LatticeVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    roots[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) coroots[i][j] = cartan.at(i, j);
  }
  return RootDatum(std::move(cartan), std::move(roots), std::move(coroots));
}

Root RootDatum::simple_root(std::size_t i) const {
  Root r;
  r.lattice = simple_roots_[i];
  r.simple.assign(cartan_.rank(), 0);
  r.simple[i] = 1;
  r.coroot = simple_coroots_[i];
  r.positive = true;
  return r;
}

std::int64_t RootDatum::pairing(const LatticeVec& lam, std::size_t i) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < m_; ++j) s += simple_coroots_[i][j] * lam[j];
  return s;
}

IntMatrix RootDatum::reflection_matrix(std::size_t i) const {
  IntMatrix m = IntMatrix::identity(m_);
  for (std::size_t r = 0; r < m_; ++r)
    for (std::size_t c = 0; c < m_; ++c)
      m.at(r, c) -= simple_roots_[i][r] * simple_coroots_[i][c];
  return m;
}

LatticeVec RootDatum::reflect(std::size_t i, const LatticeVec& lam) const {
  std::int64_t p = pairing(lam, i);
  LatticeVec r = lam;
  for (std::size_t j = 0; j < m_; ++j) r[j] -= p * simple_roots_[i][j];
  return r;
}

LatticeVec RootDatum::reflect_simple_coords(std::size_t i, const LatticeVec& c) const {
  // s_i(sum c_k alpha_k) = sum c_k alpha_k - (sum_k a_ik c_k) alpha_i
  std::int64_t p = 0;
  for (std::size_t k = 0; k < cartan_.rank(); ++k) p += cartan_.at(i, k) * c[k];
  LatticeVec r = c;
  r[i] -= p;
  return r;
}

Root RootDatum::reflect_root(std::size_t i, const Root& r) const {
  Root out;
  out.lattice = reflect(i, r.lattice);
  out.simple = reflect_simple_coords(i, r.simple);
  // (s_i gamma)^vee pairs as <s_i(.), gamma^vee>: covector times the
  // reflection matrix.
  out.coroot.assign(m_, 0);
  std::int64_t dot = 0;
  for (std::size_t j = 0; j < m_; ++j) dot += r.coroot[j] * simple_roots_[i][j];
  for (std::size_t j = 0; j < m_; ++j)
    out.coroot[j] = r.coroot[j] - dot * simple_coroots_[i][j];
  bool has_pos = false, has_neg = false;
  for (auto c : out.simple) {
    has_pos |= c > 0;
    has_neg |= c < 0;
  }
  if (has_pos && has_neg)
    throw ValidationError("reflected root has mixed sign; not a real root");
  out.positive = !has_neg;
  return out;
}

IntMatrix RootDatum::reflection_matrix(const Root& r) const {
  IntMatrix m = IntMatrix::identity(m_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j) m.at(i, j) -= r.lattice[i] * r.coroot[j];
  return m;
}

}  // namespace demazure
