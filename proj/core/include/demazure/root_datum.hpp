#pragma once

#include <cstdint>
#include <vector>

#include "demazure/errors.hpp"

namespace demazure {

using LatticeVec = std::vector<std::int64_t>;

// Square integer matrix acting on lattice coordinates (column vectors).
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> a;  // row-major

  static IntMatrix identity(std::size_t n);
  std::int64_t& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  IntMatrix operator*(const IntMatrix& other) const;
  LatticeVec apply(const LatticeVec& v) const;
  LatticeVec column(std::size_t j) const;
  bool operator==(const IntMatrix& other) const { return n == other.n && a == other.a; }
  bool operator<(const IntMatrix& other) const { return a < other.a; }
};

// Generalized Cartan matrix: 2 on the diagonal, nonpositive off-diagonal
// entries, with a_ij = 0 iff a_ji = 0.
class CartanMatrix {
public:
  explicit CartanMatrix(const std::vector<std::vector<int>>& rows);
  std::size_t rank() const { return n_; }
  int at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  // Order of s_i s_j: 2, 3, 4, 6, or 0 for infinite.
  int coxeter_order(std::size_t i, std::size_t j) const;

private:
  std::size_t n_;
  std::vector<int> a_;
};

// Real root carried in three coordinate systems: ambient lattice coordinates,
// coordinates in the simple roots, and the pairing covector of its coroot.
struct Root {
  LatticeVec lattice;
  LatticeVec simple;
  LatticeVec coroot;
  bool positive = true;
};

// Lattice with a chosen Cartan matrix realization: simple roots have
// unimodular coordinates, the integral coroot pairing reproduces the Cartan
// matrix, and the simple roots are linearly independent.
class RootDatum {
public:
  RootDatum(CartanMatrix cartan, std::vector<LatticeVec> simple_roots,
            std::vector<LatticeVec> simple_coroots);
  static RootDatum root_lattice(CartanMatrix cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  std::size_t rank() const { return cartan_.rank(); }
  std::size_t lattice_rank() const { return m_; }
  const LatticeVec& simple_root_vec(std::size_t i) const { return simple_roots_[i]; }
  const LatticeVec& simple_coroot_vec(std::size_t i) const { return simple_coroots_[i]; }
  Root simple_root(std::size_t i) const;

  std::int64_t pairing(const LatticeVec& lam, std::size_t i) const;
  IntMatrix reflection_matrix(std::size_t i) const;
  LatticeVec reflect(std::size_t i, const LatticeVec& lam) const;
  // s_i acting on coordinates in the simple roots, via the Cartan matrix.
  LatticeVec reflect_simple_coords(std::size_t i, const LatticeVec& c) const;
  // Applies s_i to a root carried in all three coordinate systems.
  Root reflect_root(std::size_t i, const Root& r) const;
  // Reflection matrix attached to an arbitrary real root.
  IntMatrix reflection_matrix(const Root& r) const;

private:
  CartanMatrix cartan_;
  std::size_t m_;
  std::vector<LatticeVec> simple_roots_;
  std::vector<LatticeVec> simple_coroots_;
};

}  // namespace demazure
