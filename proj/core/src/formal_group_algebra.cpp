#include "demazure/formal_group_algebra.hpp"

#include <algorithm>

#include "demazure/errors.hpp"

namespace demazure {

FormalGroupAlgebra::FormalGroupAlgebra(const RootDatum& datum, FormalGroupLaw law, int order)
    : datum_(&datum), law_(std::move(law)), order_(order) {
  if (order < 0 && order != FormalSeries::kExactOrder) {
    throw ValidationError("working order must be nonnegative");
  }
}

FormalSeries FormalGroupAlgebra::x_of(const LatticeVec& lam) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = x_cache_.find(lam);
    if (it != x_cache_.end()) return it->second;
  }
  FormalSeries value = compute_x(lam);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = x_cache_.emplace(lam, std::move(value));
  return it->second;
}

FormalSeries FormalGroupAlgebra::compute_x(const LatticeVec& lam) const {
  if (lam.size() != nvars()) throw ValidationError("lattice vector has wrong length");
  // Fold coordinate by coordinate: x_{lam} = F(..., F(x_{c1 w1}, x_{c2 w2}) ...),
  // with x_{c w} built by repeated F(x_w, .) or the formal inverse.
  FormalSeries acc = zero();
  bool have = false;
  for (std::size_t j = 0; j < lam.size(); ++j) {
    int64_t c = lam[j];
    if (c == 0) continue;
    FormalSeries xj = FormalSeries::variable(nvars(), params(), order_, j);
    FormalSeries part = zero();
    int64_t n = c > 0 ? c : -c;
    for (int64_t k = 0; k < n; ++k) part = law_.combine(part, xj);
    if (c < 0) part = law_.inverse(part);
    acc = have ? law_.combine(acc, part) : part;
    have = true;
  }
  return acc;
}

FormalSeries FormalGroupAlgebra::x_of_minus(const Root& r) const {
  LatticeVec neg(r.lattice.size());
  for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -r.lattice[j];
  return x_of(neg);
}

FormalSeries FormalGroupAlgebra::act(const IntMatrix& m, const FormalSeries& a) const {
  if (m.n != nvars()) throw ValidationError("lattice map has wrong shape");
  std::vector<FormalSeries> images;
  images.reserve(nvars());
  for (std::size_t j = 0; j < nvars(); ++j) images.push_back(x_of(m.column(j)));
  return a.substituted(images);
}

FormalSeries FormalGroupAlgebra::reflect(std::size_t i, const FormalSeries& a) const {
  return act(datum_->reflection_matrix(i), a);
}

FormalSeries FormalGroupAlgebra::tau(const FormalSeries& a) const {
  IntMatrix neg = IntMatrix::identity(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) neg.at(i, i) = -1;
  return act(neg, a);
}

namespace {

// Pick a variable whose coefficient in a linear form is a nonzero rational.
std::size_t pivot_of(const FormalSeries& lin) {
  for (const auto& [e, c] : lin.terms()) {
    if (!c.is_constant()) continue;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) return j;
  }
  throw NonDivisibleError("divisor has no usable linear pivot", lin.to_string());
}

}  // namespace

FormalSeries FormalGroupAlgebra::divide_exact(const FormalSeries& a, const FormalSeries& b) const {
  if (b.is_zero()) throw ValidationError("division by zero series");
  LeadingForm lead = leading_form(b);
  if (lead.degree != 1) {
    throw NonDivisibleError("divisor must have valuation one", b.to_string());
  }
  int rorder = std::min(a.order(), b.order());
  bool exact = rorder == FormalSeries::kExactOrder;
  int qorder = exact ? FormalSeries::kExactOrder : rorder - 1;
  if (a.is_zero()) return FormalSeries(a.nvars(), a.params(), qorder);

  FormalSeries lin = lead.form.truncated(rorder);
  std::size_t piv = pivot_of(lin);
  Coefficient pc_inv = lin.coeff(unit_expo(a.nvars(), piv)).inverse();

  int bound;  // quotient degrees run 0..bound
  if (exact) {
    // Over a domain, deg(q) + deg(b) = deg(a) and deg(b) >= 1.
    int adeg = 0;
    for (const auto& [e, c] : a.terms()) adeg = std::max(adeg, expo_degree(e));
    bound = adeg - 1;
  } else {
    bound = rorder - 1;
  }

  // Degree-wise peeling: the lowest form of the running remainder must be
  // part * lin for a homogeneous part, found by long division in the pivot
  // variable.  Intermediates stay at the remainder's order; the final
  // quotient is only trusted one order lower.
  FormalSeries quotient(a.nvars(), a.params(), rorder);
  FormalSeries rem = a.truncated(rorder);
  for (int d = 0; d <= bound && !rem.is_zero(); ++d) {
    FormalSeries num = rem.homogeneous_part(d + 1);
    if (num.is_zero()) continue;
    FormalSeries part(a.nvars(), a.params(), rorder);
    FormalSeries work = num;
    while (!work.is_zero()) {
      const auto& terms = work.terms();
      auto best = terms.end();
      std::int32_t best_exp = -1;
      for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it->first[piv] > best_exp) {
          best_exp = it->first[piv];
          best = it;
        }
      }
      if (best_exp <= 0) {
        throw NonDivisibleError("series division is not exact", work.to_string());
      }
      Expo qe = best->first;
      qe[piv] -= 1;
      FormalSeries qterm =
          FormalSeries::monomial(a.nvars(), a.params(), rorder, std::move(qe), best->second * pc_inv);
      part = part + qterm;
      work = work - qterm * lin;
    }
    quotient = quotient + part;
    rem = rem - part * b;
  }
  if (!rem.is_zero()) {
    throw NonDivisibleError("series division is not exact", rem.to_string());
  }
  return quotient.truncated(qorder);
}

FormalSeries FormalGroupAlgebra::divide_by_root(const FormalSeries& a, const Root& alpha) const {
  return divide_exact(a, x_of(alpha.lattice));
}

FormalSeries FormalGroupAlgebra::demazure(std::size_t i, const FormalSeries& a) const {
  if (i >= datum_->rank()) throw ValidationError("simple reflection index out of range");
  FormalSeries diff = a - reflect(i, a);
  return divide_by_root(diff, datum_->simple_root(i));
}

FormalSeries FormalGroupAlgebra::demazure_root(const Root& alpha, const FormalSeries& a) const {
  FormalSeries diff = a - act(datum_->reflection_matrix(alpha), a);
  return divide_by_root(diff, alpha);
}

FormalSeries FormalGroupAlgebra::kappa(const Root& alpha) const {
  // kappa = (x_alpha + x_{-alpha}) / (x_alpha x_{-alpha}): two nested exact
  // divisions, first by x_alpha then by x_{-alpha}.
  FormalSeries xp = x_of(alpha.lattice);
  FormalSeries xm = x_of_minus(alpha);
  FormalSeries q1 = divide_exact(xp + xm, xp);
  return divide_exact(q1, xm);
}

FormalSeries FormalGroupAlgebra::pushpull(const Root& alpha, const FormalSeries& a) const {
  return kappa(alpha) * a - demazure_root(alpha, a);
}

}  // namespace demazure
