#include "demazure/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "demazure/errors.hpp"

namespace demazure {

int expo_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

Expo unit_expo(std::size_t nvars, std::size_t j) {
  Expo e(nvars, 0);
  e.at(j) = 1;
  return e;
}

bool GrlexLess::operator()(const Expo& a, const Expo& b) const {
  int da = expo_degree(a), db = expo_degree(b);
  if (da != db) return da < db;
  return a < b;
}

FormalSeries::FormalSeries(std::size_t nvars, ParamSetPtr params, int order)
    : nvars_(nvars), params_(std::move(params)), order_(order) {
  if (order_ < 0) throw PrecisionError("series order fell below zero");
}

FormalSeries FormalSeries::constant(std::size_t nvars, ParamSetPtr params, int order,
                                    Rational value) {
  FormalSeries s(nvars, params, order);
  if (value != 0)
    s.terms_.emplace(Expo(nvars, 0), Coefficient::constant(s.params_, std::move(value)));
  return s;
}

FormalSeries FormalSeries::variable(std::size_t nvars, ParamSetPtr params, int order,
                                    std::size_t j) {
  FormalSeries s(nvars, params, order);
  if (j >= nvars) throw ValidationError("variable index out of range");
  if (order >= 1) {
    Expo e(nvars, 0);
    e[j] = 1;
    s.terms_.emplace(std::move(e), Coefficient::constant(s.params_, 1));
  }
  return s;
}

FormalSeries FormalSeries::monomial(std::size_t nvars, ParamSetPtr params, int order, Expo e,
                                    Coefficient c) {
  FormalSeries s(nvars, params, order);
  if (e.size() != nvars) throw ValidationError("exponent tuple size mismatch");
  for (auto k : e)
    if (k < 0) throw ValidationError("negative exponent in series monomial");
  if (!c.is_zero() && expo_degree(e) <= order) s.terms_.emplace(std::move(e), std::move(c));
  return s;
}

int FormalSeries::valuation(int if_empty) const {
  if (terms_.empty()) return if_empty;
  return expo_degree(terms_.begin()->first);
}

Coefficient FormalSeries::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return Coefficient::zero(params_);
  return it->second;
}

Coefficient FormalSeries::constant_coeff() const { return coeff(Expo(nvars_, 0)); }

void FormalSeries::check_compatible(const FormalSeries& other) const {
  if (nvars_ != other.nvars_) throw ValidationError("series variable count mismatch");
}

void FormalSeries::add_term(Expo e, Coefficient c) {
  if (c.is_zero()) return;
  if (order_ != kExactOrder && expo_degree(e) > order_) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

FormalSeries FormalSeries::operator+(const FormalSeries& other) const {
  check_compatible(other);
  FormalSeries r(nvars_, params_ ? params_ : other.params_, std::min(order_, other.order_));
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

FormalSeries FormalSeries::operator-(const FormalSeries& other) const {
  return *this + (-other);
}

FormalSeries FormalSeries::operator-() const {
  FormalSeries r(nvars_, params_, order_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

FormalSeries FormalSeries::operator*(const FormalSeries& other) const {
  check_compatible(other);
  int order = std::min(order_, other.order_);
  FormalSeries r(nvars_, params_ ? params_ : other.params_, order);
  for (const auto& [ea, ca] : terms_) {
    int da = expo_degree(ea);
    if (order != kExactOrder && da > order) continue;
    for (const auto& [eb, cb] : other.terms_) {
      if (order != kExactOrder && da + expo_degree(eb) > order) continue;
      Expo e(nvars_);
      for (std::size_t k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

FormalSeries FormalSeries::scaled(const Coefficient& c) const {
  FormalSeries r(nvars_, params_ ? params_ : c.params(), order_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.add_term(e, t * c);
  return r;
}

bool FormalSeries::operator==(const FormalSeries& other) const {
  check_compatible(other);
  int order = std::min(order_, other.order_);
  auto within = [order](const Expo& e) {
    return order == kExactOrder || expo_degree(e) <= order;
  };
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  while (true) {
    while (it != terms_.end() && !within(it->first)) ++it;
    while (jt != other.terms_.end() && !within(jt->first)) ++jt;
    if (it == terms_.end() || jt == other.terms_.end()) break;
    if (it->first != jt->first || it->second != jt->second) return false;
    ++it;
    ++jt;
  }
  while (it != terms_.end() && !within(it->first)) ++it;
  while (jt != other.terms_.end() && !within(jt->first)) ++jt;
  return it == terms_.end() && jt == other.terms_.end();
}

FormalSeries FormalSeries::truncated(int new_order) const {
  FormalSeries r(nvars_, params_, std::min(order_, new_order));
  for (const auto& [e, c] : terms_) {
    if (r.order_ == kExactOrder || expo_degree(e) <= r.order_) r.terms_.emplace(e, c);
  }
  return r;
}

FormalSeries FormalSeries::homogeneous_part(int d) const {
  FormalSeries r(nvars_, params_, order_);
  for (const auto& [e, c] : terms_)
    if (expo_degree(e) == d) r.terms_.emplace(e, c);
  return r;
}

FormalSeries FormalSeries::substituted(const std::vector<FormalSeries>& images) const {
  if (images.size() != nvars_) throw ValidationError("substitution image count mismatch");
  for (const auto& im : images)
    if (!im.constant_coeff().is_zero())
      throw ValidationError("substitution image has a constant term");
  int order = order_;
  std::size_t out_vars = nvars_;
  ParamSetPtr out_params = params_;
  if (!images.empty()) {
    out_vars = images[0].nvars();
    if (images[0].params()) out_params = images[0].params();
    for (const auto& im : images) order = std::min(order, im.order());
  }
  FormalSeries result(out_vars, out_params, order);
  // Per-variable power cache; pow[j][k] = images[j]^k.
  std::vector<std::vector<FormalSeries>> pow(nvars_);
  auto power = [&](std::size_t j, int k) -> const FormalSeries& {
    auto& cache = pow[j];
    if (cache.empty()) cache.push_back(FormalSeries::constant(out_vars, out_params, order, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[j]);
    return cache[static_cast<std::size_t>(k)];
  };
  for (const auto& [e, c] : terms_) {
    if (order != kExactOrder && expo_degree(e) > order) continue;
    FormalSeries term = FormalSeries::constant(out_vars, out_params, order, 1);
    for (std::size_t j = 0; j < nvars_; ++j)
      if (e[j] > 0) term = term * power(j, e[j]);
    term = term.scaled(c);
    for (const auto& [te, tc] : term.terms()) result.add_term(te, tc);
  }
  return result;
}

std::string FormalSeries::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (j < var_names.size())
        out << "*" << var_names[j];
      else
        out << "*x" << j;
      if (e[j] > 1) out << "^" << e[j];
    }
  }
  return out.str();
}

LeadingForm leading_form(const FormalSeries& a) {
  if (a.is_zero()) throw ValidationError("zero series has no leading form");
  int d = a.valuation(0);
  return LeadingForm{d, a.homogeneous_part(d)};
}

FormalSeries graded_piece(const FormalSeries& a, int j) {
  if (a.order() != FormalSeries::kExactOrder && j > a.order())
    throw PrecisionError("graded piece requested beyond the trusted order");
  int val = a.valuation(a.order() == FormalSeries::kExactOrder ? std::numeric_limits<int>::max()
                                                               : a.order() + 1);
  if (val < j)
    throw ValidationError("series does not lie in the requested filtration level");
  if (val > j) return FormalSeries(a.nvars(), a.params(), a.order());
  return a.homogeneous_part(j);
}

}  // namespace demazure
