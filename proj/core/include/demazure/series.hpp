#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "demazure/coefficient.hpp"

namespace demazure {

using Expo = std::vector<std::int32_t>;

int expo_degree(const Expo& e);
Expo unit_expo(std::size_t nvars, std::size_t j);

// Graded lexicographic order: total degree first, then lex.
struct GrlexLess {
  bool operator()(const Expo& a, const Expo& b) const;
};

// Truncated multivariate power series: finitely many terms plus a validity
// order.  Terms of total degree <= order() are trusted; everything beyond is
// unknown.  order() == kExactOrder marks an exact polynomial.
class FormalSeries {
public:
  static constexpr int kExactOrder = std::numeric_limits<int>::max();

  FormalSeries() : nvars_(0), order_(0) {}
  FormalSeries(std::size_t nvars, ParamSetPtr params, int order);

  static FormalSeries constant(std::size_t nvars, ParamSetPtr params, int order, Rational value);
  static FormalSeries variable(std::size_t nvars, ParamSetPtr params, int order, std::size_t j);
  static FormalSeries monomial(std::size_t nvars, ParamSetPtr params, int order, Expo e,
                               Coefficient c);

  std::size_t nvars() const { return nvars_; }
  const ParamSetPtr& params() const { return params_; }
  int order() const { return order_; }
  const std::map<Expo, Coefficient, GrlexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Lowest total degree among stored terms; `if_empty` when there are none.
  int valuation(int if_empty) const;
  Coefficient coeff(const Expo& e) const;
  Coefficient constant_coeff() const;

  FormalSeries operator+(const FormalSeries& other) const;
  FormalSeries operator-(const FormalSeries& other) const;
  FormalSeries operator*(const FormalSeries& other) const;
  FormalSeries operator-() const;
  FormalSeries scaled(const Coefficient& c) const;
  bool operator==(const FormalSeries& other) const;  // compares up to min order
  bool operator!=(const FormalSeries& other) const { return !(*this == other); }

  FormalSeries truncated(int new_order) const;
  FormalSeries homogeneous_part(int d) const;
  void add_term(Expo e, Coefficient c);
  void set_order(int order) { order_ = order; }

  // Substitutes images[j] for variable j; images must have zero constant term.
  FormalSeries substituted(const std::vector<FormalSeries>& images) const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
  void check_compatible(const FormalSeries& other) const;

  std::size_t nvars_;
  ParamSetPtr params_;
  int order_;
  std::map<Expo, Coefficient, GrlexLess> terms_;
};

// Homogeneous class of a series in the augmentation filtration: the degree
// together with the degree-piece polynomial.
struct LeadingForm {
  int degree;
  FormalSeries form;
};

LeadingForm leading_form(const FormalSeries& a);

// The class of `a` in filtration level j modulo level j+1: valuation == j
// gives the degree-j part, valuation > j gives zero, valuation < j errors
// (the class is undefined), j beyond the trusted order errors.
FormalSeries graded_piece(const FormalSeries& a, int j);

}  // namespace demazure
