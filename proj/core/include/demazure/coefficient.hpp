#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "demazure/errors.hpp"

namespace demazure {

using Rational = mpq_class;

// Parses "p" or "p/q" with q > 0 after canonicalization; rejects anything else.
Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& q);

// The parameter names fixed for one session, e.g. {} or {"beta"} or {"mu1","mu2"}.
// Shared by every coefficient created in the session.
class ParamSet {
public:
  static std::shared_ptr<const ParamSet> make(std::vector<std::string> names);
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  bool operator==(const ParamSet& other) const { return names_ == other.names_; }

private:
  explicit ParamSet(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;
using ParamExp = std::vector<std::uint32_t>;

// Element of Q[params]: sparse exponent-tuple map in normal form
// (no zero coefficients, canonical rationals).  Plain rationals are the
// empty-parameter case.
class Coefficient {
public:
  Coefficient() : params_(nullptr) {}  // zero over the empty parameter set

  static Coefficient zero(ParamSetPtr params);
  static Coefficient constant(ParamSetPtr params, Rational value);
  static Coefficient parameter(ParamSetPtr params, std::size_t index, unsigned power = 1);

  const ParamSetPtr& params() const { return params_; }
  const std::map<ParamExp, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); zero yields 0.
  Rational constant_value() const;
  // Largest total degree in the parameters; zero yields -1.
  int degree() const;

  Coefficient operator+(const Coefficient& other) const;
  Coefficient operator-(const Coefficient& other) const;
  Coefficient operator*(const Coefficient& other) const;
  Coefficient operator-() const;
  bool operator==(const Coefficient& other) const;
  bool operator!=(const Coefficient& other) const { return !(*this == other); }

  // Exact division; throws NonDivisibleError (carrying the remainder) when
  // `divisor` does not divide this exactly, ValidationError on zero divisor.
  Coefficient exact_div(const Coefficient& divisor) const;

  // Multiplicative inverse; only nonzero constants are invertible here.
  Coefficient inverse() const;

  std::string to_string() const;

private:
  explicit Coefficient(ParamSetPtr params) : params_(std::move(params)) {}
  void insert_term(ParamExp exp, Rational value);
  static ParamSetPtr merged_params(const Coefficient& a, const Coefficient& b);

  ParamSetPtr params_;
  std::map<ParamExp, Rational> terms_;
};

}  // namespace demazure
