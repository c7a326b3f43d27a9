#include "demazure/coefficient.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace demazure {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) return false;
    return std::all_of(part.begin() + start, part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false))
    throw ValidationError("malformed rational literal: " + text);
  Rational q;
  if (q.set_str(num + "/" + den, 10) != 0)
    throw ValidationError("malformed rational literal: " + text);
  if (q.get_den() == 0) throw ValidationError("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::shared_ptr<const ParamSet> ParamSet::make(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw ValidationError("duplicate parameter name: " + names[i]);
  return std::shared_ptr<const ParamSet>(new ParamSet(std::move(names)));
}

namespace {

std::size_t params_size(const ParamSetPtr& p) { return p ? p->size() : 0; }

bool params_equal(const ParamSetPtr& a, const ParamSetPtr& b) {
  if (a == b) return true;
  return params_size(a) == params_size(b) && (params_size(a) == 0 || *a == *b);
}

}  // namespace

Coefficient Coefficient::zero(ParamSetPtr params) { return Coefficient(std::move(params)); }

Coefficient Coefficient::constant(ParamSetPtr params, Rational value) {
  Coefficient c(std::move(params));
  if (value != 0) c.terms_.emplace(ParamExp(params_size(c.params_), 0), std::move(value));
  return c;
}

Coefficient Coefficient::parameter(ParamSetPtr params, std::size_t index, unsigned power) {
  if (!params || index >= params->size())
    throw ValidationError("parameter index out of range");
  Coefficient c(std::move(params));
  ParamExp e(c.params_->size(), 0);
  e[index] = power;
  if (power == 0) e[index] = 0;
  c.terms_.emplace(std::move(e), Rational(1));
  return c;
}

bool Coefficient::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const ParamExp& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

Rational Coefficient::constant_value() const {
  if (!is_constant()) throw ValidationError("coefficient is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Coefficient::degree() const {
  int d = -1;
  for (const auto& [e, v] : terms_) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    d = std::max(d, t);
  }
  return d;
}

void Coefficient::insert_term(ParamExp exp, Rational value) {
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (value != 0) terms_.emplace(std::move(exp), std::move(value));
    return;
  }
  it->second += value;
  if (it->second == 0) terms_.erase(it);
}

// Constants over the empty set interoperate with any declared set; two
// distinct nonempty declared sets never mix.
ParamSetPtr Coefficient::merged_params(const Coefficient& a, const Coefficient& b) {
  if (params_equal(a.params_, b.params_)) return a.params_ ? a.params_ : b.params_;
  if (params_size(a.params_) == 0) return b.params_;
  if (params_size(b.params_) == 0) return a.params_;
  throw ValidationError("parameter set mismatch");
}

namespace {

ParamExp resized(const ParamExp& e, std::size_t n) {
  ParamExp r(n, 0);
  std::copy(e.begin(), e.end(), r.begin());
  return r;
}

}  // namespace

Coefficient Coefficient::operator+(const Coefficient& other) const {
  Coefficient r(merged_params(*this, other));
  std::size_t n = params_size(r.params_);
  for (const auto& [e, v] : terms_) r.insert_term(resized(e, n), v);
  for (const auto& [e, v] : other.terms_) r.insert_term(resized(e, n), v);
  return r;
}

Coefficient Coefficient::operator-(const Coefficient& other) const { return *this + (-other); }

Coefficient Coefficient::operator-() const {
  Coefficient r(params_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
  return r;
}

Coefficient Coefficient::operator*(const Coefficient& other) const {
  Coefficient r(merged_params(*this, other));
  std::size_t n = params_size(r.params_);
  for (const auto& [ea, va] : terms_) {
    ParamExp ea_r = resized(ea, n);
    for (const auto& [eb, vb] : other.terms_) {
      ParamExp e = ea_r;
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      r.insert_term(std::move(e), va * vb);
    }
  }
  return r;
}

bool Coefficient::operator==(const Coefficient& other) const {
  if (!params_equal(params_, other.params_)) {
    if (params_size(params_) != 0 && params_size(other.params_) != 0)
      throw ValidationError("parameter set mismatch");
  }
  if (terms_.size() != other.terms_.size()) return false;
  std::size_t n = std::max(params_size(params_), params_size(other.params_));
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (resized(it->first, n) != resized(jt->first, n) || it->second != jt->second) return false;
  }
  return true;
}

Coefficient Coefficient::exact_div(const Coefficient& divisor) const {
  if (divisor.is_zero()) throw ValidationError("division by zero coefficient");
  ParamSetPtr params = merged_params(*this, divisor);
  std::size_t n = params_size(params);
  Coefficient rem(params);
  for (const auto& [e, v] : terms_) rem.insert_term(resized(e, n), v);
  Coefficient div(params);
  for (const auto& [e, v] : divisor.terms_) div.insert_term(resized(e, n), v);

  Coefficient quot(params);
  const auto& [eb, vb] = *div.terms_.rbegin();  // lex-leading divisor term
  while (!rem.terms_.empty()) {
    const auto& [ea, va] = *rem.terms_.rbegin();
    ParamExp q_exp(n, 0);
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (ea[k] < eb[k]) {
        ok = false;
        break;
      }
      q_exp[k] = ea[k] - eb[k];
    }
    if (!ok)
      throw NonDivisibleError("coefficient division is not exact", rem.to_string());
    Coefficient t(params);
    t.terms_.emplace(std::move(q_exp), va / vb);
    quot = quot + t;
    rem = rem - t * div;
  }
  return quot;
}

Coefficient Coefficient::inverse() const {
  if (!is_constant() || is_zero())
    throw ValidationError("coefficient is not invertible: " + to_string());
  return constant(params_, 1 / constant_value());
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, v] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool has_params = std::any_of(e.begin(), e.end(), [](std::uint32_t k) { return k > 0; });
    if (!has_params) {
      out << rational_string(v);
    } else {
      if (v == -1)
        out << "-";
      else if (v != 1)
        out << rational_string(v) << "*";
      bool lead = true;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!lead) out << "*";
        lead = false;
        out << params_->name(k);
        if (e[k] > 1) out << "^" << e[k];
      }
    }
  }
  return out.str();
}

}  // namespace demazure
