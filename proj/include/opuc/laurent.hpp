#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "opuc/scalar.hpp"

namespace opuc {

// Finite Laurent series sum_k c_k z^k with no stored zero coefficients.
template <Scalar T>
class LaurentPoly {
 public:
  using Coeffs = std::map<int, T>;

  LaurentPoly() = default;
  LaurentPoly(const T& c) { set(0, c); }  // NOLINT(implicit)

  static LaurentPoly monomial(int exponent, const T& c = T(1)) {
    LaurentPoly p;
    p.set(exponent, c);
    return p;
  }

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  T coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? T(0) : it->second;
  }

  void set(int k, const T& c) {
    if (opuc::is_zero(c)) coeffs_.erase(k);
    else coeffs_.insert_or_assign(k, c);
  }

  // Highest / lowest exponent in the support.
  int degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
    return coeffs_.rbegin()->first;
  }
  int valuation() const {
    if (coeffs_.empty()) throw std::domain_error("valuation of zero Laurent polynomial");
    return coeffs_.begin()->first;
  }

  LaurentPoly operator-() const {
    LaurentPoly out;
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
    return out;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) accumulate(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) accumulate(k, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [i, x] : a.coeffs_)
      for (const auto& [j, y] : b.coeffs_) out.accumulate(i + j, x * y);
    return out;
  }
  friend LaurentPoly operator*(const T& s, const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [k, c] : p.coeffs_) out.set(k, s * c);
    return out;
  }

  // z^k * p
  LaurentPoly shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (auto ia = a.coeffs_.begin(), ib = b.coeffs_.begin(); ia != a.coeffs_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !same_value(ia->second, ib->second)) return false;
    return true;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + render(it->second) + ")";
      if (it->first != 0) out += "*z^" + std::to_string(it->first);
    }
    return out;
  }

 private:
  void accumulate(int k, const T& c) {
    if (opuc::is_zero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (opuc::is_zero(it->second)) coeffs_.erase(it);
    }
  }

  Coeffs coeffs_;
};

// f -> conj(f)(1/z): conjugate every coefficient and negate every exponent.
template <Scalar T>
LaurentPoly<T> bar_inverse_substitute(const LaurentPoly<T>& f) {
  LaurentPoly<T> out;
  for (const auto& [k, c] : f.coeffs()) out.set(-k, conjugate(c));
  return out;
}

// Reverse polynomial z^d * conj(f)(1/z) for a polynomial f of degree <= d.
template <Scalar T>
LaurentPoly<T> reverse(const LaurentPoly<T>& f, int declared_degree) {
  if (f.is_zero()) return f;
  if (f.valuation() < 0) throw std::invalid_argument("reverse: negative valuation");
  if (f.degree() > declared_degree)
    throw std::invalid_argument("reverse: degree exceeds declared degree");
  return bar_inverse_substitute(f).shifted(declared_degree);
}

}  // namespace opuc
