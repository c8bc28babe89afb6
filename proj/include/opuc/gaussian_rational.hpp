#pragma once

#include <gmpxx.h>

#include <cctype>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace opuc {

using Rational = mpq_class;

// Element of Q(i). Both parts are kept canonical by GMP.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(implicit)
  GaussianRational(Rational re, Rational im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_integer() const {
    return is_real() && re_.get_den() == 1;
  }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  // |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.is_real()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    Rational n = o.norm();
    *this *= conj(o);
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend GaussianRational conj(const GaussianRational& z) { return {z.re_, -z.im_}; }

  // "3", "-1/2", "2i", "(1/2-3i)"
  std::string str() const {
    if (is_real()) return re_.get_str();
    std::string imag = imag_str();
    if (sgn(re_) == 0) return imag;
    std::string out = "(" + re_.get_str();
    if (imag.front() != '-') out += '+';
    return out + imag + ")";
  }

 private:
  std::string imag_str() const {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "i";
  }

  Rational re_{0};
  Rational im_{0};
};

inline Rational pow(const Rational& base, int e) {
  Rational out = 1;
  Rational b = e < 0 ? Rational(1) / base : base;
  for (int k = e < 0 ? -e : e; k > 0; --k) out *= b;
  return out;
}

namespace detail {

// Parses an unsigned real literal: "3", "2/5", "0.25", "1e-6", "" (=1).
inline Rational parse_real(std::string_view s, bool& saw_decimal) {
  if (s.empty()) return 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num(std::string(s.substr(0, slash)), 10);
    Rational den(std::string(s.substr(slash + 1)), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return num / den;
  }
  std::string mant(s);
  long exp10 = 0;
  if (auto e = mant.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::stol(mant.substr(e + 1));
    mant.erase(e);
    saw_decimal = true;
  }
  if (auto dot = mant.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
    saw_decimal = true;
  }
  if (mant.empty()) throw std::invalid_argument("empty number");
  for (char c : mant)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad digit in '" + std::string(s) + "'");
  Rational v(mant, 10);
  Rational scale = 1;
  for (long k = 0; k < (exp10 < 0 ? -exp10 : exp10); ++k) scale *= 10;
  return exp10 < 0 ? Rational(v / scale) : Rational(v * scale);
}

}  // namespace detail

struct ParsedLiteral {
  GaussianRational value;
  bool decimal = false;  // a decimal point or exponent was used
};

// Parses complex literals of the form a+bi with rational or decimal parts:
// "1/2", "-0.3+0.4i", "2/5+1/5i", "i", "-i/2" is not accepted.
inline ParsedLiteral parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  ParsedLiteral out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() &&
           !((s[end] == '+' || s[end] == '-') && s[end - 1] != 'e' && s[end - 1] != 'E'))
      ++end;
    std::string_view term(s.data() + pos, end - pos);
    bool negative = false;
    if (term.front() == '+' || term.front() == '-') {
      negative = term.front() == '-';
      term.remove_prefix(1);
    }
    bool imaginary = !term.empty() && term.back() == 'i';
    if (imaginary) term.remove_suffix(1);
    if (!imaginary && term.empty())
      throw std::invalid_argument("bad complex literal '" + s + "'");
    Rational v = detail::parse_real(term, out.decimal);
    if (negative) v = -v;
    out.value += imaginary ? GaussianRational(0, v) : GaussianRational(v);
    pos = end;
  }
  return out;
}

}  // namespace opuc
