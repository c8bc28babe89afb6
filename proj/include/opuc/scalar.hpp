#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdio>
#include <string>
#include <type_traits>

#include "opuc/expr.hpp"
#include "opuc/gaussian_rational.hpp"

namespace opuc {

using Complex = std::complex<double>;

enum class Mode { symbolic, numeric };

inline const char* to_string(Mode m) { return m == Mode::symbolic ? "symbolic" : "numeric"; }

// Relative tolerance used by every numeric comparison.
inline constexpr double kNumericTolerance = 1e-9;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Expr> {
  static constexpr Mode mode = Mode::symbolic;
  static Expr from(const GaussianRational& v) { return Expr(v); }
  static bool is_zero(const Expr& x) { return x.is_zero(); }
  static Expr conj(const Expr& x) { return opuc::conj(x); }
  static std::string render(const Expr& x) { return x.str(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr Mode mode = Mode::numeric;
  static Complex from(const GaussianRational& v) { return v.to_complex(); }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static std::string render(const Complex& x) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", x.real(), x.imag());
    return buf;
  }
};

// Anything the OPUC algorithms can run over: a commutative ring with
// conjugation and (exact or floating) division.
template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { ScalarTraits<T>::conj(a) } -> std::convertible_to<T>;
  { ScalarTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
  { ScalarTraits<T>::from(GaussianRational{}) } -> std::convertible_to<T>;
};

template <Scalar T>
T conjugate(const T& x) {
  return ScalarTraits<T>::conj(x);
}

template <Scalar T>
bool is_zero(const T& x) {
  return ScalarTraits<T>::is_zero(x);
}

template <Scalar T>
T scalar_from(const GaussianRational& v) {
  return ScalarTraits<T>::from(v);
}

template <Scalar T>
std::string render(const T& x) {
  return ScalarTraits<T>::render(x);
}

// |a-b| <= tol * max(1, |a|, |b|)
inline bool approx_equal(const Complex& a, const Complex& b, double tol = kNumericTolerance) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

// Exact equality in symbolic mode, relative tolerance in numeric mode.
inline bool same_value(const Expr& a, const Expr& b, double = kNumericTolerance) { return a == b; }
inline bool same_value(const Complex& a, const Complex& b, double tol = kNumericTolerance) {
  return approx_equal(a, b, tol);
}

}  // namespace opuc
