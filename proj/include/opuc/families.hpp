#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opuc/errors.hpp"
#include "opuc/functional.hpp"
#include "opuc/gaussian_rational.hpp"
#include "opuc/scalar.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc {

enum class Family {
  geronimus,
  bernstein_szego,
  mass_point,
  circular_jacobi,
  single_nontrivial,
  rogers_szego,
  al_salam_carlitz,
};

struct FamilyInfo {
  Family family;
  const char* name;
  const char* param;
  bool closed_forms;
};

inline const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> reg = {
      {Family::geronimus, "geronimus", "alpha", false},
      {Family::bernstein_szego, "bernstein-szego", "zeta", true},
      {Family::mass_point, "mass-point", "gamma", true},
      {Family::circular_jacobi, "circular-jacobi", "a", true},
      {Family::single_nontrivial, "single-nontrivial", "a", true},
      {Family::rogers_szego, "rogers-szego", "q", true},
      {Family::al_salam_carlitz, "al-salam-carlitz", "q", false},
  };
  return reg;
}

inline const FamilyInfo& family_info(Family f) {
  for (const auto& info : family_registry())
    if (info.family == f) return info;
  throw std::logic_error("unregistered family");
}

// Accepts "rogers-szego", "rogers_szego", "Rogers-Szego".
inline Family parse_family(std::string_view name) {
  std::string key;
  for (char c : name) key += c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& info : family_registry())
    if (key == info.name) return info.family;
  throw UnsupportedFamily("unknown family '" + std::string(name) + "'");
}

struct FamilySpec {
  Family family = Family::geronimus;
  GaussianRational param;

  const FamilyInfo& info() const { return family_info(family); }
  std::string str() const { return std::string(info().name) + "(" + info().param + "=" + param.str() + ")"; }
};

inline void validate(const FamilySpec& spec) {
  const auto& p = spec.param;
  auto fail = [&](const char* why) {
    throw std::domain_error(std::string(spec.info().name) + ": " + spec.info().param + " " + why);
  };
  switch (spec.family) {
    case Family::geronimus:
      if (p.norm() > 1) fail("must satisfy |alpha| <= 1");
      break;
    case Family::bernstein_szego:
      if (p.norm() >= 1) fail("must lie in the open unit disk");
      break;
    case Family::mass_point:
      if (!p.is_real() || sgn(p.re()) <= 0 || p.re() >= 1) fail("must lie in (0,1)");
      break;
    case Family::circular_jacobi:
      if (!p.is_real() || p.re() <= -1) fail("must be real and > -1");
      break;
    case Family::single_nontrivial:
      if (!p.is_real() || sgn(p.re()) <= 0 || p.re() > 1) fail("must lie in (0,1]");
      break;
    case Family::rogers_szego:
    case Family::al_salam_carlitz:
      if (!p.is_real() || sgn(p.re()) <= 0 || p.re() >= 1) fail("must lie in (0,1)");
      break;
  }
}

namespace detail {

// Exact square root of a nonnegative rational, if it has one.
inline bool rational_sqrt(const Rational& q, Rational& out) {
  mpz_class n = q.get_num(), d = q.get_den();
  if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  out = Rational(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
  out.canonicalize();
  return true;
}

// t = q^{1/2}: a root generator in symbolic mode, a double in numeric mode.
template <Scalar T>
T sqrt_of(const Rational& q) {
  if constexpr (ScalarTraits<T>::mode == Mode::symbolic) {
    Rational r;
    if (rational_sqrt(q, r)) return Expr(GaussianRational(r));
    return Expr::root(q);
  } else {
    return Complex(std::sqrt(q.get_d()), 0.0);
  }
}

template <Scalar T>
T ipow(const T& x, int k) {
  if (k < 0) return T(1) / ipow(x, -k);
  T out(1);
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

// u = 1/a + sqrt(1/a^2 - 1) for 0 < a < 1.
inline double snm_u(const Rational& a) {
  double inv = 1.0 / a.get_d();
  return inv + std::sqrt(inv * inv - 1.0);
}

inline double snm_sinh_ratio(double u, int k) { return std::pow(u, k) - std::pow(u, -k); }

template <Scalar T>
void require_numeric_snm(const FamilySpec& spec) {
  if (spec.family == Family::single_nontrivial && spec.param.re() != 1 &&
      ScalarTraits<T>::mode == Mode::symbolic)
    throw UnsupportedFamily("single-nontrivial with a < 1 is numeric-only (u is irrational)");
}

}  // namespace detail

inline Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

// (a)_k = a (a+1) ... (a+k-1)
template <Scalar T>
T rising_factorial(const T& a, int k) {
  if (k < 0) throw std::invalid_argument("rising_factorial: k < 0");
  T out(1);
  for (int i = 0; i < k; ++i) out = out * (a + T(i));
  return out;
}

inline Rational rising_factorial(const Rational& a, int k) {
  if (k < 0) throw std::invalid_argument("rising_factorial: k < 0");
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= a + i;
  return out;
}

// Gaussian binomial [n choose m]_q by the product formula.
template <Scalar T>
T q_binomial(int n, int m, const T& q) {
  if (m < 0 || n < 0 || m > n) return T(0);
  T num(1), den(1);
  for (int i = 0; i < m; ++i) {
    num = num * (T(1) - detail::ipow(q, n - i));
    den = den * (T(1) - detail::ipow(q, i + 1));
  }
  return num / den;
}

inline Rational q_binomial(int n, int m, const Rational& q) {
  if (m < 0 || n < 0 || m > n) return 0;
  Rational num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= 1 - pow(q, n - i);
    den *= 1 - pow(q, i + 1);
  }
  return num / den;
}

template <Scalar T>
VerblunskySequence<T> verblunsky_of(const FamilySpec& spec) {
  validate(spec);
  detail::require_numeric_snm<T>(spec);
  const GaussianRational p = spec.param;
  const std::string tag = spec.str();
  auto exact = [](const GaussianRational& v) { return scalar_from<T>(v); };
  switch (spec.family) {
    case Family::geronimus:
      return VerblunskySequence<T>(tag, [p, exact](int) { return exact(p); });
    case Family::bernstein_szego:
      return VerblunskySequence<T>(tag, [p, exact](int j) { return j == 0 ? exact(p) : T(0); });
    case Family::mass_point:
      return VerblunskySequence<T>(tag, [g = p.re(), exact](int j) {
        return exact(GaussianRational(Rational(g / (1 + j * g))));
      });
    case Family::circular_jacobi:
      return VerblunskySequence<T>(tag, [a = p.re(), exact](int j) {
        return exact(GaussianRational(Rational(-a / (j + a + 1))));
      });
    case Family::single_nontrivial:
      if (p.re() == 1)
        return VerblunskySequence<T>(tag, [exact](int j) { return exact(GaussianRational(Rational(-1, j + 2))); });
      if constexpr (ScalarTraits<T>::mode == Mode::numeric) {
        return VerblunskySequence<T>(tag, [u = detail::snm_u(p.re())](int j) {
          return Complex(-(u - 1.0 / u) / detail::snm_sinh_ratio(u, j + 2), 0.0);
        });
      }
      break;
    case Family::rogers_szego:
      return VerblunskySequence<T>(tag, [t = detail::sqrt_of<T>(p.re())](int j) {
        T v = detail::ipow(t, j + 1);
        return j % 2 == 0 ? v : -v;
      });
    case Family::al_salam_carlitz:
      return VerblunskySequence<T>(tag, [q = p.re(), exact](int j) {
        if (j % 2 == 0) return T(0);
        return exact(GaussianRational(Rational(1 - 2 * pow(q, (j - 1) / 2 + 1))));
      });
  }
  throw UnsupportedFamily(tag);
}

// mu_{n,m} = mu_{n,0,m} from the family's closed formula.
template <Scalar T>
T closed_moment_nm(const FamilySpec& spec, int n, int m) {
  validate(spec);
  detail::require_numeric_snm<T>(spec);
  if (n < 0 || m < 0) throw std::invalid_argument("closed_moment_nm: negative index");
  if (n <= m && spec.family != Family::geronimus && spec.family != Family::al_salam_carlitz)
    return n == m ? T(1) : T(0);
  const GaussianRational& p = spec.param;
  switch (spec.family) {
    case Family::bernstein_szego:
      return detail::ipow(scalar_from<T>(p), n - m);
    case Family::mass_point:
      return scalar_from<T>(GaussianRational(Rational(p.re() / (1 + m * p.re()))));
    case Family::circular_jacobi: {
      const Rational a = p.re();
      Rational v = binomial(n, m) * rising_factorial(Rational(-a), n - m) /
                   rising_factorial(Rational(-a - n), n - m);
      if ((n - m) % 2) v = -v;
      return scalar_from<T>(GaussianRational(v));
    }
    case Family::single_nontrivial: {
      if (m != n - 1) return T(0);
      if (p.re() == 1) return scalar_from<T>(GaussianRational(Rational(-n, n + 1)));
      if constexpr (ScalarTraits<T>::mode == Mode::numeric) {
        double u = detail::snm_u(p.re());
        return Complex(-detail::snm_sinh_ratio(u, n) / detail::snm_sinh_ratio(u, n + 1), 0.0);
      }
      break;
    }
    case Family::rogers_szego: {
      const Rational q = p.re();
      T t = detail::sqrt_of<T>(q);
      return scalar_from<T>(GaussianRational(q_binomial(n, m, q))) * detail::ipow(t, (n - m) * (n - m));
    }
    case Family::geronimus:
      throw UnsupportedFamily("geronimus has no closed form for mu_{n,m}; use geronimus_gf_moment");
    case Family::al_salam_carlitz:
      throw UnsupportedFamily("al-salam-carlitz has no closed form");
  }
  throw UnsupportedFamily(spec.str());
}

template <Scalar T>
T closed_moment_nrs(const FamilySpec& spec, int n, int r, int s) {
  validate(spec);
  detail::require_numeric_snm<T>(spec);
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("closed_moment_nrs: negative index");
  const GaussianRational& p = spec.param;
  switch (spec.family) {
    case Family::bernstein_szego:
      if (r == 0) return closed_moment_nm<T>(spec, n, s);
      return s == n + r ? T(1) : T(0);
    case Family::mass_point: {
      if (r == 0) return closed_moment_nm<T>(spec, n, s);
      const Rational g = p.re();
      if (s >= n + r) return s == n + r ? T(1) : T(0);
      Rational den = (1 + (r - 1) * g) * (1 + s * g);
      Rational v = s > n - 1 ? Rational(-n * g * g / den) : Rational((1 - g) * g / den);
      return scalar_from<T>(GaussianRational(v));
    }
    case Family::circular_jacobi: {
      const Rational a = p.re();
      Rational total = 0;
      for (int i = 0; i <= r; ++i) {
        const int k = n + i - s;
        if (k < 0) continue;
        Rational term = binomial(n + i, s) * binomial(r, i) * rising_factorial(a, i + 1) *
                        rising_factorial(Rational(-a), k) /
                        (rising_factorial(Rational(a + r - i), i + 1) * rising_factorial(Rational(-a - n - i), k));
        total += k % 2 ? Rational(-term) : term;
      }
      return scalar_from<T>(GaussianRational(total));
    }
    case Family::single_nontrivial: {
      if (s == n + r) return T(1);
      if (s < n - 1 || s > n + r) return T(0);
      if (p.re() == 1) return scalar_from<T>(GaussianRational(Rational(-n, (r + 1) * (s + 2))));
      if constexpr (ScalarTraits<T>::mode == Mode::numeric) {
        double u = detail::snm_u(p.re());
        using detail::snm_sinh_ratio;
        return Complex(-snm_sinh_ratio(u, n) * snm_sinh_ratio(u, 1) /
                           (snm_sinh_ratio(u, s + 2) * snm_sinh_ratio(u, r + 1)),
                       0.0);
      }
      break;
    }
    case Family::rogers_szego: {
      const Rational q = p.re();
      T t = detail::sqrt_of<T>(q);
      T total(0);
      for (int j = 0; j <= r; ++j) {
        const int k = n + j - s;
        if (k < 0) continue;
        Rational c = q_binomial(r, j, q) * q_binomial(n + j, s, q);
        if ((r - j) % 2) c = -c;
        total += scalar_from<T>(GaussianRational(c)) * detail::ipow(t, (r - j) + k * k);
      }
      return total;
    }
    case Family::geronimus:
    case Family::al_salam_carlitz:
      throw UnsupportedFamily(std::string(spec.info().name) + " has no closed form for mu_{n,r,s}");
  }
  throw UnsupportedFamily(spec.str());
}

// Coefficients of f and g from
//   f = 1 - z f + rho z f^2,   g = 1 + z g / ab - (rho / ab) z f g.
template <Scalar T>
struct GeronimusSeries {
  std::vector<T> f, g;
};

template <Scalar T>
GeronimusSeries<T> geronimus_series(const T& alpha, int order) {
  if (is_zero(alpha)) throw std::domain_error("geronimus_series: alpha = 0");
  const T ab = conjugate(alpha);
  const T rho = T(1) - alpha * ab;
  GeronimusSeries<T> out;
  out.f.push_back(T(1));
  out.g.push_back(T(1));
  for (int k = 1; k <= order; ++k) {
    T ff(0), fg(0);
    for (int i = 0; i <= k - 1; ++i) {
      ff += out.f[i] * out.f[k - 1 - i];
      fg += out.f[i] * out.g[k - 1 - i];
    }
    out.f.push_back(-out.f[k - 1] + rho * ff);
    out.g.push_back((out.g[k - 1] - rho * fg) / ab);
  }
  return out;
}

// [z^n] g(z) (z f(z))^m
template <Scalar T>
T geronimus_gf_moment(const T& alpha, int n, int m, int order = -1) {
  if (n < 0 || m < 0) throw std::invalid_argument("geronimus_gf_moment: negative index");
  if (is_zero(alpha)) return n == m ? T(1) : T(0);
  if (order < n) order = n;
  if (m > n) return T(0);
  auto series = geronimus_series(alpha, order);
  std::vector<T> acc(series.g.begin(), series.g.begin() + n + 1);
  for (int step = 0; step < m; ++step) {
    std::vector<T> next(n + 1, T(0));
    for (int i = 0; i < n; ++i) {
      if (is_zero(acc[i])) continue;
      for (int j = 0; i + 1 + j <= n; ++j) next[i + 1 + j] += acc[i] * series.f[j];
    }
    acc = std::move(next);
  }
  return acc[n];
}

// Coefficient of z^i in Phi_n for constant alpha.
template <Scalar T>
T geronimus_phi_coeff(const T& alpha, int n, int i) {
  if (i < 0 || i > n) return T(0);
  const T ab = conjugate(alpha);
  const T rho = T(1) - alpha * ab;
  std::vector<std::vector<T>> p(n + 1);
  for (int k = 0; k <= n; ++k) {
    p[k].assign(k + 1, T(0));
    for (int j = 0; j <= k; ++j) {
      if (j == k) p[k][j] = T(1);
      else if (j == 0) p[k][j] = -ab;
      else {
        T v = p[k - 1][j - 1] + p[k - 1][j];
        if (k >= 2 && j - 1 <= k - 2) v -= rho * p[k - 2][j - 1];
        p[k][j] = v;
      }
    }
  }
  return p[n][i];
}

// The printed summation form for p_{n,i}, with C(-1,-1) = 1.
inline GaussianRational geronimus_phi_coeff_closed(const GaussianRational& alpha, int n, int i) {
  auto C = [](int a, int b) -> Rational {
    if (a == -1 && b == -1) return 1;
    return binomial(a, b);
  };
  const Rational norm = alpha.norm();
  GaussianRational total;
  for (int j = 0; j <= n - i; ++j) {
    GaussianRational left = GaussianRational(C(i, j)) - GaussianRational(C(i, j - 1)) / alpha;
    total += left * GaussianRational(C(n - i - 1, j - 1) * pow(norm, j));
  }
  return total;
}

// mu_{n,r,s} = sum_i conj(p_{r,i}) mu_{n+i,s}.
template <Scalar T, class MomentNM>
T nrs_from_nm(const VerblunskySequence<T>& vs, MomentNM&& mu_nm, int n, int r, int s) {
  const auto phi_r = phi(vs, r).phi;
  T total(0);
  for (int i = 0; i <= r; ++i) {
    T c = phi_r.coeff(i);
    if (is_zero(c)) continue;
    total += conjugate(c) * mu_nm(n + i, s);
  }
  return total;
}

template <Scalar T>
T geronimus_moment_nrs(const T& alpha, int n, int r, int s) {
  if (is_zero(alpha)) return n + r == s ? T(1) : T(0);
  T total(0);
  for (int i = 0; i <= r; ++i)
    total += conjugate(geronimus_phi_coeff(alpha, r, i)) * geronimus_gf_moment(alpha, n + i, s);
  return total;
}

}  // namespace opuc
