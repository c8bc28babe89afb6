#pragma once

#include <stdexcept>
#include <vector>

#include "opuc/errors.hpp"
#include "opuc/functional.hpp"
#include "opuc/laurent.hpp"
#include "opuc/matrices.hpp"
#include "opuc/paths.hpp"
#include "opuc/scalar.hpp"

namespace opuc {

// f = sum_k c_k Phi_k, by peeling off the top degree (Phi_k is monic).
template <Scalar T>
std::vector<T> expand_in_phi_basis(const MomentTable<T>& table, const LaurentPoly<T>& f) {
  if (f.is_zero()) return {};
  if (f.valuation() < 0) throw std::invalid_argument("expand_in_phi_basis: f is not a polynomial");
  const int d = f.degree();
  std::vector<T> out(d + 1, T(0));
  LaurentPoly<T> rest = f;
  for (int k = d; k >= 0; --k) {
    T c = rest.coeff(k);
    if (is_zero(c)) continue;
    out[k] = c;
    rest -= c * table.phi(k).phi;
  }
  return out;
}

// f = sum_{s<=N} c_s Phi_s*. Phi_s* has constant term 1 and z^s-coefficient
// -alpha_{s-1}, so the system is triangular from the top.
template <Scalar T>
std::vector<T> expand_in_phistar_basis(const MomentTable<T>& table, const LaurentPoly<T>& f, int N) {
  const auto& vs = table.sequence();
  for (int i = 0; i < N; ++i)
    if (vs.is_zero_at(i)) throw ZeroVerblunsky(i);
  if (!f.is_zero() && (f.valuation() < 0 || f.degree() > N))
    throw std::invalid_argument("expand_in_phistar_basis: f must be a polynomial of degree <= N");
  std::vector<T> out(N + 1, T(0));
  LaurentPoly<T> rest = f;
  for (int s = N; s >= 0; --s) {
    T c = rest.coeff(s);
    if (is_zero(c)) continue;
    out[s] = c / (-vs.alpha(s - 1));
    rest -= out[s] * table.phi(s).phi_star;
  }
  if (!rest.is_zero()) throw std::logic_error("expand_in_phistar_basis: nonzero remainder");
  return out;
}

// nu_{n,r,s} = conj(b_{n,r,s}):  nu_{n,r+1,s} = nu_{n,r,s} - ab_r mu_{n+1,r,s}.
template <Scalar T>
T nu(const VerblunskySequence<T>& vs, int n, int r, int s) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("nu: negative parameter");
  T out = moment_lukasiewicz(vs, n, 0, s);
  for (int k = 0; k < r; ++k) out -= vs.alpha_bar(k) * moment_lukasiewicz(vs, n + 1, k, s);
  return out;
}

// alpha_r^{-1} times the Łukasiewicz paths (-1,r)->(n,s) whose first step is not up.
template <Scalar T>
T nu_paths(const VerblunskySequence<T>& vs, int n, int r, int s) {
  if (vs.is_zero_at(r)) throw ZeroVerblunsky(r);
  T total(0);
  for (int k = 0; k <= r; ++k)
    total += lukasiewicz_weight(vs, r, -k) * moment_lukasiewicz(vs, n, r - k, s);
  return total / vs.alpha(r);
}

// nu_{-n,r,s} = ab_r (kappa_r / kappa_s) * Schröder paths (0,s)->(n-1,r), all
// starts allowed, under the ratio-inverted weights.
template <Scalar T>
T nu_negative(const VerblunskySequence<T>& vs, int n, int r, int s,
              SchroderBounds bounds = {true, true},
              SchroderWeights kind = SchroderWeights::ratio_inverted) {
  if (n < 1 || r < 0 || s < 0) throw std::invalid_argument("nu_negative: needs n >= 1");
  detail::require_nonzero_alphas(vs, n + s);
  if (vs.is_zero_at(r)) throw ZeroVerblunsky(r);
  T sum = schroder_sum(vs, n - 1, s, r, bounds, kind);
  T out = vs.alpha_bar(r) * sum * kappa(vs, r);
  for (int j = 0; j < s; ++j) out = out / vs.rho(j);
  return out;
}

// <Phi_s, z^n Phi_r*> / <Phi_s, Phi_s> for any integer n.
template <Scalar T>
T nu_oracle(const MomentTable<T>& table, int n, int r, int s) {
  auto num = inner_product(table, table.phi(s).phi, table.phi(r).phi_star.shifted(n));
  for (int j = 0; j < s; ++j) num = num / table.sequence().rho(j);
  return num;
}

namespace detail {

template <Scalar T>
void require_linearization_alphas(const VerblunskySequence<T>& vs, int n, int r) {
  for (int i = 0; i <= n + r; ++i)
    if (vs.is_zero_at(i)) throw ZeroVerblunsky(i);
}

}  // namespace detail

// eta_{n,r,s} = conj(c_{n,r,s}) = rho_s mu_{n,r,s+1} / ab_s - mu_{n,r,s} / ab_{s-1}.
template <Scalar T>
T eta(const VerblunskySequence<T>& vs, int n, int r, int s) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("eta: negative parameter");
  detail::require_linearization_alphas(vs, n, r);
  if (s > n + r) return T(0);
  T out = -moment_lukasiewicz(vs, n, r, s) / vs.alpha_bar(s - 1);
  T next = moment_lukasiewicz(vs, n, r, s + 1);
  if (!is_zero(next)) out += vs.rho(s) * next / vs.alpha_bar(s);
  return out;
}

// -(1/ab_{s-1}) * Schröder paths in the default set that do not end vertically.
template <Scalar T>
T eta_paths(const VerblunskySequence<T>& vs, int n, int r, int s) {
  if (n < 1) throw std::invalid_argument("eta_paths: needs n >= 1");
  detail::require_linearization_alphas(vs, n, r);
  return -schroder_sum(vs, n, r, s, SchroderBounds{false, false}) / vs.alpha_bar(s - 1);
}

// theta_{n,r,s} = conj(d_{n,r,s}) = rho_s nu_{n,r,s+1} / ab_s - nu_{n,r,s} / ab_{s-1}.
template <Scalar T>
T theta(const VerblunskySequence<T>& vs, int n, int r, int s) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("theta: negative parameter");
  detail::require_linearization_alphas(vs, n, r);
  if (s > n + r) return T(0);
  T out = -nu(vs, n, r, s) / vs.alpha_bar(s - 1);
  T next = nu(vs, n, r, s + 1);
  if (!is_zero(next)) out += vs.rho(s) * next / vs.alpha_bar(s);
  return out;
}

// (ab_{r-1} / ab_{s-1}) * Schröder paths (0,r)->(n,s) that may start but not
// end with a vertical step.
template <Scalar T>
T theta_paths(const VerblunskySequence<T>& vs, int n, int r, int s, SchroderBounds bounds = {true, false}) {
  if (n < 1) throw std::invalid_argument("theta_paths: needs n >= 1");
  detail::require_linearization_alphas(vs, n, r);
  T sum = schroder_sum(vs, n, r, s, bounds);
  return vs.alpha_bar(r - 1) * sum / vs.alpha_bar(s - 1);
}

// -ab_{r-1} * Schröder paths (0,r)->(n,s), initial vertical steps allowed.
template <Scalar T>
T nu_schroder(const VerblunskySequence<T>& vs, int n, int r, int s) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("nu_schroder: negative parameter");
  detail::require_nonzero_alphas(vs, n + r);
  return -vs.alpha_bar(r - 1) * schroder_sum(vs, n, r, s, SchroderBounds{true, true});
}

// Bidiagonal inverse of (nu_{0,i,j}): tau_{j,j} = -1/ab_{j-1}, tau_{j+1,j} = rho_j/ab_j.
template <Scalar T>
Matrix<T> tau_matrix(const VerblunskySequence<T>& vs, int dim) {
  Matrix<T> tau(dim);
  for (int j = 0; j < dim; ++j) {
    if (j > 0 && vs.is_zero_at(j - 1)) throw ZeroVerblunsky(j - 1);
    tau(j, j) = -T(1) / vs.alpha_bar(j - 1);
    if (j + 1 < dim) {
      if (vs.is_zero_at(j)) throw ZeroVerblunsky(j);
      tau(j + 1, j) = vs.rho(j) / vs.alpha_bar(j);
    }
  }
  return tau;
}

template <Scalar T>
Matrix<T> nu0_matrix(const VerblunskySequence<T>& vs, int dim) {
  Matrix<T> m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = nu(vs, 0, i, j);
  return m;
}

}  // namespace opuc
