#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opuc/laurent.hpp"
#include "opuc/scalar.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc {

template <Scalar T>
struct PhiPair {
  int n = 0;
  LaurentPoly<T> phi;       // monic, degree n
  LaurentPoly<T> phi_star;  // reverse(phi, n)
};

// One Szegő step: (Phi_n, Phi_n*) -> (Phi_{n+1}, Phi_{n+1}*).
template <Scalar T>
PhiPair<T> szego_step(const VerblunskySequence<T>& vs, const PhiPair<T>& p) {
  const int n = p.n;
  T a = vs.alpha(n), ab = vs.alpha_bar(n);
  PhiPair<T> out;
  out.n = n + 1;
  out.phi = p.phi.shifted(1) - ab * p.phi_star;
  out.phi_star = p.phi_star - a * p.phi.shifted(1);
  return out;
}

template <Scalar T>
T kappa(const VerblunskySequence<T>& vs, int n) {
  if (n < 0) throw std::invalid_argument("kappa: n < 0");
  T out(1);
  for (int i = 0; i < n; ++i) out = out * vs.rho(i);
  return out;
}

// Lazily grown store of Phi_n and of the moments mu_k = L(z^{-k}), k in Z.
// Readers share a lock; growth takes the exclusive lock.
template <Scalar T>
class MomentTable {
 public:
  explicit MomentTable(VerblunskySequence<T> vs) : vs_(std::move(vs)), state_(std::make_shared<State>()) {}

  const VerblunskySequence<T>& sequence() const { return vs_; }

  PhiPair<T> phi(int n) const {
    if (n < 0) throw std::invalid_argument("phi: n < 0");
    ensure(n);
    std::shared_lock lock(state_->mutex);
    return state_->phis[n];
  }

  // mu_k = L(z^{-k}); negative k gives the conjugate-side moments.
  T moment(int k) const {
    int need = k < 0 ? -k : k;
    ensure(need);
    std::shared_lock lock(state_->mutex);
    return k >= 0 ? state_->mu_pos[k] : state_->mu_neg[-k];
  }

  T kappa(int n) const { return opuc::kappa(vs_, n); }

  // Make Phi_0..Phi_N and mu_{-N}..mu_N available.
  void ensure(int N) const {
    {
      std::shared_lock lock(state_->mutex);
      if (static_cast<int>(state_->phis.size()) > N) return;
    }
    std::unique_lock lock(state_->mutex);
    auto& phis = state_->phis;
    auto& pos = state_->mu_pos;
    auto& neg = state_->mu_neg;
    if (phis.empty()) {
      phis.push_back({0, LaurentPoly<T>(T(1)), LaurentPoly<T>(T(1))});
      pos.push_back(T(1));
      neg.push_back(T(1));
    }
    while (static_cast<int>(phis.size()) <= N) {
      phis.push_back(szego_step(vs_, phis.back()));
      const int i = static_cast<int>(phis.size()) - 1;
      const auto& c = phis.back().phi;
      // sum_j c_{i,j} mu_{-j} = 0 and sum_j conj(c_{i,j}) mu_j = 0, with c_{i,i} = 1.
      T accn(0), accp(0);
      for (const auto& [j, cij] : c.coeffs()) {
        if (j == i) continue;
        accn += cij * neg[j];
        accp += conjugate(cij) * pos[j];
      }
      neg.push_back(-accn);
      pos.push_back(-accp);
    }
  }

 private:
  struct State {
    std::shared_mutex mutex;
    std::vector<PhiPair<T>> phis;
    std::vector<T> mu_pos, mu_neg;
  };
  VerblunskySequence<T> vs_;
  std::shared_ptr<State> state_;
};

template <Scalar T>
PhiPair<T> phi(const VerblunskySequence<T>& vs, int n) {
  if (n < 0) throw std::invalid_argument("phi: n < 0");
  PhiPair<T> p{0, LaurentPoly<T>(T(1)), LaurentPoly<T>(T(1))};
  while (p.n < n) p = szego_step(vs, p);
  return p;
}

template <Scalar T>
struct MomentSequences {
  std::vector<T> positive;  // mu_0..mu_N
  std::vector<T> negative;  // mu_0, mu_{-1}..mu_{-N}
};

template <Scalar T>
MomentSequences<T> moments_from_phis(const VerblunskySequence<T>& vs, int N) {
  MomentTable<T> table(vs);
  MomentSequences<T> out;
  for (int k = 0; k <= N; ++k) {
    out.positive.push_back(table.moment(k));
    out.negative.push_back(table.moment(-k));
  }
  return out;
}

template <Scalar T>
T functional_eval(const MomentTable<T>& table, const LaurentPoly<T>& f) {
  T out(0);
  for (const auto& [k, c] : f.coeffs()) out += c * table.moment(-k);
  return out;
}

template <Scalar T>
T inner_product(const MomentTable<T>& table, const LaurentPoly<T>& f, const LaurentPoly<T>& g) {
  return functional_eval(table, f * bar_inverse_substitute(g));
}

// <Phi_s, z^n Phi_r> / <Phi_s, Phi_s>, straight from the definition.
template <Scalar T>
T moment_oracle(const MomentTable<T>& table, int n, int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("moment_oracle: r, s must be >= 0");
  auto ps = table.phi(s).phi;
  auto pr = table.phi(r).phi;
  T num = inner_product(table, ps, pr.shifted(n));
  const auto& vs = table.sequence();
  for (int j = 0; j < s; ++j) num = num / vs.rho(j);
  return num;
}

template <Scalar T>
T moment_oracle(const VerblunskySequence<T>& vs, int n, int r, int s) {
  return moment_oracle(MomentTable<T>(vs), n, r, s);
}

}  // namespace opuc
