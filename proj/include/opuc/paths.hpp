#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opuc/errors.hpp"
#include "opuc/scalar.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc {

enum class PathModel { lukasiewicz, gmotzkin, schroder };

inline const char* to_string(PathModel m) {
  switch (m) {
    case PathModel::lukasiewicz: return "lukasiewicz";
    case PathModel::gmotzkin: return "gmotzkin";
    case PathModel::schroder: return "schroder";
  }
  return "?";
}

struct Step {
  int dx = 1;
  int dy = 0;
  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

inline constexpr Step kUp{1, 1};
inline constexpr Step kFlat{1, 0};
inline constexpr Step kVertical{0, -1};
inline constexpr Step down_by(int k) { return {1, -k}; }

struct LatticePath {
  PathModel model = PathModel::lukasiewicz;
  int x0 = 0;
  int y0 = 0;
  std::vector<Step> steps;

  int end_x() const {
    int x = x0;
    for (const Step& s : steps) x += s.dx;
    return x;
  }
  int end_y() const {
    int y = y0;
    for (const Step& s : steps) y += s.dy;
    return y;
  }
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    if (auto c = a.model <=> b.model; c != 0) return c;
    if (auto c = a.x0 <=> b.x0; c != 0) return c;
    if (auto c = a.y0 <=> b.y0; c != 0) return c;
    return a.steps <=> b.steps;
  }
};

// "U H D2 V"; Schröder's vertical step prints as V, unit diagonal down as D.
inline std::string render(const LatticePath& p) {
  if (p.steps.empty()) return "(empty)";
  std::string out;
  for (const Step& s : p.steps) {
    if (!out.empty()) out += ' ';
    if (s.dx == 0) out += 'V';
    else if (s.dy == 1) out += 'U';
    else if (s.dy == 0) out += 'H';
    else if (s.dy == -1) out += 'D';
    else out += "D" + std::to_string(-s.dy);
  }
  return out;
}

// Schröder boundary conditions. The default is the set of paths that do not
// start with a vertical step; the linearization coefficients use the others.
struct SchroderBounds {
  bool initial_vertical = false;
  bool terminal_vertical = true;
};

// standard: H_b = -ab_{b-1}/ab_b, V_b = (ab_{b-2}/ab_{b-1}) rho_{b-1}.
// ratio_inverted: H_b = -ab_b/ab_{b-1}, V_b = (ab_b/ab_{b-1}) rho_{b-1}, the
// weights read off the three-term recurrence directly (type R_I moments).
enum class SchroderWeights { standard, ratio_inverted };

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

namespace detail {

inline int parity(int v) { return ((v % 2) + 2) % 2; }

template <Scalar T>
T rho_product(const VerblunskySequence<T>& vs, int from, int to_exclusive) {
  T out(1);
  for (int j = from; j < to_exclusive; ++j) out = out * vs.rho(j);
  return out;
}

template <Scalar T>
void require_nonzero_alphas(const VerblunskySequence<T>& vs, int count) {
  for (int j = 0; j < count; ++j)
    if (vs.is_zero_at(j)) throw ZeroVerblunsky(j);
}

}  // namespace detail

// ---- step weights ---------------------------------------------------------

// Łukasiewicz step from height b with rise dy (dy <= 1).
template <Scalar T>
T lukasiewicz_weight(const VerblunskySequence<T>& vs, int b, int dy) {
  if (dy == 1) return T(1);
  const int k = -dy;
  if (k < 0 || k > b) throw std::invalid_argument("invalid Łukasiewicz step");
  return -(vs.alpha(b) * vs.alpha_bar(b - k - 1)) * detail::rho_product(vs, b - k, b);
}

// Gentle Motzkin step starting at (x, b).
template <Scalar T>
T gmotzkin_weight(const VerblunskySequence<T>& vs, int x, int b, int dy) {
  const bool even = detail::parity(x + b) == 0;
  if (dy == 1) {
    if (!even) throw std::invalid_argument("gentle Motzkin up-step at odd parity");
    return T(1);
  }
  if (dy == -1) {
    if (even) throw std::invalid_argument("gentle Motzkin down-step at even parity");
    return vs.rho(b - 1);
  }
  return even ? vs.alpha(b) : -vs.alpha_bar(b - 1);
}

// Schröder step at height b (for V, b is the starting height).
template <Scalar T>
T schroder_weight(const VerblunskySequence<T>& vs, int b, Step s,
                  SchroderWeights kind = SchroderWeights::standard) {
  auto nonzero_bar = [&](int j) {
    if (j >= 0 && vs.is_zero_at(j)) throw ZeroVerblunsky(j);
    return vs.alpha_bar(j);
  };
  if (s == kUp) return T(1);
  if (kind == SchroderWeights::ratio_inverted) {
    if (s == kFlat) return -vs.alpha_bar(b) / nonzero_bar(b - 1);
    if (s == kVertical) return vs.alpha_bar(b) / nonzero_bar(b - 1) * vs.rho(b - 1);
  } else {
    if (s == kFlat) return -vs.alpha_bar(b - 1) / nonzero_bar(b);
    if (s == kVertical) return vs.alpha_bar(b - 2) / nonzero_bar(b - 1) * vs.rho(b - 1);
  }
  throw std::invalid_argument("invalid Schröder step");
}

template <Scalar T>
T path_weight(const LatticePath& p, const VerblunskySequence<T>& vs) {
  T w(1);
  int x = p.x0, y = p.y0;
  for (const Step& s : p.steps) {
    switch (p.model) {
      case PathModel::lukasiewicz: w = w * lukasiewicz_weight(vs, y, s.dy); break;
      case PathModel::gmotzkin: w = w * gmotzkin_weight(vs, x, y, s.dy); break;
      case PathModel::schroder: w = w * schroder_weight(vs, y, s); break;
    }
    x += s.dx;
    y += s.dy;
  }
  return w;
}

// ---- enumeration ----------------------------------------------------------

namespace detail {

class PathCollector {
 public:
  PathCollector(PathModel model, int x0, int y0, std::size_t cap)
      : cap_(cap) {
    current_.model = model;
    current_.x0 = x0;
    current_.y0 = y0;
  }
  void push(Step s) { current_.steps.push_back(s); }
  void pop() { current_.steps.pop_back(); }
  void emit() {
    if (out_.size() >= cap_) throw CapExceeded(cap_);
    out_.push_back(current_);
  }
  const LatticePath& current() const { return current_; }
  std::vector<LatticePath> take() { return std::move(out_); }

 private:
  std::size_t cap_;
  LatticePath current_;
  std::vector<LatticePath> out_;
};

inline void enum_lukasiewicz(PathCollector& c, int left, int b, int s) {
  if (left == 0) {
    if (b == s) c.emit();
    return;
  }
  if (b + left < s) return;
  c.push(kUp);
  enum_lukasiewicz(c, left - 1, b + 1, s);
  c.pop();
  for (int k = 0; k <= b; ++k) {
    c.push(down_by(k));
    enum_lukasiewicz(c, left - 1, b - k, s);
    c.pop();
  }
}

inline void enum_gmotzkin(PathCollector& c, int x, int x_end, int b, int s) {
  const int left = x_end - x;
  if (left == 0) {
    if (b == s) c.emit();
    return;
  }
  if (b - s > left || s - b > left) return;
  const bool even = parity(x + b) == 0;
  if (even) {
    c.push(kUp);
    enum_gmotzkin(c, x + 1, x_end, b + 1, s);
    c.pop();
  } else if (b > 0) {
    c.push(down_by(1));
    enum_gmotzkin(c, x + 1, x_end, b - 1, s);
    c.pop();
  }
  c.push(kFlat);
  enum_gmotzkin(c, x + 1, x_end, b, s);
  c.pop();
}

inline void enum_schroder(PathCollector& c, int col, int n, int b, int s, SchroderBounds bounds) {
  const auto& steps = c.current().steps;
  const bool at_start = steps.empty();
  const bool after_vertical = !at_start && steps.back() == kVertical;
  if (b + (n - col) < s) return;
  if (col == n && b == s && (bounds.terminal_vertical || !after_vertical)) c.emit();
  if (col < n) {
    c.push(kUp);
    enum_schroder(c, col + 1, n, b + 1, s, bounds);
    c.pop();
    c.push(kFlat);
    enum_schroder(c, col + 1, n, b, s, bounds);
    c.pop();
  }
  if (b > 0 && (!at_start || bounds.initial_vertical)) {
    c.push(kVertical);
    enum_schroder(c, col, n, b - 1, s, bounds);
    c.pop();
  }
}

}  // namespace detail

// All paths of the model with the endpoints attached to (n, r, s):
// Łukasiewicz and Schröder (0,r)->(n,s), gentle Motzkin (-r,r)->(2n-s,s).
inline std::vector<LatticePath> enumerate(PathModel model, int n, int r, int s,
                                          std::size_t cap = kDefaultEnumerationCap,
                                          SchroderBounds bounds = {}) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("enumerate: negative parameter");
  switch (model) {
    case PathModel::lukasiewicz: {
      detail::PathCollector c(model, 0, r, cap);
      detail::enum_lukasiewicz(c, n, r, s);
      return c.take();
    }
    case PathModel::gmotzkin: {
      detail::PathCollector c(model, -r, r, cap);
      if (2 * n - s >= -r) detail::enum_gmotzkin(c, -r, 2 * n - s, r, s);
      return c.take();
    }
    case PathModel::schroder: {
      detail::PathCollector c(model, 0, r, cap);
      detail::enum_schroder(c, 0, n, r, s, bounds);
      return c.take();
    }
  }
  return {};
}

// ---- DP evaluators --------------------------------------------------------

template <Scalar T>
T moment_lukasiewicz(const VerblunskySequence<T>& vs, int n, int r, int s) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("moment_lukasiewicz: negative parameter");
  const int top = n + r;
  if (s > top) return T(0);
  std::vector<std::vector<T>> w(top + 1);
  for (int b = 0; b <= top; ++b)
    for (int k = 0; k <= b; ++k) w[b].push_back(lukasiewicz_weight(vs, b, -k));

  std::vector<T> cur(top + 1, T(0));
  cur[r] = T(1);
  for (int step = 0; step < n; ++step) {
    std::vector<T> next(top + 1, T(0));
    for (int b = 0; b <= top; ++b) {
      if (is_zero(cur[b])) continue;
      if (b < top) next[b + 1] += cur[b];
      for (int k = 0; k <= b; ++k) next[b - k] += cur[b] * w[b][k];
    }
    cur = std::move(next);
  }
  return cur[s];
}

template <Scalar T>
T moment_gmotzkin(const VerblunskySequence<T>& vs, int n, int r, int s) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("moment_gmotzkin: negative parameter");
  const int x_end = 2 * n - s;
  if (x_end < -r) return T(0);
  const int top = n + r;
  if (s > top) return T(0);
  std::vector<T> cur(top + 1, T(0));
  cur[r] = T(1);
  for (int x = -r; x < x_end; ++x) {
    std::vector<T> next(top + 1, T(0));
    for (int b = 0; b <= top; ++b) {
      if (is_zero(cur[b])) continue;
      const bool even = detail::parity(x + b) == 0;
      if (even) {
        if (b < top) next[b + 1] += cur[b];
        next[b] += cur[b] * vs.alpha(b);
      } else {
        if (b > 0) next[b - 1] += cur[b] * vs.rho(b - 1);
        next[b] = next[b] - cur[b] * vs.alpha_bar(b - 1);
      }
    }
    cur = std::move(next);
  }
  return cur[s];
}

// Weight sum of Schröder paths (0,r)->(n,s) under the given boundary rules.
template <Scalar T>
T schroder_sum(const VerblunskySequence<T>& vs, int n, int r, int s, SchroderBounds bounds = {},
               SchroderWeights kind = SchroderWeights::standard) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("schroder_sum: negative parameter");
  if (n == 0 && !bounds.initial_vertical) return r == s ? T(1) : T(0);
  detail::require_nonzero_alphas(vs, n + r);
  const int top = n + r;
  if (s > top) return T(0);
  std::vector<T> flat(top + 1), vert(top + 1, T(0));
  for (int b = 0; b <= top; ++b) {
    if (b < top) flat[b] = schroder_weight(vs, b, kFlat, kind);
    if (b > 0) vert[b] = schroder_weight(vs, b, kVertical, kind);
  }
  auto cascade = [&](std::vector<T>& col) {
    for (int b = top; b > 0; --b)
      if (!is_zero(col[b])) col[b - 1] += col[b] * vert[b];
  };

  std::vector<T> cur(top + 1, T(0));
  cur[r] = T(1);
  if (bounds.initial_vertical && n > 0) cascade(cur);
  for (int col = 1; col <= n; ++col) {
    std::vector<T> next(top + 1, T(0));
    for (int b = 0; b < top; ++b) {
      if (is_zero(cur[b])) continue;
      next[b + 1] += cur[b];
      next[b] += cur[b] * flat[b];
    }
    cur = std::move(next);
    if (col < n || bounds.terminal_vertical) cascade(cur);
  }
  if (n == 0 && bounds.initial_vertical && bounds.terminal_vertical) cascade(cur);
  return cur[s];
}

template <Scalar T>
T moment_schroder(const VerblunskySequence<T>& vs, int n, int r, int s) {
  return schroder_sum(vs, n, r, s, SchroderBounds{});
}

// mu_{-n,r,s}: paths (0,s) -> (-n,r) on the mirrored step set.
template <Scalar T>
T moment_negative(const VerblunskySequence<T>& vs, int n, int r, int s) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("moment_negative: negative parameter");
  const int top = n + s;
  if (r > top) return T(0);
  std::vector<T> cur(top + 1, T(0));
  cur[s] = T(1);
  for (int step = 0; step < n; ++step) {
    std::vector<T> next(top + 1, T(0));
    for (int b = 0; b <= top; ++b) {
      if (is_zero(cur[b])) continue;
      if (b < top) next[b + 1] += cur[b] * vs.rho(b);
      for (int k = 0; k <= b; ++k)
        next[b - k] = next[b - k] - cur[b] * vs.alpha_bar(b) * vs.alpha(b - k - 1);
    }
    cur = std::move(next);
  }
  return cur[r];
}

// ---- correspondences --------------------------------------------------------

// Łukasiewicz (0,r)->(n,s) to gentle Motzkin (-r,r)->(2n-s,s):
// U -> U, k-down -> H D^k H.
inline LatticePath bijection_pi(const LatticePath& p) {
  if (p.model != PathModel::lukasiewicz) throw std::invalid_argument("bijection_pi expects a Łukasiewicz path");
  LatticePath out{PathModel::gmotzkin, -p.y0, p.y0, {}};
  for (const Step& s : p.steps) {
    if (s.dy == 1) {
      out.steps.push_back(kUp);
      continue;
    }
    out.steps.push_back(kFlat);
    for (int i = 0; i < -s.dy; ++i) out.steps.push_back(down_by(1));
    out.steps.push_back(kFlat);
  }
  return out;
}

inline LatticePath bijection_pi_inverse(const LatticePath& p) {
  if (p.model != PathModel::gmotzkin) throw std::invalid_argument("expected a gentle Motzkin path");
  LatticePath out{PathModel::lukasiewicz, 0, p.y0, {}};
  std::size_t i = 0;
  while (i < p.steps.size()) {
    if (p.steps[i] == kUp) {
      out.steps.push_back(kUp);
      ++i;
      continue;
    }
    if (!(p.steps[i] == kFlat)) throw std::invalid_argument("not a gentle Motzkin path");
    int k = 0;
    ++i;
    while (i < p.steps.size() && p.steps[i] == down_by(1)) ++k, ++i;
    if (i == p.steps.size() || !(p.steps[i] == kFlat))
      throw std::invalid_argument("not a gentle Motzkin path");
    ++i;
    out.steps.push_back(down_by(k));
  }
  return out;
}

// Schröder path -> the Łukasiewicz path of its group:
// H V^k -> k-down, U V^{k+1} -> k-down, lone U -> up.
inline LatticePath schroder_to_lukasiewicz(const LatticePath& p) {
  if (p.model != PathModel::schroder) throw std::invalid_argument("expected a Schröder path");
  LatticePath out{PathModel::lukasiewicz, 0, p.y0, {}};
  std::size_t i = 0;
  while (i < p.steps.size()) {
    const Step head = p.steps[i++];
    if (head == kVertical) throw std::invalid_argument("block starts with a vertical step");
    int v = 0;
    while (i < p.steps.size() && p.steps[i] == kVertical) ++v, ++i;
    if (head == kFlat) out.steps.push_back(down_by(v));
    else if (v == 0) out.steps.push_back(kUp);
    else out.steps.push_back(down_by(v - 1));
  }
  return out;
}

template <Scalar T>
struct SchroderGroup {
  LatticePath representative;
  std::vector<LatticePath> members;
  T schroder_total;
  T lukasiewicz_weight;
};

template <Scalar T>
std::vector<SchroderGroup<T>> schroder_grouping(const VerblunskySequence<T>& vs, int n, int r, int s,
                                                std::size_t cap = kDefaultEnumerationCap) {
  detail::require_nonzero_alphas(vs, n + r);
  std::map<LatticePath, std::vector<LatticePath>> groups;
  for (auto& p : enumerate(PathModel::schroder, n, r, s, cap))
    groups[schroder_to_lukasiewicz(p)].push_back(std::move(p));
  std::vector<SchroderGroup<T>> out;
  for (auto& [rep, members] : groups) {
    T total(0);
    for (const auto& m : members) total += path_weight(m, vs);
    out.push_back({rep, std::move(members), total, path_weight(rep, vs)});
  }
  return out;
}

// ---- positivity -------------------------------------------------------------

// Rewrites ab_j as -b_j.
inline Expr beta_rewrite(const Expr& x) {
  Expr out;
  for (const auto& [m, c] : x.terms()) {
    Expr term(c);
    for (const auto& [sym, e] : m.factors()) {
      if (sym.kind == SymbolKind::alpha_bar) {
        term = term * Expr::symbol(Symbol::beta(sym.index), e);
        if (e % 2 != 0) term = -term;
      } else {
        term = term * Expr::symbol(sym, e);
      }
    }
    out += term;
  }
  return out;
}

inline bool has_negative_coefficient(const Expr& x) {
  for (const auto& [m, c] : x.terms())
    if (!c.is_real() || sgn(c.re()) < 0) return true;
  return false;
}

// mu_{n,r,s} in the (alpha, beta) variables; every coefficient must be a
// nonnegative integer.
inline Expr positivity_certificate(const VerblunskySequence<Expr>& vs, int n, int r, int s) {
  Expr b = beta_rewrite(moment_lukasiewicz(vs, n, r, s));
  for (const auto& [m, c] : b.terms())
    if (!c.is_integer() || sgn(c.re()) < 0 || m.has_negative_exponent())
      throw PositivityViolation("coefficient " + c.str() + " of " + m.str());
  return b;
}

}  // namespace opuc
