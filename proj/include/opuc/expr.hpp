#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opuc/errors.hpp"
#include "opuc/gaussian_rational.hpp"

namespace opuc {

// Generators of the symbolic ring. alpha/alpha_bar are the Verblunsky
// symbols; beta is only produced by the positivity rewrite (beta_j = -ab_j);
// root is a real generator t subject to t^2 = radicand.
enum class SymbolKind : std::uint8_t { alpha = 0, alpha_bar = 1, beta = 2, root = 3 };

struct Symbol {
  SymbolKind kind = SymbolKind::alpha;
  std::int32_t index = 0;
  std::int64_t rad_num = 0;
  std::int64_t rad_den = 1;

  static Symbol alpha(int j) { return {SymbolKind::alpha, j}; }
  static Symbol alpha_bar(int j) { return {SymbolKind::alpha_bar, j}; }
  static Symbol beta(int j) { return {SymbolKind::beta, j}; }

  bool is_root() const { return kind == SymbolKind::root; }
  Rational radicand() const { return Rational(rad_num) / Rational(rad_den); }

  Symbol conjugate() const {
    Symbol out = *this;
    if (kind == SymbolKind::alpha) out.kind = SymbolKind::alpha_bar;
    else if (kind == SymbolKind::alpha_bar) out.kind = SymbolKind::alpha;
    return out;
  }

  std::string name() const {
    switch (kind) {
      case SymbolKind::alpha: return "a" + std::to_string(index);
      case SymbolKind::alpha_bar: return "ab" + std::to_string(index);
      case SymbolKind::beta: return "b" + std::to_string(index);
      case SymbolKind::root: break;
    }
    return "sqrt(" + radicand().get_str() + ")";
  }

  // Ordered by index, then barred flag; roots after every Verblunsky symbol.
  friend bool operator<(const Symbol& a, const Symbol& b) {
    if (a.is_root() != b.is_root()) return b.is_root();
    if (a.index != b.index) return a.index < b.index;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.rad_num != b.rad_num) return a.rad_num < b.rad_num;
    return a.rad_den < b.rad_den;
  }
  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind == b.kind && a.index == b.index && a.rad_num == b.rad_num &&
           a.rad_den == b.rad_den;
  }
};

class Expr;
Expr exact_divide(const Expr& a, const Expr& b);

// Product of symbol powers; exponents may be negative (Laurent monomials),
// which is how division by ab_j in Schröder weights stays exact.
class Monomial {
 public:
  using Factor = std::pair<Symbol, int>;

  Monomial() = default;
  explicit Monomial(Symbol s, int e = 1) {
    if (e != 0) append(s, e);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int degree() const { return degree_; }
  int exponent(const Symbol& s) const {
    for (const auto& [t, e] : factors_)
      if (t == s) return e;
    return 0;
  }
  bool has_negative_exponent() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.second < 0; });
  }
  bool has_root() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.first.is_root(); });
  }

  Monomial inverse() const {
    Monomial out = *this;
    for (auto& f : out.factors_) f.second = -f.second;
    out.degree_ = -degree_;
    return out;
  }

  Monomial conjugate() const {
    Monomial out;
    for (const auto& [s, e] : factors_) out.append(s.conjugate(), e);
    std::sort(out.factors_.begin(), out.factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    return out;
  }

  // Product; root powers are reduced with t^2 = radicand and the
  // resulting rational factor is returned alongside.
  friend std::pair<Monomial, Rational> multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    Rational scale = 1;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto push = [&](const Symbol& s, int e) {
      if (s.is_root()) {
        int half = e >= 0 ? e / 2 : -((-e + 1) / 2);
        e -= 2 * half;
        if (half != 0) scale *= pow(s.radicand(), half);
      }
      if (e != 0) out.append(s, e);
    };
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
      if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
        push(ia->first, ia->second);
        ++ia;
      } else if (ia == a.factors_.end() || ib->first < ia->first) {
        push(ib->first, ib->second);
        ++ib;
      } else {
        push(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
    return {std::move(out), std::move(scale)};
  }

  // Product of root-free monomials.
  friend Monomial multiply_plain(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
      if (ia->first < ib->first) {
        out.factors_.push_back(*ia++);
      } else if (ib->first < ia->first) {
        out.factors_.push_back(*ib++);
      } else {
        if (int e = ia->second + ib->second; e != 0) out.factors_.emplace_back(ia->first, e);
        ++ia;
        ++ib;
      }
    }
    out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
    out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
  }

  // Pure lexicographic comparison on exponent vectors (a monomial order).
  friend bool lex_greater(const Monomial& a, const Monomial& b) {
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
      int ea, eb;
      if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
        ea = ia->second;
        eb = 0;
        ++ia;
      } else if (ia == a.factors_.end() || ib->first < ia->first) {
        ea = 0;
        eb = ib->second;
        ++ib;
      } else {
        ea = ia->second;
        eb = ib->second;
        ++ia;
        ++ib;
      }
      if (ea != eb) return ea > eb;
    }
    return false;
  }

  // Printing/storage order: total degree first, then factor lists.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(
        a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
        [](const Factor& x, const Factor& y) {
          if (x.first == y.first) return x.second > y.second;
          return x.first < y.first;
        });
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  std::string str() const {
    std::string out;
    for (const auto& [s, e] : factors_) {
      if (!out.empty()) out += '*';
      out += s.name();
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  friend class Expr;
  friend Expr exact_divide(const Expr& a, const Expr& b);
  void append(const Symbol& s, int e) {
    factors_.emplace_back(s, e);
    degree_ += e;
  }

  std::vector<Factor> factors_;  // sorted by Symbol, no zero exponents
  int degree_ = 0;
};

// Sparse polynomial over Q(i) in the symbols above. Immutable in spirit:
// every operation returns a canonical value with no zero coefficients.
class Expr {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  Expr() = default;
  Expr(long v) : Expr(GaussianRational(v)) {}  // NOLINT(implicit)
  Expr(const GaussianRational& c) {            // NOLINT(implicit)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  Expr(const Monomial& m, const GaussianRational& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
  }

  static Expr symbol(Symbol s, int e = 1) { return Expr(Monomial(s, e), 1); }
  static Expr alpha(int j) { return symbol(Symbol::alpha(j)); }
  static Expr alpha_bar(int j) { return symbol(Symbol::alpha_bar(j)); }
  // t with t^2 = radicand (radicand > 0, not a rational square).
  static Expr root(const Rational& radicand) {
    Rational r = radicand;
    r.canonicalize();
    if (sgn(r) <= 0) throw std::invalid_argument("root radicand must be positive");
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
      throw std::invalid_argument("root radicand too large");
    Symbol s{SymbolKind::root, 0, r.get_num().get_si(), r.get_den().get_si()};
    return symbol(s);
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  GaussianRational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GaussianRational{} : it->second;
  }
  GaussianRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational{} : it->second;
  }

  bool has_negative_exponent() const {
    for (const auto& [m, c] : terms_)
      if (m.has_negative_exponent()) return true;
    return false;
  }
  bool has_root() const {
    for (const auto& [m, c] : terms_)
      if (m.has_root()) return true;
    return false;
  }
  std::set<Symbol> symbols() const {
    std::set<Symbol> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [s, e] : m.factors()) out.insert(s);
    return out;
  }

  Expr operator-() const {
    Expr out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  Expr& operator+=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Expr& operator-=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Expr& operator*=(const Expr& o) {
    *this = *this * o;
    return *this;
  }
  Expr& operator/=(const Expr& o) {
    *this = *this / o;
    return *this;
  }

  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b) {
    Expr out;
    if (a.is_zero() || b.is_zero()) return out;
    if (b.is_constant()) return a.scaled(b.terms_.begin()->second);
    if (a.is_constant()) return b.scaled(a.terms_.begin()->second);
    if (!a.has_root() && !b.has_root()) {
      GaussianRational c;
      for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
          c = ca;
          c *= cb;
          out.add_term(multiply_plain(ma, mb), c);
        }
      return out;
    }
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto [m, scale] = multiply(ma, mb);
        GaussianRational c = ca * cb;
        if (scale != 1) c *= GaussianRational(scale);
        out.add_term(m, c);
      }
    }
    return out;
  }
  friend Expr operator/(const Expr& a, const Expr& b) { return exact_divide(a, b); }

  friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  Expr scaled(const GaussianRational& c) const {
    Expr out;
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& [m, v] : out.terms_) v *= c;
    return out;
  }

  // Swaps a_j <-> ab_j and conjugates every coefficient.
  friend Expr conj(const Expr& x) {
    Expr out;
    for (const auto& [m, c] : x.terms_) out.terms_.emplace(m.conjugate(), conj(c));
    return out;
  }

  friend Expr pow(const Expr& x, int e) {
    if (e < 0) return Expr(1) / pow(x, -e);
    Expr out = 1, base = x;
    while (e > 0) {
      if (e & 1) out *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return out;
  }

  // Canonical text: terms in monomial order, names a0, ab0, b0.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string term;
      if (m.is_one()) {
        term = c.str();
      } else if (c.is_one()) {
        term = m.str();
      } else if (c == GaussianRational(-1)) {
        term = "-" + m.str();
      } else {
        term = c.str() + "*" + m.str();
      }
      if (out.empty()) {
        out = term;
      } else if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

  // Exact quotient a/b. Throws NotExact when b does not divide a in the
  // Laurent polynomial ring (or in Q(i)(t) when roots are involved).
  friend Expr exact_divide(const Expr& a, const Expr& b);

 private:
  void add_term(Monomial&& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.lower_bound(m);
    if (it == terms_.end() || terms_.key_comp()(m, it->first)) {
      terms_.emplace_hint(it, std::move(m), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::pair<const Monomial, GaussianRational>& lex_leading() const {
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (lex_greater(it->first, best->first)) best = it;
    return *best;
  }

  Terms terms_;
};

Expr conj(const Expr& x);
Expr pow(const Expr& x, int e);

inline Expr exact_divide(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return {};
  if (b.size() == 1) {
    const auto& [m, c] = *b.terms_.begin();
    return a * Expr(m.inverse(), GaussianRational(1) / c);
  }
  if (b.has_root()) {
    // b = c0 + c1*t over Q(i): multiply through by c0 - c1*t.
    const Symbol* root = nullptr;
    for (const auto& [m, c] : b.terms_) {
      if (m.is_one()) continue;
      if (m.factors().size() != 1 || !m.factors()[0].first.is_root() ||
          m.factors()[0].second != 1)
        throw NotExact("division by a mixed root/symbol expression");
      root = &m.factors()[0].first;
    }
    const Symbol t = *root;
    GaussianRational c0 = b.constant_term();
    GaussianRational c1 = b.coefficient(Monomial(t));
    Expr partner = Expr(c0) - Expr::symbol(t).scaled(c1);
    GaussianRational denom = c0 * c0 - c1 * c1 * GaussianRational(t.radicand());
    return (a * partner).scaled(GaussianRational(1) / denom);
  }

  // Strip the monomial content of b, so that b' is coprime to every symbol.
  std::map<Symbol, int> low;
  for (const Symbol& s : b.symbols()) {
    int e = 0;
    bool first = true;
    for (const auto& [m, c] : b.terms_) {
      int here = m.exponent(s);
      e = first ? here : std::min(e, here);
      first = false;
    }
    low[s] = e;
  }
  Monomial content;
  for (const auto& [s, e] : low)
    if (e != 0) content.append(s, e);
  Expr divisor = b * Expr(content.inverse(), 1);

  // Shift a into the polynomial ring.
  std::map<Symbol, int> neg;
  for (const auto& [m, c] : a.terms_)
    for (const auto& [s, e] : m.factors())
      if (e < 0) neg[s] = std::min(neg[s], e);
  Monomial shift;
  for (const auto& [s, e] : neg) shift.append(s, -e);
  Expr shifted = a * Expr(shift, 1);

  // Remainder kept in lex order so the leading term is always begin().
  auto by_lex = [](const Monomial& x, const Monomial& y) { return lex_greater(x, y); };
  std::map<Monomial, GaussianRational, decltype(by_lex)> rem(by_lex);
  for (const auto& [m, c] : shifted.terms_) rem.emplace(m, c);

  const auto& [lead_m, lead_c] = divisor.lex_leading();
  Monomial lead_inv = lead_m.inverse();
  GaussianRational lead_c_inv = GaussianRational(1) / lead_c;
  Expr quotient;
  GaussianRational c;
  while (!rem.empty()) {
    auto top = rem.begin();
    Monomial qm = multiply(top->first, lead_inv).first;
    if (qm.has_negative_exponent()) throw NotExact("remainder is nonzero");
    GaussianRational qc = top->second * lead_c_inv;
    for (const auto& [dm, dc] : divisor.terms_) {
      c = qc;
      c *= dc;
      if (c.is_zero()) continue;
      auto [it, inserted] = rem.try_emplace(multiply(qm, dm).first, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.add_term(std::move(qm), qc);
  }
  return quotient * Expr(multiply(shift.inverse(), content.inverse()).first, 1);
}

// Numeric evaluation; ab_j evaluates to conj(a_j), b_j to -conj(a_j).
inline std::complex<double> evaluate_numeric(
    const Expr& x, const std::unordered_map<int, std::complex<double>>& assignment) {
  std::complex<double> total = 0;
  for (const auto& [m, c] : x.terms()) {
    std::complex<double> v = c.to_complex();
    for (const auto& [s, e] : m.factors()) {
      std::complex<double> base;
      if (s.is_root()) {
        base = std::sqrt(s.radicand().get_d());
      } else {
        auto it = assignment.find(s.index);
        if (it == assignment.end())
          throw std::out_of_range("missing assignment for " + s.name());
        base = s.kind == SymbolKind::alpha       ? it->second
               : s.kind == SymbolKind::alpha_bar ? std::conj(it->second)
                                                 : -std::conj(it->second);
      }
      v *= std::pow(base, e);
    }
    total += v;
  }
  return total;
}

}  // namespace opuc
