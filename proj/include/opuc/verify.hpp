#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "opuc/opuc.hpp"

namespace opuc {

enum class Method { lukasiewicz, gmotzkin, schroder, matrix_u, matrix_cmv, oracle, closed };

inline const std::vector<Method>& all_methods() {
  static const std::vector<Method> m = {Method::lukasiewicz, Method::gmotzkin, Method::schroder, Method::matrix_u,
                                        Method::matrix_cmv,  Method::oracle,   Method::closed};
  return m;
}

inline const char* to_string(Method m) {
  switch (m) {
    case Method::lukasiewicz: return "lukasiewicz";
    case Method::gmotzkin: return "gmotzkin";
    case Method::schroder: return "schroder";
    case Method::matrix_u: return "matrix_u";
    case Method::matrix_cmv: return "matrix_cmv";
    case Method::oracle: return "oracle";
    case Method::closed: return "closed";
  }
  return "?";
}

inline Method parse_method(std::string_view s) {
  for (Method m : all_methods())
    if (s == to_string(m)) return m;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

// mu_{n,r,s} by one method. `closed` needs a family with closed forms.
template <Scalar T>
T evaluate_moment(Method m, const VerblunskySequence<T>& vs, int n, int r, int s,
                  const std::optional<FamilySpec>& family = std::nullopt) {
  switch (m) {
    case Method::lukasiewicz: return moment_lukasiewicz(vs, n, r, s);
    case Method::gmotzkin: return moment_gmotzkin(vs, n, r, s);
    case Method::schroder: return moment_schroder(vs, n, r, s);
    case Method::matrix_u: return u_power_entry(vs, n, r, s);
    case Method::matrix_cmv: return cmv_walk_entry(vs, n, r, s);
    case Method::oracle: return moment_oracle(vs, n, r, s);
    case Method::closed:
      if (!family) throw UnsupportedFamily("closed forms need a named family");
      return closed_moment_nrs<T>(*family, n, r, s);
  }
  throw std::logic_error("unreachable");
}

// Methods that `all` runs for a given source.
inline std::vector<Method> applicable_methods(const std::optional<FamilySpec>& family) {
  std::vector<Method> out(all_methods().begin(), all_methods().end() - 1);
  if (family && family->info().closed_forms) out.push_back(Method::closed);
  return out;
}

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  Mode mode = Mode::symbolic;
  int max = 4;
  std::uint64_t seed = 1;
  int samples = 20;   // random sequences per numeric suite
  unsigned jobs = 1;  // worker tasks for fan-out
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s = {"cross-model", "reciprocity", "determinants",
                                             "families",    "linearization", "positivity"};
  return s;
}

namespace detail {

inline std::string key(int n, int r, int s) {
  return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
}

inline std::vector<VerblunskySequence<Complex>> random_sequences(const VerifyOptions& o, int length) {
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> radius(0.0, 0.9), angle(0.0, 6.283185307179586);
  std::vector<VerblunskySequence<Complex>> out;
  for (int i = 0; i < o.samples; ++i) {
    std::vector<Complex> table;
    for (int j = 0; j < length; ++j) table.push_back(std::polar(radius(rng), angle(rng)));
    out.push_back(VerblunskySequence<Complex>::from_table(std::move(table)));
  }
  return out;
}

// Runs work(i) for i in [0, count) over `jobs` tasks and concatenates in index order.
template <class Work>
std::vector<Check> fan_out(int count, unsigned jobs, Work work) {
  std::vector<std::vector<Check>> parts(count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) parts[i] = work(i);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned j = 0; j < jobs; ++j)
      tasks.push_back(std::async(std::launch::async, [&, j] {
        for (int i = static_cast<int>(j); i < count; i += static_cast<int>(jobs)) parts[i] = work(i);
      }));
    for (auto& t : tasks) t.get();
  }
  std::vector<Check> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline std::vector<std::tuple<int, int, int>> triples(int max, bool symbolic) {
  std::vector<std::tuple<int, int, int>> out;
  for (int n = 0; n <= max; ++n)
    for (int r = 0; r <= max; ++r) {
      if (symbolic && n + r > max) continue;
      const int s_max = symbolic ? n + r + 1 : max;
      for (int s = 0; s <= s_max; ++s) out.emplace_back(n, r, s);
    }
  return out;
}

inline std::vector<Check> cross_model(const VerifyOptions& o) {
  const bool sym = o.mode == Mode::symbolic;
  const auto keys = triples(o.max, sym);
  const std::vector<Method> methods(all_methods().begin(), all_methods().end() - 1);
  if (sym) {
    auto vs = VerblunskySequence<Expr>::generic();
    return fan_out(static_cast<int>(keys.size()), o.jobs, [&](int i) {
      auto [n, r, s] = keys[i];
      Expr ref = moment_lukasiewicz(vs, n, r, s);
      std::string bad;
      for (Method m : methods)
        if (!(evaluate_moment(m, vs, n, r, s) == ref)) bad += std::string(" ") + to_string(m);
      return std::vector<Check>{{"cross-model", key(n, r, s), bad.empty(),
                                 bad.empty() ? ref.str() : "disagree:" + bad}};
    });
  }
  const auto seqs = random_sequences(o, 2 * o.max + 4);
  return fan_out(static_cast<int>(keys.size()), o.jobs, [&](int i) {
    auto [n, r, s] = keys[i];
    std::string bad;
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      Complex ref = moment_lukasiewicz(seqs[k], n, r, s);
      for (Method m : methods)
        if (!approx_equal(evaluate_moment(m, seqs[k], n, r, s), ref))
          bad += " " + std::string(to_string(m)) + "@" + std::to_string(k);
    }
    return std::vector<Check>{{"cross-model", key(n, r, s), bad.empty(),
                               bad.empty() ? std::to_string(seqs.size()) + " sequences agree" : "disagree:" + bad}};
  });
}

inline const char* kReciprocityForm = "mu_{-n,r,s} = conj(mu_{n,s,r}) * kappa_r / kappa_s";

inline std::vector<Check> reciprocity(const VerifyOptions& o) {
  std::vector<Check> out;
  const int m = std::min(o.max, 5);
  auto check = [&](auto& vs, auto& table) {
    for (int n = 0; n <= m; ++n)
      for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= m; ++s) {
          auto neg = moment_negative(vs, n, r, s);
          auto lhs = neg * kappa(vs, s);
          auto rhs = conjugate(moment_lukasiewicz(vs, n, s, r)) * kappa(vs, r);
          bool ok = same_value(lhs, rhs) && same_value(neg, moment_oracle(table, -n, r, s));
          out.push_back({"reciprocity", key(n, r, s), ok, ok ? kReciprocityForm : "mismatch"});
        }
  };
  if (o.mode == Mode::symbolic) {
    auto vs = VerblunskySequence<Expr>::generic();
    MomentTable<Expr> table(vs);
    check(vs, table);
  } else {
    for (auto& vs : random_sequences(o, 3 * m + 4)) {
      MomentTable<Complex> table(vs);
      check(vs, table);
    }
  }
  return out;
}

inline std::vector<Check> determinants(const VerifyOptions& o) {
  std::vector<Check> out;
  auto run = [&](const auto& table, int max_n, int max_id) {
    const auto& vs = table.sequence();
    for (int n = 0; n <= max_n; ++n) {
      auto det = toeplitz_det(table, n);
      auto expected = rho_staircase(vs, n);
      out.push_back({"determinants", "toeplitz n=" + std::to_string(n), same_value(det, expected),
                     "prod rho_k^(n-k) = " + render(expected)});
    }
    for (int mm = -2; mm <= 2; ++mm)
      for (int n = 0; n <= max_id; ++n) {
        auto res = det_identity_check(table, mm, n);
        out.push_back({"determinants", "identity m=" + std::to_string(mm) + " n=" + std::to_string(n), res.equal,
                       render(res.lhs)});
      }
  };
  if (o.mode == Mode::symbolic) {
    run(MomentTable<Expr>(VerblunskySequence<Expr>::generic()), std::min(o.max, 4), std::min(o.max, 3));
  } else {
    for (auto& vs : random_sequences(o, 16)) run(MomentTable<Complex>(vs), std::min(o.max + 2, 6), 3);
  }
  return out;
}

inline std::vector<FamilySpec> default_family_specs() {
  auto lit = [](const char* s) { return parse_gaussian(s).value; };
  return {{Family::bernstein_szego, lit("2/5+1/5i")}, {Family::mass_point, lit("1/2")},
          {Family::circular_jacobi, lit("3/2")},      {Family::rogers_szego, lit("1/3")},
          {Family::single_nontrivial, lit("1")},      {Family::single_nontrivial, lit("1/2")},
          {Family::geronimus, lit("1/2")},            {Family::geronimus, lit("1")},
          {Family::geronimus, lit("3/10+2/5i")},      {Family::al_salam_carlitz, lit("1/2")}};
}

template <Scalar T>
std::vector<Check> family_checks(const FamilySpec& sp, int max) {
  std::vector<Check> out;
  auto vs = verblunsky_of<T>(sp);
  const std::string tag = sp.str();
  auto push = [&](std::string name, bool ok) { out.push_back({"families", tag + " " + name, ok, ""}); };
  if (sp.family == Family::al_salam_carlitz) {
    for (int n = 0; n <= max + 1; ++n) {
      bool ok = same_value(moment_lukasiewicz(vs, n, 0, 0), u_power_entry(vs, n, 0, 0));
      bool rejected = false;
      try {
        moment_schroder(vs, std::max(n, 1), 0, 0);
      } catch (const ZeroVerblunsky& e) {
        rejected = e.index() == 0;
      }
      push("n=" + std::to_string(n) + " matrix=paths, schroder rejected", ok && rejected);
    }
    return out;
  }
  for (int n = 0; n <= max + 1; ++n)
    for (int m = 0; m <= max + 1; ++m) {
      T ref = moment_lukasiewicz(vs, n, 0, m);
      T got = sp.family == Family::geronimus ? geronimus_gf_moment(scalar_from<T>(sp.param), n, m)
                                             : closed_moment_nm<T>(sp, n, m);
      push("nm" + key(n, 0, m), same_value(got, ref));
    }
  for (int n = 0; n <= max; ++n)
    for (int r = 0; r <= max; ++r)
      for (int s = 0; s <= max; ++s) {
        T ref = moment_lukasiewicz(vs, n, r, s);
        T got = sp.family == Family::geronimus ? geronimus_moment_nrs(scalar_from<T>(sp.param), n, r, s)
                                               : closed_moment_nrs<T>(sp, n, r, s);
        push("nrs" + key(n, r, s), same_value(got, ref));
      }
  return out;
}

inline bool symbolic_ok(const FamilySpec& sp) {
  return !(sp.family == Family::single_nontrivial && sp.param.re() != 1);
}

inline std::vector<Check> families(const VerifyOptions& o) {
  const auto specs = default_family_specs();
  const int m = std::min(o.max, 5);
  return fan_out(static_cast<int>(specs.size()), o.jobs, [&](int i) {
    const auto& sp = specs[i];
    if (o.mode == Mode::symbolic && symbolic_ok(sp)) return family_checks<Expr>(sp, m);
    // Numeric sequences must stay inside the open disk; alpha = 1 is exact-only.
    if (sp.family == Family::geronimus && sp.param.norm() == 1) return std::vector<Check>{};
    return family_checks<Complex>(sp, m);
  });
}

template <Scalar T>
std::vector<Check> linearization_checks(const VerblunskySequence<T>& vs, int max, const std::string& tag) {
  std::vector<Check> out;
  MomentTable<T> t(vs);
  auto combine = [&](const std::vector<T>& c, bool star) {
    LaurentPoly<T> acc;
    for (int s = 0; s < static_cast<int>(c.size()); ++s) {
      auto p = t.phi(s);
      acc += conjugate(c[s]) * (star ? p.phi_star : p.phi);
    }
    return acc;
  };
  auto close = [](const LaurentPoly<T>& f, const LaurentPoly<T>& g) {
    LaurentPoly<T> d = f - g;
    for (const auto& [k, c] : d.coeffs())
      if (!same_value(c, T(0)) && !same_value(f.coeff(k), g.coeff(k))) return false;
    return true;
  };
  for (int n = 0; n <= max; ++n)
    for (int r = 0; n + r <= max; ++r) {
      std::vector<T> mu, nuv, et, th;
      for (int s = 0; s <= n + r; ++s) {
        mu.push_back(moment_lukasiewicz(vs, n, r, s));
        nuv.push_back(nu(vs, n, r, s));
        et.push_back(eta(vs, n, r, s));
        th.push_back(theta(vs, n, r, s));
      }
      auto pr = t.phi(r);
      bool ok = close(combine(mu, false), pr.phi.shifted(n)) && close(combine(nuv, false), pr.phi_star.shifted(n)) &&
                close(combine(et, true), pr.phi.shifted(n)) && close(combine(th, true), pr.phi_star.shifted(n));
      out.push_back({"linearization", tag + " round-trips n=" + std::to_string(n) + " r=" + std::to_string(r), ok, ""});
    }
  bool closed = true;
  for (int r = 0; r <= max; ++r) {
    closed = closed && same_value(eta(vs, 0, r, r), T(-1) / vs.alpha_bar(r - 1));
    for (int s = 0; s <= max; ++s) closed = closed && same_value(theta(vs, 0, r, s), r == s ? T(1) : T(0));
  }
  out.push_back({"linearization", tag + " eta_{0,r,r} and theta_{0,r,s}", closed, ""});
  const int dim = 7;
  auto prod = nu0_matrix(vs, dim) * tau_matrix(vs, dim);
  bool inv = true;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) inv = inv && same_value(prod(i, j), i == j ? T(1) : T(0));
  out.push_back({"linearization", tag + " tau inverts (nu_{0,i,j})", inv, ""});
  return out;
}

inline std::vector<Check> linearization(const VerifyOptions& o) {
  if (o.mode == Mode::symbolic)
    return linearization_checks(VerblunskySequence<Expr>::generic(), std::min(o.max, 3), "generic");
  std::vector<Check> out;
  int k = 0;
  for (auto& vs : random_sequences(o, 16)) {
    auto part = linearization_checks(vs, std::min(o.max + 2, 6), "sample" + std::to_string(k++));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline std::vector<Check> positivity(const VerifyOptions& o) {
  std::vector<Check> out;
  auto vs = VerblunskySequence<Expr>::generic();
  const int m = std::min(o.max, 4);
  for (int n = 0; n <= m; ++n)
    for (int r = 0; n + r <= m; ++r)
      for (int s = 0; s <= n + r; ++s) {
        bool ok = true;
        std::string detail;
        try {
          detail = positivity_certificate(vs, n, r, s).str();
        } catch (const PositivityViolation& e) {
          ok = false;
          detail = e.what();
        }
        out.push_back({"positivity", "mu" + key(n, r, s), ok, detail});
      }
  bool nu_pos = true, poly = true, eta_neg = false, theta_neg = false;
  for (int n = 0; n <= m; ++n)
    for (int r = 0; n + r <= m; ++r)
      for (int s = 0; s <= n + r; ++s) {
        Expr v = beta_rewrite(nu(vs, n, r, s));
        nu_pos = nu_pos && !v.has_negative_exponent() && !has_negative_coefficient(v);
        Expr scale = vs.alpha_bar(s) * vs.alpha_bar(s - 1);
        Expr e = scale * eta(vs, n, r, s), th = scale * theta(vs, n, r, s);
        poly = poly && !e.has_negative_exponent() && !th.has_negative_exponent();
        eta_neg = eta_neg || has_negative_coefficient(beta_rewrite(e));
        theta_neg = theta_neg || has_negative_coefficient(beta_rewrite(th));
      }
  out.push_back({"positivity", "nu beta-positive", nu_pos, ""});
  out.push_back({"positivity", "ab_s ab_{s-1} eta, ab_s ab_{s-1} theta polynomial", poly, ""});
  out.push_back({"positivity", "eta and theta have a negative beta-coefficient", eta_neg && theta_neg, ""});
  return out;
}

}  // namespace detail

// Runs one named suite or "all"; checks come back in a deterministic order.
inline std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& o) {
  if (suite == "all") {
    std::vector<Check> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, o);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "cross-model") return detail::cross_model(o);
  if (suite == "reciprocity") return detail::reciprocity(o);
  if (suite == "determinants") return detail::determinants(o);
  if (suite == "families") return detail::families(o);
  if (suite == "linearization") return detail::linearization(o);
  if (suite == "positivity") return detail::positivity(o);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace opuc
